#include "wahkon/simd/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define WAHKON_HAVE_AVX2_TU 1
#include <immintrin.h>

#include <cmath>
#endif

namespace wahkon::simd {

#if WAHKON_HAVE_AVX2_TU
namespace {

// exp for 4 doubles, Cephes-style: n = round(x/ln2), r = x - n*ln2 with the
// split-constant reduction, e^r from the rational approximation
//   e^r = 1 + 2 r P(r^2) / (Q(r^2) - r P(r^2)),  |r| <= ln2/2,
// then scaling by 2^n through the exponent bits. Max error ~2 ulp.
// Inputs below -708.396 return exactly 0 (true value is subnormal there).
inline __m256d exp_pd(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
    const __m256d underflow = _mm256_set1_pd(-708.396418532264106224);
    const __m256d overflow = _mm256_set1_pd(709.782712893383996843);

    const __m256d zero_mask = _mm256_cmp_pd(x, underflow, _CMP_LT_OQ);
    __m256d xc = _mm256_min_pd(_mm256_max_pd(x, underflow), overflow);

    const __m256d nf =
        _mm256_round_pd(_mm256_mul_pd(xc, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(nf, ln2_hi, xc);
    r = _mm256_fnmadd_pd(nf, ln2_lo, r);
    const __m256d rr = _mm256_mul_pd(r, r);

    __m256d p = _mm256_set1_pd(1.26177193074810590878e-4);
    p = _mm256_fmadd_pd(p, rr, _mm256_set1_pd(3.02994407707441961300e-2));
    p = _mm256_fmadd_pd(p, rr, _mm256_set1_pd(9.99999999999999999910e-1));
    p = _mm256_mul_pd(p, r);

    __m256d q = _mm256_set1_pd(3.00198505138664455042e-6);
    q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.52448340349684104192e-3));
    q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.27265548208155028766e-1));
    q = _mm256_fmadd_pd(q, rr, _mm256_set1_pd(2.0));

    __m256d er = _mm256_div_pd(p, _mm256_sub_pd(q, p));
    er = _mm256_fmadd_pd(_mm256_set1_pd(2.0), er, _mm256_set1_pd(1.0));

    // 2^n: n in [-1022, 1024] after clamping, so the biased exponent stays normal.
    const __m128i n32 = _mm256_cvtpd_epi32(nf);
    const __m256i n64 = _mm256_cvtepi32_epi64(n32);
    const __m256i pow2 =
        _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
    er = _mm256_mul_pd(er, _mm256_castsi256_pd(pow2));

    return _mm256_andnot_pd(zero_mask, er);
}

inline double hsum_pd(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

void gauss_row_avx2(double t, const double* xs, std::size_t n, double inv_two_ell2,
                    double* out) {
    const __m256d tv = _mm256_set1_pd(t);
    const __m256d sv = _mm256_set1_pd(-inv_two_ell2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(tv, _mm256_loadu_pd(xs + i));
        const __m256d arg = _mm256_mul_pd(_mm256_mul_pd(d, d), sv);
        _mm256_storeu_pd(out + i, exp_pd(arg));
    }
    for (; i < n; ++i) {
        const double d = t - xs[i];
        out[i] = std::exp(-d * d * inv_two_ell2);
    }
}

void gauss_row_scaled_avx2(double t, const double* xs, std::size_t n, double inv_two_ell2,
                           double* k_out, double* kd_out) {
    const __m256d tv = _mm256_set1_pd(t);
    const __m256d sv = _mm256_set1_pd(-inv_two_ell2);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(tv, _mm256_loadu_pd(xs + i));
        const __m256d arg = _mm256_mul_pd(_mm256_mul_pd(d, d), sv);
        const __m256d k = exp_pd(arg);
        _mm256_storeu_pd(k_out + i, k);
        _mm256_storeu_pd(kd_out + i, _mm256_mul_pd(d, k));
    }
    for (; i < n; ++i) {
        const double d = t - xs[i];
        const double k = std::exp(-d * d * inv_two_ell2);
        k_out[i] = k;
        kd_out[i] = d * k;
    }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double acc = hsum_pd(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, yv);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

double sum_avx2(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum_pd(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double sum_sq_diff_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum_pd(acc);
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

}  // namespace

bool avx2_available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const Ops& avx2_ops() {
    static const Ops ops{
        "avx2",          gauss_row_avx2, gauss_row_scaled_avx2,
        dot_avx2,        axpy_avx2,      sum_avx2,
        sum_sq_diff_avx2,
    };
    return ops;
}

#else  // non-x86 build: no AVX2 backend

bool avx2_available() {
    return false;
}

const Ops& avx2_ops() {
    return scalar_ops();
}

#endif

}  // namespace wahkon::simd
