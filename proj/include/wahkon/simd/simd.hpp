#pragma once

#include <cstddef>

// Data-parallel primitives behind every kernel-matrix, link-evaluation and
// reduction loop in the library. Two backends ship: a scalar reference and
// an AVX2+FMA variant selected at runtime. Both must agree to tight
// tolerances (see tests/test_simd.cpp); the scalar path is the semantic
// reference.

namespace wahkon::simd {

enum class Backend { scalar, avx2 };

struct Ops {
    const char* name;

    // out[i] = exp(-(t - xs[i])^2 * inv_two_ell2)
    void (*gauss_row)(double t, const double* xs, std::size_t n, double inv_two_ell2,
                      double* out);

    // k_out as gauss_row; kd_out[i] = (t - xs[i]) * k_out[i].
    // kd is the ingredient of the kernel derivative d/dt K(x,t) = -(t-x)/ell^2 K.
    void (*gauss_row_scaled)(double t, const double* xs, std::size_t n, double inv_two_ell2,
                             double* k_out, double* kd_out);

    double (*dot)(const double* a, const double* b, std::size_t n);

    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);

    double (*sum)(const double* x, std::size_t n);

    // sum_i (a[i] - b[i])^2
    double (*sum_sq_diff)(const double* a, const double* b, std::size_t n);
};

const Ops& scalar_ops();

bool avx2_available();
// Precondition: avx2_available(). Exposed directly so equivalence tests can
// drive both backends regardless of the active selection.
const Ops& avx2_ops();

// Active backend: best available at first use, overridable via the
// WAHKON_SIMD environment variable ("scalar", "avx2", "auto") or
// set_backend(). set_backend is not synchronized against concurrent compute;
// call it during startup only.
const Ops& ops();
void set_backend(Backend b);

}  // namespace wahkon::simd
