#include <cmath>

#include "wahkon/simd/simd.hpp"

namespace wahkon::simd {
namespace {

void gauss_row_scalar(double t, const double* xs, std::size_t n, double inv_two_ell2,
                      double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double d = t - xs[i];
        out[i] = std::exp(-d * d * inv_two_ell2);
    }
}

void gauss_row_scaled_scalar(double t, const double* xs, std::size_t n, double inv_two_ell2,
                             double* k_out, double* kd_out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double d = t - xs[i];
        const double k = std::exp(-d * d * inv_two_ell2);
        k_out[i] = k;
        kd_out[i] = d * k;
    }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum_scalar(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{
        "scalar",          gauss_row_scalar, gauss_row_scaled_scalar,
        dot_scalar,        axpy_scalar,      sum_scalar,
        sum_sq_diff_scalar,
    };
    return ops;
}

}  // namespace wahkon::simd
