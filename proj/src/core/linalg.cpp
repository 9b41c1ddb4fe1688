#include "wahkon/core/linalg.hpp"

#include <cmath>

#include "wahkon/simd/simd.hpp"

namespace wahkon {
namespace {

constexpr double kJitterStart = 1e-10;
constexpr double kJitterCap = 1e-4;

// Attempt an in-place lower Cholesky of m + jitter*I. A pivot at or below
// 1e-14 times the diagonal scale counts as failure so that numerically
// singular Gram matrices fall through to the jitter ladder.
bool try_cholesky(const Matrix& m, double jitter, Matrix& out) {
    const auto& ops = simd::ops();
    const std::size_t n = m.rows();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::fabs(m(i, i)));
    const double floor = std::max(scale, 1.0) * 1e-14;

    out = Matrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j) + jitter - ops.dot(out.row(j), out.row(j), j);
        if (!(d > floor)) return false;
        const double ljj = std::sqrt(d);
        out(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            out(i, j) = (m(i, j) - ops.dot(out.row(i), out.row(j), j)) / ljj;
        }
    }
    return true;
}

}  // namespace

SpdMatrix::SpdMatrix(Matrix entries) : m_(std::move(entries)) {
    require(m_.rows() == m_.cols(), "SpdMatrix: entries must be square");
    const std::size_t n = m_.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = m_(i, j), b = m_(j, i);
            const double tol = 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
            if (std::fabs(a - b) > tol)
                throw DomainError("SpdMatrix: entries not symmetric");
        }
    }
}

const Matrix& SpdMatrix::cholesky() const {
    if (factored_) return chol_;
    if (try_cholesky(m_, 0.0, chol_)) {
        jitter_ = 0.0;
        factored_ = true;
        return chol_;
    }
    for (double jitter = kJitterStart; jitter <= kJitterCap * (1.0 + 1e-12); jitter *= 10.0) {
        if (try_cholesky(m_, jitter, chol_)) {
            jitter_ = jitter;
            factored_ = true;
            return chol_;
        }
    }
    throw NonPositiveDefinite("cholesky failed with jitter up to 1e-4");
}

Vector SpdMatrix::solve(const Vector& b) const {
    require(b.size() == size(), "spd_solve: rhs length mismatch");
    const Matrix& l = cholesky();
    const std::size_t n = size();
    const auto& ops = simd::ops();

    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = (b[i] - ops.dot(l.row(i), y.data(), i)) / l(i, i);
    }
    Vector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x[k];
        x[ii] = s / l(ii, ii);
    }
    return x;
}

Vector spd_solve(const SpdMatrix& a, const Vector& b) {
    return a.solve(b);
}

double mahalanobis_sq(const Vector& x, const SpdMatrix& cov) {
    require(x.size() == cov.size(), "mahalanobis_sq: dimension mismatch");
    const Vector sol = cov.solve(x);
    const double d2 = simd::ops().dot(x.data(), sol.data(), x.size());
    return d2 < 0.0 ? 0.0 : d2;
}

Vector gaussian_sample(Rng& rng, const Vector& mean, const SpdMatrix& cov) {
    require(mean.size() == cov.size(), "gaussian_sample: dimension mismatch");
    const std::size_t n = mean.size();

    bool all_zero = true;
    for (std::size_t i = 0; i < n * n && all_zero; ++i) {
        all_zero = cov.entries().data()[i] == 0.0;
    }
    if (all_zero) return mean;  // degenerate covariance; no jitter noise

    const Matrix& l = cov.cholesky();
    Vector z(n);
    for (auto& v : z) v = rng.normal();
    Vector x(mean);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] += simd::ops().dot(l.row(i), z.data(), i + 1);
    }
    return x;
}

}  // namespace wahkon
