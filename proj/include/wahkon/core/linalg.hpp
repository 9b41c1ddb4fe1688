#pragma once

#include "wahkon/core/matrix.hpp"
#include "wahkon/core/rng.hpp"

namespace wahkon {

// Symmetric positive (semi)definite matrix with a lazily cached Cholesky
// factor. When the bare factorization fails the jitter ladder
// 1e-10, 1e-9, ..., 1e-4 is climbed (adding jitter*I) and the amount that
// made the factorization succeed is recorded in jitter_applied().
//
// The factor cache is not synchronized; do not share one instance across
// threads that may trigger the first factorization concurrently.
class SpdMatrix {
public:
    SpdMatrix() = default;

    // Validates squareness and symmetry (1e-12 relative).
    explicit SpdMatrix(Matrix entries);

    std::size_t size() const { return m_.rows(); }
    const Matrix& entries() const { return m_; }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    double jitter_applied() const { return jitter_; }

    // Lower-triangular factor L with L L^T = entries + jitter_applied()*I.
    const Matrix& cholesky() const;

    Vector solve(const Vector& b) const;

private:
    Matrix m_;
    mutable Matrix chol_;
    mutable double jitter_ = 0.0;
    mutable bool factored_ = false;
};

// x with A x = b (Cholesky, jitter ladder on failure).
Vector spd_solve(const SpdMatrix& a, const Vector& b);

// x^T cov^{-1} x, clamped at 0.
double mahalanobis_sq(const Vector& x, const SpdMatrix& cov);

// Draw from N(mean, cov) as mean + L z with z iid standard normal.
// An all-zero covariance returns the mean exactly.
Vector gaussian_sample(Rng& rng, const Vector& mean, const SpdMatrix& cov);

}  // namespace wahkon
