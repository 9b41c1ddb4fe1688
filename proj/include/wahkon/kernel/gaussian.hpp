#pragma once

#include "wahkon/core/linalg.hpp"
#include "wahkon/core/matrix.hpp"

namespace wahkon::kernel {

// Gaussian kernel K(x,y) = exp(-(x-y)^2 / (2 ell^2)). Normalized: K(t,t)=1.
// Two lengthscales appear in practice: 0.5 for model links and 1/sqrt(2)
// for the prior study (where K(x,y) = exp(-(x-y)^2)).
struct KernelConfig {
    double lengthscale = 0.5;

    double inv_two_ell2() const { return 0.5 / (lengthscale * lengthscale); }
    double inv_ell2() const { return 1.0 / (lengthscale * lengthscale); }
    void validate() const;
};

double eval(const KernelConfig& cfg, double x, double y);

// n x n kernel matrix over one coordinate's sample values. Exactly
// symmetric with unit diagonal by construction.
SpdMatrix gram(const KernelConfig& cfg, const Vector& points);

// n x G matrix [K(points_i, grid_g)].
Matrix cross(const KernelConfig& cfg, const Vector& points, const Vector& grid);

// G x G kernel matrix of the inducing grid.
SpdMatrix grid_gram(const KernelConfig& cfg, const Vector& grid);

}  // namespace wahkon::kernel
