#include "wahkon/kernel/gaussian.hpp"

#include <cmath>

#include "wahkon/simd/simd.hpp"

namespace wahkon::kernel {

void KernelConfig::validate() const {
    if (!(lengthscale > 0.0) || !std::isfinite(lengthscale))
        throw DomainError("KernelConfig: lengthscale must be positive");
}

double eval(const KernelConfig& cfg, double x, double y) {
    const double d = x - y;
    return std::exp(-d * d * cfg.inv_two_ell2());
}

SpdMatrix gram(const KernelConfig& cfg, const Vector& points) {
    const std::size_t n = points.size();
    require(n >= 1, "gram: need at least one point");
    Matrix m(n, n);
    const auto& ops = simd::ops();
    const double s = cfg.inv_two_ell2();
    for (std::size_t i = 0; i < n; ++i) {
        ops.gauss_row(points[i], points.data(), n, s, m.row(i));
    }
    return SpdMatrix(std::move(m));
}

Matrix cross(const KernelConfig& cfg, const Vector& points, const Vector& grid) {
    require(!points.empty() && !grid.empty(), "cross: empty inputs");
    Matrix m(points.size(), grid.size());
    const auto& ops = simd::ops();
    const double s = cfg.inv_two_ell2();
    for (std::size_t i = 0; i < points.size(); ++i) {
        ops.gauss_row(points[i], grid.data(), grid.size(), s, m.row(i));
    }
    return m;
}

SpdMatrix grid_gram(const KernelConfig& cfg, const Vector& grid) {
    return gram(cfg, grid);
}

}  // namespace wahkon::kernel
