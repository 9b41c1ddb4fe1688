#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wahkon/core/rng.hpp"
#include "wahkon/simd/simd.hpp"

using namespace wahkon;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n, double lo, double hi) {
    std::vector<double> v(n);
    for (auto& x : v) x = rng.uniform(lo, hi);
    return v;
}

// Awkward lengths on purpose: exercise the vector body and the scalar tail.
const std::size_t kLens[] = {1, 2, 3, 4, 5, 7, 8, 9, 16, 31, 200, 257};

}  // namespace

TEST_CASE("scalar backend is always present") {
    CHECK(std::string(simd::scalar_ops().name) == "scalar");
    CHECK(simd::ops().gauss_row != nullptr);
}

TEST_CASE("gauss_row scalar values") {
    const auto& ops = simd::scalar_ops();
    double xs[3] = {0.0, 1.0, 2.0};
    double out[3];
    ops.gauss_row(0.0, xs, 3, 2.0, out);  // ell = 0.5
    CHECK(out[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(out[1] == doctest::Approx(std::exp(-2.0)).epsilon(1e-15));
    CHECK(out[2] == doctest::Approx(std::exp(-8.0)).epsilon(1e-15));
}

TEST_CASE("avx2 backend matches scalar reference") {
    if (!simd::avx2_available()) return;
    const auto& sc = simd::scalar_ops();
    const auto& vx = simd::avx2_ops();
    Rng rng(20240817);

    for (std::size_t n : kLens) {
        auto xs = random_vec(rng, n, -6.0, 6.0);
        auto b = random_vec(rng, n, -3.0, 3.0);
        const double t = rng.uniform(-6.0, 6.0);

        SUBCASE("") {}  // keep doctest from collapsing loop output

        std::vector<double> k0(n), k1(n), kd0(n), kd1(n);
        sc.gauss_row(t, xs.data(), n, 2.0, k0.data());
        vx.gauss_row(t, xs.data(), n, 2.0, k1.data());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::fabs(k0[i] - k1[i]) <= 1e-13 * std::max(k0[i], 1e-290));
        }

        sc.gauss_row_scaled(t, xs.data(), n, 2.0, k0.data(), kd0.data());
        vx.gauss_row_scaled(t, xs.data(), n, 2.0, k1.data(), kd1.data());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::fabs(kd0[i] - kd1[i]) <= 1e-13 * std::max(std::fabs(kd0[i]), 1e-290));
        }

        const double d0 = sc.dot(xs.data(), b.data(), n);
        const double d1 = vx.dot(xs.data(), b.data(), n);
        CHECK(d1 == doctest::Approx(d0).epsilon(1e-11));

        CHECK(vx.sum(xs.data(), n) == doctest::Approx(sc.sum(xs.data(), n)).epsilon(1e-11));
        CHECK(vx.sum_sq_diff(xs.data(), b.data(), n) ==
              doctest::Approx(sc.sum_sq_diff(xs.data(), b.data(), n)).epsilon(1e-11));

        auto y0 = b, y1 = b;
        sc.axpy(0.37, xs.data(), y0.data(), n);
        vx.axpy(0.37, xs.data(), y1.data(), n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::fabs(y0[i] - y1[i]) <= 4e-16 * std::max(1.0, std::fabs(y0[i])));
        }
    }
}

TEST_CASE("avx2 gauss_row exp accuracy across the full argument range") {
    if (!simd::avx2_available()) return;
    const auto& vx = simd::avx2_ops();

    // gauss arguments -(t-x)^2 * s sweep from 0 down to deep underflow
    for (double d = 0.0; d <= 42.0; d += 0.03125) {
        double x = 0.0, out = 0.0;
        vx.gauss_row(d, &x, 1, 0.5, &out);  // arg = -d^2/2
        const double ref = std::exp(-d * d * 0.5);
        if (ref < 1e-290) {
            CHECK(out <= 1e-290);
        } else {
            CHECK(std::fabs(out - ref) <= 1e-13 * ref);
        }
    }
    // exact special cases
    double x = 2.5, out = -1.0;
    vx.gauss_row(2.5, &x, 1, 2.0, &out);
    CHECK(out == 1.0);
}

TEST_CASE("gauss_row is bitwise symmetric in its arguments") {
    const auto& ops = simd::ops();
    Rng rng(7);
    auto pts = random_vec(rng, 64, -4.0, 4.0);
    std::vector<double> row_i(64), row_j(64);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 64; ++j) {
            ops.gauss_row(pts[i], pts.data(), 64, 2.0, row_i.data());
            ops.gauss_row(pts[j], pts.data(), 64, 2.0, row_j.data());
            CHECK(row_i[j] == row_j[i]);
        }
    }
}
