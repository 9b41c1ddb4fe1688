#include "wahkon/core/special.hpp"

#include <cmath>
#include <limits>

#include "wahkon/common.hpp"

namespace wahkon {
namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr int kMaxIter = 300;
constexpr double kEps = 3e-16;

double gamma_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_cont_frac(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double std_normal_pdf(double z) {
    return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double std_normal_cdf(double z) {
    return 0.5 * std::erfc(-z * M_SQRT1_2);
}

double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw DomainError("gamma_p: invalid arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_series(a, x);
    return 1.0 - gamma_cont_frac(a, x);
}

double chi_square_quantile(int k, double p) {
    if (k < 1) throw DomainError("chi_square_quantile: k must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("chi_square_quantile: p must be in (0,1)");

    const double a = 0.5 * k;
    auto cdf = [a](double x) { return gamma_p(a, 0.5 * x); };

    double hi = k + 10.0 * std::sqrt(2.0 * k) + 10.0;
    while (cdf(hi) < p) hi *= 2.0;
    double lo = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < p ? lo : hi) = mid;
        if (hi - lo < 1e-12 * std::max(1.0, lo)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace wahkon
