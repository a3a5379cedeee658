#include "cherednik/dunkl.hpp"

#include <cmath>
#include <numbers>

#include "cherednik/jacobi.hpp"
#include "cherednik/opdam.hpp"
#include "cherednik/quadrature.hpp"
#include "cherednik/specfun.hpp"

namespace cherednik {

namespace {

constexpr double ln2 = std::numbers::ln2;

double log_c_alpha(double alpha) {
    return std::lgamma(alpha + 1.0) - 0.5 * std::log(std::numbers::pi) - std::lgamma(alpha + 0.5);
}

bool dunkl_support(double x, double y, double z) {
    return x != 0.0 && y != 0.0 && z != 0.0 && in_open_triangle(x, y, z);
}

// log of (x+y+z)(-x+y+z)(x-y+z)(x+y-z), even in each argument and positive on the support
double log_quartic(double x, double y, double z) {
    const double a = std::abs(x), b = std::abs(y), c = std::abs(z);
    return std::log(a + b + c) + std::log(-a + b + c) + std::log(a - b + c) + std::log(a + b - c);
}

void check_alpha(double alpha) {
    if (!(alpha > -0.5)) throw ParameterError("alpha must exceed -1/2");
}

}  // namespace

bool LimitReport::strictly_decreasing() const {
    for (std::size_t i = 1; i < errors.size(); ++i)
        if (!(errors[i] < errors[i - 1])) return false;
    return true;
}

cplx dunkl_E(double alpha, cplx lambda, double x) {
    check_alpha(alpha);
    const cplx u = lambda * x;
    if (u == 0.0) return 1.0;
    return bessel_j_norm(alpha, u) + I * u / (2.0 * (alpha + 1.0)) * bessel_j_norm(alpha + 1.0, u);
}

double dunkl_kernel_k(double alpha, double x, double y, double z) {
    check_alpha(alpha);
    if (!dunkl_support(x, y, z)) return 0.0;
    const double xyz = x * y * z;
    const double cubic = (x + y + z) * (-x + y + z) * (x - y + z) / xyz;
    const double lk = -(2.0 * alpha + 1.0) * ln2 + log_c_alpha(alpha) + (alpha - 0.5) * log_quartic(x, y, z) -
                      2.0 * alpha * std::log(std::abs(xyz));
    return std::exp(lk) * cubic;
}

double dunkl_kernel_k_bracket(double alpha, double x, double y, double z) {
    check_alpha(alpha);
    if (!dunkl_support(x, y, z)) return 0.0;
    auto s = [](double a, double b, double c) { return (a * a + b * b - c * c) / (2.0 * a * b); };
    const double bracket = 1.0 - s(x, y, z) + s(z, y, x) + s(x, z, y);
    const double lk = -2.0 * alpha * ln2 + log_c_alpha(alpha) + (alpha - 0.5) * log_quartic(x, y, z) -
                      2.0 * alpha * std::log(std::abs(x * y * z));
    return std::exp(lk) * bracket;
}

cplx integrate_dunkl_kernel(double alpha, double x, double y, const std::function<cplx(double)>& f, double abs_tol) {
    check_alpha(alpha);
    if (x == 0.0) return f(y);
    if (y == 0.0) return f(x);
    const double lo = std::abs(std::abs(x) - std::abs(y)), hi = std::abs(x) + std::abs(y);
    const bool touches_zero = lo <= 1e-12 * hi;
    QuadratureSpec spec;
    spec.family = QuadratureFamily::gauss_jacobi;
    spec.left_exponent = touches_zero ? 2.0 * alpha : alpha - 0.5;
    spec.right_exponent = alpha - 0.5;
    spec.abs_tol = abs_tol;
    spec.rel_tol = abs_tol;
    spec.max_nodes = 4096;
    cplx total = 0.0;
    for (double s : {1.0, -1.0}) {
        auto h = [&](double u) -> cplx {
            const double k = dunkl_kernel_k(alpha, x, y, s * u);
            return k == 0.0 ? cplx(0.0) : f(s * u) * k * std::pow(u, 2.0 * alpha + 1.0);
        };
        total += integrate(h, {touches_zero ? 0.0 : lo, hi}, spec).value;
    }
    return total;
}

double dunkl_kernel_mass(double alpha, double x, double y) {
    return integrate_dunkl_kernel(alpha, x, y, [](double) { return cplx(1.0); }).real();
}

double dunkl_product_check(double alpha, cplx lambda, double x, double y) {
    cplx rhs = integrate_dunkl_kernel(alpha, x, y, [&](double z) { return dunkl_E(alpha, lambda, z); });
    return std::abs(dunkl_E(alpha, lambda, x) * dunkl_E(alpha, lambda, y) - rhs);
}

LimitReport rational_limit_G(double alpha, cplx lambda, double x, const std::vector<double>& epsilons) {
    check_alpha(alpha);
    Params p(alpha, alpha);
    LimitReport r;
    r.epsilons = epsilons;
    const cplx target = dunkl_E(alpha, lambda, x);
    for (double eps : epsilons) {
        if (!(eps > 0.0)) throw ParameterError("epsilon must be positive");
        r.errors.push_back(std::abs(G(p, lambda / eps, eps * x) - target));
    }
    return r;
}

LimitReport rational_limit_kernel(double alpha, double x, double y, double z, const std::vector<double>& epsilons) {
    check_alpha(alpha);
    Params p(alpha, alpha);
    LimitReport r;
    r.epsilons = epsilons;
    const double target = dunkl_kernel_k(alpha, x, y, z);
    for (double eps : epsilons) {
        if (!(eps > 0.0)) throw ParameterError("epsilon must be positive");
        const double scaled = std::pow(eps, 2.0 * alpha + 2.0) * kernel_K(p, eps * x, eps * y, eps * z);
        r.errors.push_back(std::abs(scaled - target));
    }
    return r;
}

LimitReport rational_limit_product(double alpha, cplx lambda, double x, double y, const std::vector<double>& epsilons) {
    check_alpha(alpha);
    Params p(alpha, alpha);
    LimitReport r;
    r.epsilons = epsilons;
    const cplx target = integrate_dunkl_kernel(alpha, x, y, [&](double z) { return dunkl_E(alpha, lambda, z); });
    for (double eps : epsilons) {
        if (!(eps > 0.0)) throw ParameterError("epsilon must be positive");
        const cplx l = lambda / eps;
        KernelMeasure mu = measure_mu(p, eps * x, eps * y);
        cplx v = integrate_measure(mu, [&](double z) { return G(p, l, z); }, {1e-11, 4096});
        r.errors.push_back(std::abs(v - target));
    }
    return r;
}

}  // namespace cherednik
