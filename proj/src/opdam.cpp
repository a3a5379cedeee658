#include "cherednik/opdam.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cherednik/jacobi.hpp"
#include "cherednik/quadrature.hpp"
#include "cherednik/specfun.hpp"

namespace cherednik {

namespace {

constexpr double ln2 = std::numbers::ln2;

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Ridders' extrapolated central difference; returns the estimate with the smallest error.
cplx ridders_derivative(const ComplexFunction& f, double x, double h0) {
    constexpr int ntab = 10;
    constexpr double con = 1.4, con2 = con * con;
    cplx a[ntab][ntab];
    double h = h0;
    a[0][0] = (f(x + h) - f(x - h)) / (2.0 * h);
    double err = 1e300;
    cplx ans = a[0][0];
    for (int i = 1; i < ntab; ++i) {
        h /= con;
        a[0][i] = (f(x + h) - f(x - h)) / (2.0 * h);
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            double errt = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
            if (errt <= err) {
                err = errt;
                ans = a[j][i];
            }
        }
        if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err) break;
    }
    return ans;
}

// sinh(u) with its sign and log modulus
struct SignedLog {
    double sign;
    double log_abs;
};

SignedLog signed_log_sinh(double u) { return {sgn(u), log_sinh(std::abs(u))}; }

double log_abs_sinh2(double u) { return log_sinh(2.0 * std::abs(u)); }

// Pieces shared by the alpha > beta kernel and its parts.
struct GeneralPieces {
    double prefactor;
    detail::AngularMoments m;
    double coth3;  // coth x coth y coth z, signed
};

GeneralPieces general_pieces(const Params& p, double x, double y, double z) {
    const double a = std::abs(x), b = std::abs(y), c = std::abs(z);
    detail::Triangle t = detail::make_triangle(a, b, c);
    const double pw = p.alpha() - p.beta() - 1.0;
    GeneralPieces g;
    g.m = detail::angular_moments(t, pw, p.beta());
    g.prefactor =
        std::exp(std::log(M_const(p.alpha(), p.beta())) - 2.0 * p.alpha() * t.log_sss + pw * (ln2 + t.log_ccc));
    g.coth3 = sgn(x) * sgn(y) * sgn(z) / (std::tanh(a) * std::tanh(b) * std::tanh(c));
    return g;
}

bool kernel_support(double x, double y, double z) {
    return x != 0.0 && y != 0.0 && z != 0.0 && in_open_triangle(x, y, z);
}

void require_kernel_params(const Params& p) {
    if (!p.equal() && p.beta() == -0.5)
        throw ParameterError("no kernel is constructed for beta = -1/2 < alpha");
}

// sinh(x+y+z) sinh(-x+y+z) sinh(x-y+z) as sign and log modulus
SignedLog cubic_sinh(double x, double y, double z) {
    SignedLog u = signed_log_sinh(x + y + z), v = signed_log_sinh(-x + y + z), w = signed_log_sinh(x - y + z);
    return {u.sign * v.sign * w.sign, u.log_abs + v.log_abs + w.log_abs};
}

// log of the even quartic sinh(x+y+z) sinh(-x+y+z) sinh(x-y+z) sinh(x+y-z) inside the triangle
double log_quartic(double x, double y, double z) {
    const double a = std::abs(x), b = std::abs(y), c = std::abs(z);
    return log_sinh(a + b + c) + log_sinh(-a + b + c) + log_sinh(a - b + c) + log_sinh(a + b - c);
}

double kernel_K_equal(double alpha, double x, double y, double z) {
    if (!kernel_support(x, y, z)) return 0.0;
    SignedLog s3 = cubic_sinh(x, y, z);
    const double sign_d = sgn(x) * sgn(y) * sgn(z);
    const double log_d = log_abs_sinh2(x) + log_abs_sinh2(y) + log_abs_sinh2(z);
    double lk = (4.0 * alpha + 2.0) * ln2 + std::log(M_equal(alpha)) + (x + y - z) +
                (alpha - 0.5) * log_quartic(x, y, z) - (2.0 * alpha + 1.0) * log_d + s3.log_abs;
    return s3.sign * sign_d * std::exp(lk);
}

// 2 S4 / D where S4 is the even quartic and D = sinh 2x sinh 2y sinh 2z
double odd_remainder_equal(double x, double y, double z) {
    const double sign_d = sgn(x) * sgn(y) * sgn(z);
    const double log_d = log_abs_sinh2(x) + log_abs_sinh2(y) + log_abs_sinh2(z);
    return 2.0 * sign_d * std::exp(log_quartic(x, y, z) - log_d);
}

}  // namespace

void FiniteDifferenceScheme::validate() const {
    if (order != 2 && order != 4) throw ParameterError("finite-difference order must be 2 or 4");
    if (!(step >= 1e-6 && step <= 1e-2)) throw ParameterError("finite-difference step must lie in [1e-6, 1e-2]");
}

cplx G(const Params& p, cplx lambda, double x) {
    EvenOdd s = split_even_odd(p, lambda, x);
    return s.even + s.odd;
}

cplx G_derivative_form(const Params& p, cplx lambda, double x) {
    const cplx den = p.rho() - I * lambda;
    if (den == 0.0) throw DomainError("derivative form of G is undefined at lambda = -i rho");
    auto f = [&](double u) { return phi(p, lambda, u); };
    return phi(p, lambda, x) - ridders_derivative(f, x, 0.1) / den;
}

EvenOdd split_even_odd(const Params& p, cplx lambda, double x) {
    cplx even = phi(p, lambda, x);
    if (x == 0.0) return {even, 0.0};
    cplx odd = (p.rho() + I * lambda) / (4.0 * (p.alpha() + 1.0)) * std::sinh(2.0 * x) * phi(p.shifted(), lambda, x);
    return {even, odd};
}

cplx finite_difference(const ComplexFunction& f, double x, const FiniteDifferenceScheme& fd) {
    fd.validate();
    const double h = fd.step;
    if (fd.order == 2) return (f(x + h) - f(x - h)) / (2.0 * h);
    return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h);
}

cplx cherednik_apply(const Params& p, const ComplexFunction& f, double x, const FiniteDifferenceScheme& fd) {
    if (x == 0.0) throw DomainError("T is applied at x != 0 only");
    const cplx fx = f(x), fm = f(-x);
    const double coef = (2.0 * p.alpha() + 1.0) / std::tanh(x) + (2.0 * p.beta() + 1.0) * std::tanh(x);
    return finite_difference(f, x, fd) + coef * (fx - fm) / 2.0 - p.rho() * fm;
}

cplx cherednik_apply_k(const Params& p, const ComplexFunction& f, double x, const FiniteDifferenceScheme& fd) {
    if (x == 0.0) throw DomainError("T is applied at x != 0 only");
    const double k1 = p.alpha() - p.beta(), k2 = p.beta() + 0.5;
    const cplx fx = f(x), fm = f(-x);
    const double coef = -2.0 * k1 / std::expm1(-2.0 * x) - 4.0 * k2 / std::expm1(-4.0 * x);
    return finite_difference(f, x, fd) + coef * (fx - fm) - (k1 + 2.0 * k2) * fx;
}

double sigma_chi(double x, double y, double z, double chi) {
    if (x == 0.0 || y == 0.0) return 0.0;
    return (std::cosh(x) * std::cosh(y) - std::cosh(z) * std::cos(chi)) / (std::sinh(x) * std::sinh(y));
}

double sigma2(double x, double y, double z) {
    if (x == 0.0 || y == 0.0) return 0.0;
    return (std::cosh(2.0 * x) * std::cosh(2.0 * y) - std::cosh(2.0 * z)) /
           (std::sinh(2.0 * x) * std::sinh(2.0 * y));
}

double g_fun(double x, double y, double z, double chi) {
    const double cx = std::cosh(x), cy = std::cosh(y), cz = std::cosh(z);
    return 1.0 - cx * cx - cy * cy - cz * cz + 2.0 * cx * cy * cz * std::cos(chi);
}

double kernel_K(const Params& p, double x, double y, double z) {
    require_kernel_params(p);
    if (p.equal()) return kernel_K_equal(p.alpha(), x, y, z);
    if (!kernel_support(x, y, z)) return 0.0;
    GeneralPieces g = general_pieces(p, x, y, z);
    const double r = p.rho() / (p.beta() + 0.5);
    double bracket = g.m.one - sgn(x) * sgn(y) * g.m.s_abc + sgn(x) * sgn(z) * g.m.s_acb +
                     sgn(z) * sgn(y) * g.m.s_cba + r * g.coth3 * g.m.sin2;
    return g.prefactor * bracket;
}

double kernel_K_equal_recipe(double alpha, double x, double y, double z) {
    if (!(alpha > -0.5)) throw ParameterError("alpha must exceed -1/2");
    if (!kernel_support(x, y, z)) return 0.0;
    const double w = kernel_W_equal(alpha, std::abs(x), std::abs(y), std::abs(z));
    const double even_and_mixed = 0.5 * w * (1.0 - sigma2(x, y, z) + sigma2(z, y, x) + sigma2(x, z, y));
    return even_and_mixed + odd_remainder_equal(x, y, z) * w;
}

double kernel_part(const Params& p, KernelPart part, double x, double y, double z) {
    require_kernel_params(p);
    if (!kernel_support(x, y, z)) return 0.0;
    if (part == KernelPart::odd_odd)
        return kernel_part(p, KernelPart::odd_odd_first, x, y, z) + kernel_part(p, KernelPart::odd_odd_second, x, y, z);
    if (p.equal()) {
        const double w = kernel_W_equal(p.alpha(), std::abs(x), std::abs(y), std::abs(z));
        switch (part) {
            case KernelPart::even_even: return 0.5 * w;
            case KernelPart::odd_even: return 0.5 * sigma2(x, z, y) * w;
            case KernelPart::even_odd: return 0.5 * sigma2(z, y, x) * w;
            case KernelPart::odd_odd_first: return -0.5 * sigma2(x, y, z) * w;
            default: return odd_remainder_equal(x, y, z) * w;
        }
    }
    GeneralPieces g = general_pieces(p, x, y, z);
    switch (part) {
        case KernelPart::even_even: return g.prefactor * g.m.one;
        case KernelPart::odd_even: return g.prefactor * sgn(x) * sgn(z) * g.m.s_acb;
        case KernelPart::even_odd: return g.prefactor * sgn(z) * sgn(y) * g.m.s_cba;
        case KernelPart::odd_odd_first: return -g.prefactor * sgn(x) * sgn(y) * g.m.s_abc;
        default: return g.prefactor * p.rho() / (p.beta() + 0.5) * g.coth3 * g.m.sin2;
    }
}

double rho_identity_check(double x, double y, double z) {
    if (x == 0.0 || y == 0.0 || z == 0.0) throw DomainError("identity needs nonzero arguments");
    double lhs = 1.0 - sigma2(x, y, z) + sigma2(z, y, x) + sigma2(x, z, y);
    double rhs = 4.0 * std::sinh(x + y + z) * std::sinh(-x + y + z) * std::sinh(x - y + z) * std::cosh(x + y - z) /
                 (std::sinh(2.0 * x) * std::sinh(2.0 * y) * std::sinh(2.0 * z));
    return std::abs(lhs - rhs);
}

KernelMeasure measure_mu(const Params& p, double x, double y) {
    KernelMeasure mu;
    mu.params = p;
    mu.x = x;
    mu.y = y;
    const double lo = std::abs(std::abs(x) - std::abs(y)), hi = std::abs(x) + std::abs(y);
    mu.negative = {-hi, -lo};
    mu.positive = {lo, hi};
    if (x == 0.0 || y == 0.0) {
        mu.kind = KernelMeasure::Kind::dirac;
        mu.atom = x == 0.0 ? y : x;
        return mu;
    }
    require_kernel_params(p);
    mu.kind = KernelMeasure::Kind::density;
    mu.density = [p, x, y](double z) { return kernel_K(p, x, y, z); };
    return mu;
}

cplx integrate_kernel(const Params& p, double x, double y, const std::function<double(double)>& k,
                      const ComplexFunction& f, const MeasureTolerance& tol) {
    const double lo = std::abs(std::abs(x) - std::abs(y)), hi = std::abs(x) + std::abs(y);
    if (!(hi > 0.0)) return 0.0;
    const double edge = p.alpha() - 0.5;
    const bool touches_zero = lo <= 1e-12 * hi;
    QuadratureSpec spec;
    spec.family = QuadratureFamily::gauss_jacobi;
    spec.left_exponent = touches_zero ? 2.0 * p.alpha() : edge;
    spec.right_exponent = edge;
    spec.abs_tol = tol.abs_tol;
    spec.rel_tol = tol.abs_tol;
    spec.max_nodes = tol.max_nodes;
    const Interval iv{touches_zero ? 0.0 : lo, hi};
    cplx total = 0.0;
    for (double s : {1.0, -1.0}) {
        auto h = [&](double u) -> cplx {
            const double kv = k(s * u);
            return kv == 0.0 ? cplx(0.0) : f(s * u) * kv * weight_A(p, u);
        };
        total += integrate(h, iv, spec).value;
    }
    return total;
}

cplx integrate_measure(const KernelMeasure& mu, const ComplexFunction& f, const MeasureTolerance& tol) {
    if (mu.kind == KernelMeasure::Kind::dirac) return f(mu.atom);
    return integrate_kernel(mu.params, mu.x, mu.y, mu.density, f, tol);
}

double measure_mass(const KernelMeasure& mu, const MeasureTolerance& tol) {
    return integrate_measure(mu, [](double) { return cplx(1.0); }, tol).real();
}

double measure_total_variation(const KernelMeasure& mu, const MeasureTolerance& tol) {
    if (mu.kind == KernelMeasure::Kind::dirac) return 1.0;
    auto abs_density = [&mu](double z) { return std::abs(mu.density(z)); };
    return integrate_kernel(mu.params, mu.x, mu.y, abs_density, [](double) { return cplx(1.0); }, tol).real();
}

double total_variation_bound(const Params& p) {
    if (p.equal()) return 2.5;
    const double a = p.alpha(), b = p.beta();
    return 4.0 + std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 0.5) - std::lgamma(a + 0.5) - std::lgamma(b + 1.0));
}

double product_check_G(const Params& p, cplx lambda, double x, double y, const MeasureTolerance& tol) {
    KernelMeasure mu = measure_mu(p, x, y);
    cplx rhs = integrate_measure(mu, [&](double z) { return G(p, lambda, z); }, tol);
    return std::abs(G(p, lambda, x) * G(p, lambda, y) - rhs);
}

double partial_product_check(const Params& p, KernelPart part, cplx lambda, double x, double y,
                             const MeasureTolerance& tol) {
    if (x == 0.0 || y == 0.0) throw DomainError("partial products need x, y != 0");
    EvenOdd ex = split_even_odd(p, lambda, x), ey = split_even_odd(p, lambda, y);
    cplx lhs;
    switch (part) {
        case KernelPart::even_even: lhs = ex.even * ey.even; break;
        case KernelPart::odd_even: lhs = ex.odd * ey.even; break;
        case KernelPart::even_odd: lhs = ex.even * ey.odd; break;
        case KernelPart::odd_odd: lhs = ex.odd * ey.odd; break;
        case KernelPart::odd_odd_first: lhs = odd_split(p, lambda, x, y).first; break;
        case KernelPart::odd_odd_second: lhs = odd_split(p, lambda, x, y).second; break;
    }
    auto k = [&](double z) { return kernel_part(p, part, x, y, z); };
    cplx rhs = integrate_kernel(p, x, y, k, [&](double z) { return G(p, lambda, z); }, tol);
    return std::abs(lhs - rhs);
}

OddSplit odd_split(const Params& p, cplx lambda, double x, double y) {
    const double rho = p.rho(), a1 = p.alpha() + 1.0;
    const cplx base = std::sinh(2.0 * x) * std::sinh(2.0 * y) * phi(p.shifted(), lambda, x) * phi(p.shifted(), lambda, y);
    OddSplit s;
    s.first = -(rho * rho + lambda * lambda) / (16.0 * a1 * a1) * base;
    s.second = rho * (rho + I * lambda) / (8.0 * a1 * a1) * base;
    s.odd_product = split_even_odd(p, lambda, x).odd * split_even_odd(p, lambda, y).odd;
    return s;
}

}  // namespace cherednik
