#include "cherednik/jacobi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cherednik/specfun.hpp"

namespace cherednik {

namespace {

constexpr double ln2 = std::numbers::ln2;

// Crossover between the sinh^2 and tanh^2 representations.
constexpr double small_x = 0.25;

double sinc(double d) { return d == 0.0 ? 1.0 : std::sin(d) / d; }

// c_{a,b}(-lambda) / c_{a+k+l,b+k-l}(-lambda); Gamma(-i lambda) cancels, so lambda = 0 is fine.
cplx c_ratio(const Params& p, int k, int l, cplx lambda) {
    const double a = p.alpha(), b = p.beta();
    const double a2 = a + k + l, b2 = b + k - l;
    const double rho = a + b + 1.0, rho2 = a2 + b2 + 1.0;
    const cplx il = I * lambda;
    cplx v = ln_gamma(cplx(a + 1.0)) - ln_gamma(cplx(a2 + 1.0)) + (rho - rho2) * ln2 +
             ln_gamma((rho2 - il) / 2.0) + ln_gamma((a2 - b2 + 1.0 - il) / 2.0) -
             ln_gamma((rho - il) / 2.0) - ln_gamma((a - b + 1.0 - il) / 2.0);
    return std::exp(v);
}

bool on_boundary(double a, double b, double c) {
    return c == std::abs(a - b) || c == a + b;
}

}  // namespace

cplx phi_sinh_form(const Params& p, cplx lambda, double x) {
    const cplx il = I * lambda;
    const double s = std::sinh(x);
    return gauss_2f1((p.rho() + il) / 2.0, (p.rho() - il) / 2.0, p.alpha() + 1.0, -s * s);
}

cplx phi_tanh_form(const Params& p, cplx lambda, double x) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 1.0;
    const cplx il = I * lambda;
    const double lc = log_cosh(ax);
    const double t = std::tanh(ax);
    const double w = std::exp(-2.0 * lc);
    cplx f = gauss_2f1_complement((p.rho() + il) / 2.0, (p.alpha() - p.beta() + 1.0 + il) / 2.0,
                                  p.alpha() + 1.0, t * t, w);
    return std::exp(-(p.rho() + il) * lc) * f;
}

cplx phi(const Params& p, cplx lambda, double x) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 1.0;
    if (ax <= small_x) return phi_sinh_form(p, lambda, ax);
    return phi_tanh_form(p, lambda, ax);
}

cplx phi_derivative(const Params& p, cplx lambda, double x) {
    const double rho = p.rho();
    return -((rho * rho + lambda * lambda) / (4.0 * (p.alpha() + 1.0))) * std::sinh(2.0 * x) *
           phi(p.shifted(), lambda, x);
}

double quadratic_transform_check(double alpha, cplx lambda, double x) {
    Params half(alpha, -0.5), equal(alpha, alpha);
    return std::abs(phi(half, lambda, x) - phi(equal, 2.0 * lambda, 0.5 * x));
}

cplx c_func(const Params& p, cplx lambda) {
    const double a = p.alpha(), b = p.beta();
    const cplx il = I * lambda;
    cplx num = ln_gamma(cplx(2.0 * a + 1.0)) - ln_gamma(cplx(a + 0.5)) + ln_gamma(il) +
               ln_gamma((a - b + il) / 2.0);
    cplx r1 = rgamma(a - b + il), r2 = rgamma((p.rho() + il) / 2.0);
    if (r1 == 0.0 || r2 == 0.0) return 0.0;
    return std::exp(num - ln_gamma(a - b + il) - ln_gamma((p.rho() + il) / 2.0));
}

cplx c_func_duplicated(const Params& p, cplx lambda) {
    const double a = p.alpha(), b = p.beta();
    const cplx il = I * lambda;
    cplx num = ln_gamma(cplx(a + 1.0)) + (p.rho() - il) * ln2 + ln_gamma(il);
    cplx d1 = (p.rho() + il) / 2.0, d2 = (a - b + 1.0 + il) / 2.0;
    if (rgamma(d1) == 0.0 || rgamma(d2) == 0.0) return 0.0;
    return std::exp(num - ln_gamma(d1) - ln_gamma(d2));
}

double inv_abs_c_squared(const Params& p, double lambda) {
    const double a = p.alpha(), b = p.beta();
    const double l = std::abs(lambda);
    if (l == 0.0) return 0.0;
    // |Gamma(i l)|^2 = pi / (l sinh(pi l))
    double log_ls = std::log(l) + (l < 5.0 ? std::log(std::sinh(pi * l)) : log_sinh(pi * l));
    double v = 2.0 * ln_gamma(cplx(p.rho(), l) / 2.0).real() +
               2.0 * ln_gamma(cplx(a - b + 1.0, l) / 2.0).real() + log_ls - std::log(pi) -
               2.0 * std::lgamma(a + 1.0) - 2.0 * p.rho() * ln2;
    return std::exp(v);
}

cplx Phi(const Params& p, cplx lambda, double x) {
    const double ax = std::abs(x);
    if (ax == 0.0) throw DomainError("Phi is singular at x = 0");
    const cplx il = I * lambda;
    const double lc = log_cosh(ax);
    const double w = std::exp(-2.0 * lc);
    const double t = std::tanh(ax);
    cplx f = gauss_2f1_complement((p.rho() - il) / 2.0, (p.alpha() - p.beta() + 1.0 - il) / 2.0,
                                  1.0 - il, w, t * t);
    return std::exp((-p.rho() + il) * (lc + ln2)) * f;
}

double phi_asymptotic_residual(const Params& p, cplx lambda, double x) {
    if (std::abs(lambda.real()) < 1e-14 && lambda.imag() == std::nearbyint(lambda.imag()))
        throw DomainError("asymptotic expansion excludes lambda in iZ");
    if (x == 0.0) throw DomainError("asymptotic expansion needs x != 0");
    cplx rhs = c_func(p, lambda) * Phi(p, lambda, x) + c_func(p, -lambda) * Phi(p, -lambda, x);
    return std::abs(phi(p, lambda, x) - rhs);
}

double phi0_asymptotic_constant(const Params& p) {
    return std::exp((p.rho() + 1.0) * ln2 + std::lgamma(p.alpha() + 1.0) - std::lgamma(p.rho() / 2.0) -
                    std::lgamma((p.alpha() - p.beta() + 1.0) / 2.0));
}

double log_weight_A(const Params& p, double z) {
    z = std::abs(z);
    return (2.0 * p.alpha() + 1.0) * log_sinh(z) + (2.0 * p.beta() + 1.0) * log_cosh(z);
}

double weight_A(const Params& p, double z) {
    if (z < 0.0) throw DomainError("weight_A needs z >= 0");
    if (z == 0.0) return 0.0;
    return std::exp(log_weight_A(p, z));
}

double M_const(double alpha, double beta) {
    if (!(alpha > beta)) throw ParameterError("M_const needs alpha > beta");
    return std::exp(std::lgamma(alpha + 1.0) - 0.5 * std::log(pi) - std::lgamma(alpha - beta) -
                    std::lgamma(beta + 0.5));
}

double M_equal(double alpha) {
    return std::exp(std::lgamma(alpha + 1.0) - 0.5 * std::log(pi) - std::lgamma(alpha + 0.5));
}

bool in_open_triangle(double x, double y, double z) {
    const double ax = std::abs(x), ay = std::abs(y), az = std::abs(z);
    return std::abs(ax - ay) < az && az < ax + ay;
}

namespace detail {

Triangle make_triangle(double a, double b, double c) {
    Triangle t{};
    t.a = a;
    t.b = b;
    t.c = c;
    t.ca = std::cosh(a);
    t.cb = std::cosh(b);
    t.cc = std::cosh(c);
    t.sa = std::sinh(a);
    t.sb = std::sinh(b);
    t.sc = std::sinh(c);
    t.log_ccc = log_cosh(a) + log_cosh(b) + log_cosh(c);
    t.log_sss = log_sinh(a) + log_sinh(b) + log_sinh(c);
    const double h1 = 0.5 * (a + b + c), h2 = 0.5 * (a + b - c);
    const double h3 = 0.5 * (c + a - b), h4 = 0.5 * (c - a + b);
    // 1 - B = 2 sinh h1 sinh h2 sinh h3 sinh h4 / (ca cb cc)
    const double log_1mb = ln2 + log_sinh(h1) + log_sinh(h2) + log_sinh(h3) + log_sinh(h4) - t.log_ccc;
    t.chi0 = 2.0 * std::asin(std::sqrt(0.5 * std::exp(log_1mb)));
    // (c1 c2 - c3) / (s1 s2) with c1 c2 - c3 = sinh g1 sinh g2 - sinh g3 sinh g4
    auto ratio = [](double s1, double s2, double g1, double g2, double g3, double g4) {
        return (std::sinh(g1) * std::sinh(g2) - std::sinh(g3) * std::sinh(g4)) / (s1 * s2);
    };
    if (std::max({a, b, c}) < 20.0) {
        t.d_abc = ratio(t.sa, t.sb, h1, h2, h3, h4);
        t.d_acb = ratio(t.sa, t.sc, h1, 0.5 * (a + c - b), 0.5 * (b + a - c), 0.5 * (b - a + c));
        t.d_cba = ratio(t.sc, t.sb, h1, 0.5 * (c + b - a), 0.5 * (a + c - b), 0.5 * (a - c + b));
    } else {
        auto coth = [](double u) { return 1.0 / std::tanh(u); };
        t.d_abc = coth(a) * coth(b) - std::exp(log_cosh(c) - log_sinh(a) - log_sinh(b));
        t.d_acb = coth(a) * coth(c) - std::exp(log_cosh(b) - log_sinh(a) - log_sinh(c));
        t.d_cba = coth(c) * coth(b) - std::exp(log_cosh(a) - log_sinh(c) - log_sinh(b));
    }
    return t;
}

AngularMoments angular_moments(const Triangle& t, double p, double beta, int nodes) {
    const QuadratureRule& rule = gauss_jacobi_rule(nodes, p, 2.0 * beta);
    const double half = 0.5 * t.chi0;
    // cc/(sa sb) etc. multiply 1 - cos chi in the sigma numerators
    const double q_abc = std::exp(log_cosh(t.c) - log_sinh(t.a) - log_sinh(t.b));
    const double q_acb = std::exp(log_cosh(t.b) - log_sinh(t.a) - log_sinh(t.c));
    const double q_cba = std::exp(log_cosh(t.a) - log_sinh(t.c) - log_sinh(t.b));
    std::array<double, 5> acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double chi = half * rule.left_gap[i];
        const double gap = half * rule.right_gap[i];  // chi0 - chi
        // (cos chi - cos chi0)/(chi0 - chi) and (sin chi / chi), both smooth on [0, chi0]
        double core = std::sin(0.5 * (t.chi0 + chi)) * sinc(0.5 * gap);
        double smooth = std::pow(core, p) * std::pow(sinc(chi), 2.0 * beta) * rule.weights[i];
        double vers = 2.0 * std::sin(0.5 * chi) * std::sin(0.5 * chi);  // 1 - cos chi
        double s = std::sin(chi);
        acc[0] += smooth;
        acc[1] += smooth * (t.d_abc + q_abc * vers);
        acc[2] += smooth * (t.d_acb + q_acb * vers);
        acc[3] += smooth * (t.d_cba + q_cba * vers);
        acc[4] += smooth * s * s;
    }
    const double scale = std::pow(half, 1.0 + p + 2.0 * beta);
    return {acc[0] * scale, acc[1] * scale, acc[2] * scale, acc[3] * scale, acc[4] * scale};
}

cplx integrate_segment(const std::function<cplx(double)>& f, double lo, double hi, double left_exp,
                       double right_exp, double abs_tol, int max_nodes) {
    QuadratureSpec spec;
    spec.family = QuadratureFamily::gauss_jacobi;
    spec.left_exponent = left_exp;
    spec.right_exponent = right_exp;
    spec.abs_tol = abs_tol;
    spec.rel_tol = abs_tol;
    spec.max_nodes = max_nodes;
    spec.initial_nodes = 16;
    return integrate(f, {lo, hi}, spec).value;
}

}  // namespace detail

OneMinusB2 one_minus_b2(double x, double y, double z) {
    const double cx = std::cosh(x), cy = std::cosh(y), cz = std::cosh(z);
    const double den = 16.0 * cx * cx * cy * cy * cz * cz;
    double cosh_form = (std::cosh(2.0 * (x + y)) - std::cosh(2.0 * z)) *
                       (std::cosh(2.0 * z) - std::cosh(2.0 * (x - y))) / den;
    double sinh_form = std::sinh(x + y + z) * std::sinh(-x + y + z) * std::sinh(x - y + z) *
                       std::sinh(x + y - z) * 4.0 / den;
    return {cosh_form, sinh_form};
}

double kernel_W_closed(const Params& p, double x, double y, double z) {
    const double a = p.alpha(), b = p.beta();
    if (!(a > b)) throw ParameterError("closed-form W needs alpha > beta");
    if (!(x > 0.0 && y > 0.0 && z > 0.0)) return 0.0;
    const bool inside = in_open_triangle(x, y, z);
    if (!inside) {
        if (!(on_boundary(x, y, z) && a == 0.5)) return 0.0;
        // (1 - B^2)^0 = 1 and B = 1 at the boundary
        double lw = std::log(M_equal(a)) + (a - b - 1.0) * (log_cosh(x) + log_cosh(y) + log_cosh(z)) -
                    2.0 * a * (log_sinh(x) + log_sinh(y) + log_sinh(z));
        return std::exp(lw);
    }
    const double h1 = 0.5 * (x + y + z), h2 = 0.5 * (x + y - z);
    const double h3 = 0.5 * (z + x - y), h4 = 0.5 * (z - x + y);
    const double lccc = log_cosh(x) + log_cosh(y) + log_cosh(z);
    const double lsss = log_sinh(x) + log_sinh(y) + log_sinh(z);
    const double log_1mb = ln2 + log_sinh(h1) + log_sinh(h2) + log_sinh(h3) + log_sinh(h4) - lccc;
    const double log_1pb = ln2 + log_cosh(h1) + log_cosh(h2) + log_cosh(h3) + log_cosh(h4) - lccc;
    const double omb = std::exp(log_1mb);
    const double opb = std::exp(log_1pb);
    double f = gauss_2f1_complement(a + b, a - b, a + 0.5, 0.5 * omb, 0.5 * opb).real();
    double lw = std::log(M_equal(a)) + (a - b - 1.0) * lccc - 2.0 * a * lsss + (a - 0.5) * (log_1mb + log_1pb);
    return std::exp(lw) * f;
}

double kernel_W_angular(const Params& p, double x, double y, double z) {
    const double a = p.alpha(), b = p.beta();
    if (!(a > b && b > -0.5)) throw ParameterError("angular W needs alpha > beta > -1/2");
    if (!(x > 0.0 && y > 0.0 && z > 0.0) || !in_open_triangle(x, y, z)) return 0.0;
    detail::Triangle t = detail::make_triangle(x, y, z);
    const double pw = a - b - 1.0;
    detail::AngularMoments m = detail::angular_moments(t, pw, b);
    // g = 2 ca cb cc (cos chi - cos chi0)
    double lw = std::log(2.0 * M_const(a, b)) - 2.0 * a * t.log_sss + pw * (ln2 + t.log_ccc);
    return std::exp(lw) * m.one;
}

double kernel_W_equal(double alpha, double x, double y, double z) {
    if (!(alpha > -0.5)) throw ParameterError("kernel_W_equal needs alpha > -1/2");
    if (!(x > 0.0 && y > 0.0 && z > 0.0)) return 0.0;
    const double ls2 = log_sinh(2.0 * x) + log_sinh(2.0 * y) + log_sinh(2.0 * z);
    const double base = (4.0 * alpha + 1.0) * ln2 + std::log(M_equal(alpha)) - 2.0 * alpha * ls2;
    if (!in_open_triangle(x, y, z)) {
        if (on_boundary(x, y, z) && alpha == 0.5) return std::exp(base);
        return 0.0;
    }
    const double ls4 = log_sinh(x + y + z) + log_sinh(-x + y + z) + log_sinh(x - y + z) + log_sinh(x + y - z);
    return std::exp(base + (alpha - 0.5) * ls4);
}

double kernel_W_half(double alpha, double x, double y, double z) {
    // z -> z/2 in the alpha = beta product formula: A_{a,a}(z/2) dz/2 = 2^{-2a-2} A_{a,-1/2}(z) dz
    return std::exp(-(2.0 * alpha + 2.0) * ln2) * kernel_W_equal(alpha, 0.5 * x, 0.5 * y, 0.5 * z);
}

double kernel_W(const Params& p, double x, double y, double z) {
    if (p.equal()) return kernel_W_equal(p.alpha(), x, y, z);
    if (p.beta() == -0.5) return kernel_W_half(p.alpha(), x, y, z);
    return kernel_W_closed(p, x, y, z);
}

namespace {

// int_{|x-y|}^{x+y} f(z) W(x,y,z) A(z) dz
cplx integrate_against_W(const Params& p, double x, double y, const std::function<cplx(double)>& f) {
    if (!(x > 0.0 && y > 0.0)) throw DomainError("product formula needs x, y > 0");
    const double lo = std::abs(x - y), hi = x + y;
    const double edge = p.alpha() - 0.5;
    const bool touches_zero = lo <= 1e-12 * hi;
    auto g = [&](double z) { return f(z) * kernel_W(p, x, y, z) * weight_A(p, z); };
    return detail::integrate_segment(g, touches_zero ? 0.0 : lo, hi,
                                     touches_zero ? 2.0 * p.alpha() : edge, edge, 1e-13);
}

}  // namespace

double kernel_W_mass(const Params& p, double x, double y) {
    return integrate_against_W(p, x, y, [](double) { return cplx(1.0); }).real();
}

double product_check_phi(const Params& p, cplx lambda, double x, double y) {
    cplx rhs = integrate_against_W(p, x, y, [&](double z) { return phi(p, lambda, z); });
    return std::abs(phi(p, lambda, x) * phi(p, lambda, y) - rhs);
}

cplx phi_modified(const Params& p, int k, int l, cplx lambda, double x) {
    if (l < 0 || l > k) throw ParameterError("addition index needs 0 <= l <= k");
    Params q(p.alpha() + k + l, p.beta() + k - l);
    // sinh carries k+l and cosh carries k-l, matching the shift of (alpha, beta)
    return c_ratio(p, k, l, lambda) * std::pow(2.0 * std::sinh(x), k + l) *
           std::pow(2.0 * std::cosh(x), k - l) * phi(q, lambda, x);
}

double chi_poly(const Params& p, int k, int l, double r, double psi) {
    if (l < 0 || l > k) throw ParameterError("addition index needs 0 <= l <= k");
    const double a = p.alpha(), b = p.beta();
    const int m = k - l;
    double radial = std::tgamma(l + 1.0) / pochhammer(cplx(a - b), l).real() *
                    jacobi_poly(l, a - b - 1.0, b + m, 2.0 * r * r - 1.0);
    double angular = std::tgamma(m + 1.0) / pochhammer(cplx(b + 0.5), m).real() *
                     jacobi_poly(m, b - 0.5, b - 0.5, std::cos(psi));
    return std::pow(r, m) * radial * angular;
}

double pi_norm(const Params& p, int k, int l) {
    if (l < 0 || l > k) throw ParameterError("addition index needs 0 <= l <= k");
    const double a = p.alpha(), b = p.beta();
    if (!(a > b && b > -0.5)) throw ParameterError("the measure dm needs alpha > beta > -1/2");
    const int m = k - l;
    // psi part: int_{-1}^{1} P_m(t)^2 (1-t^2)^{b-1/2} dt, exact
    const QuadratureRule& qa = gauss_jacobi_rule(m + 2, b - 0.5, b - 0.5);
    double ang = 0.0;
    for (std::size_t i = 0; i < qa.nodes.size(); ++i) {
        double v = jacobi_poly(m, b - 0.5, b - 0.5, qa.nodes[i]);
        ang += qa.weights[i] * v * v;
    }
    // radial part with u = 2r^2 - 1
    const QuadratureRule& qr = gauss_jacobi_rule(l + 2, a - b - 1.0, b + m);
    double rad = 0.0;
    for (std::size_t i = 0; i < qr.nodes.size(); ++i) {
        double v = jacobi_poly(l, a - b - 1.0, b + m, qr.nodes[i]);
        rad += qr.weights[i] * v * v;
    }
    rad *= std::pow(2.0, -(m + b) - (a - b - 1.0) - 2.0);
    double coef = std::tgamma(l + 1.0) / pochhammer(cplx(a - b), l).real() * std::tgamma(m + 1.0) /
                  pochhammer(cplx(b + 0.5), m).real();
    return 1.0 / (2.0 * M_const(a, b) * coef * coef * rad * ang);
}

double pi_norm_closed(const Params& p, int k, int l) {
    if (l < 0 || l > k) throw ParameterError("addition index needs 0 <= l <= k");
    const double a = p.alpha(), b = p.beta();
    const int m = k - l;
    double v = (a + k + l) * (b + 2.0 * m) / ((a + k) * (2.0 * b + m));
    v *= pochhammer(cplx(a + 1.0), k).real() * pochhammer(cplx(a - b), l).real() *
         pochhammer(cplx(2.0 * b + 1.0), m).real();
    v /= pochhammer(cplx(b + 1.0), k).real() * std::tgamma(l + 1.0) * std::tgamma(m + 1.0);
    return v;
}

AdditionComponents addition_components(const Params& p, int k, int l, cplx lambda, double x, double r,
                                       double psi) {
    return {phi_modified(p, k, l, lambda, x), chi_poly(p, k, l, r, psi), pi_norm(p, k, l)};
}

double chi_inner_product(const Params& p, int k1, int l1, int k2, int l2) {
    const double a = p.alpha(), b = p.beta();
    if (!(a > b && b > -0.5)) throw ParameterError("the measure dm needs alpha > beta > -1/2");
    const int n = 60;
    const double pw = a - b - 1.0;
    // r in [0,1]: r^{2b+1} (1-r)^{pw} carried by the rule, (1+r)^{pw} left in the integrand
    const QuadratureRule& qr = gauss_jacobi_rule(n, pw, 2.0 * b + 1.0);
    // psi in [0,pi]: psi^{2b} (pi-psi)^{2b} carried by the rule
    const QuadratureRule& qp = gauss_jacobi_rule(n, 2.0 * b, 2.0 * b);
    double acc = 0.0;
    for (std::size_t i = 0; i < qr.nodes.size(); ++i) {
        const double r = 0.5 * qr.left_gap[i];
        const double wr = qr.weights[i] * std::pow(1.0 + r, pw);
        for (std::size_t j = 0; j < qp.nodes.size(); ++j) {
            const double psi = 0.5 * pi * qp.left_gap[j];
            const double s = std::sin(psi) / (psi * (pi - psi));
            const double wp = qp.weights[j] * std::pow(s, 2.0 * b);
            acc += wr * wp * chi_poly(p, k1, l1, r, psi) * chi_poly(p, k2, l2, r, psi);
        }
    }
    acc *= std::pow(0.5, 1.0 + pw + 2.0 * b + 1.0) * std::pow(0.5 * pi, 1.0 + 4.0 * b);
    return 2.0 * M_const(a, b) * acc;
}

double addition_series_check(const Params& p, double lambda, double x, double y, double r, double psi,
                             int k_max) {
    const cplx gamma = std::cosh(x) * std::cosh(y) + std::sinh(x) * std::sinh(y) * std::polar(r, psi);
    const double z = std::acosh(std::max(1.0, std::abs(gamma)));
    const cplx lhs = phi(p, lambda, z);
    cplx sum = 0.0;
    for (int k = 0; k <= k_max; ++k)
        for (int l = 0; l <= k; ++l)
            sum += phi_modified(p, k, l, lambda, x) * phi_modified(p, k, l, -lambda, -y) *
                   chi_poly(p, k, l, r, psi) * pi_norm(p, k, l);
    return std::abs(lhs - sum);
}

}  // namespace cherednik
