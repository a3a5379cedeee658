#include "cherednik/convolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cherednik/jacobi.hpp"
#include "cherednik/opdam.hpp"
#include "cherednik/parallel.hpp"
#include "cherednik/quadrature.hpp"
#include "cherednik/specfun.hpp"

namespace cherednik {

namespace {

double support_radius(const SampledFunction& f) { return std::max(std::abs(f.support_lo()), std::abs(f.support_hi())); }

double inverse_index(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

double dual_index(double p) {
    if (p == 1.0) return infinity;
    if (std::isinf(p)) return 1.0;
    return p / (p - 1.0);
}

// Gauss-Jacobi piece on [lo, hi] with exponents el, er at the ends; appends nodes and
// weights for int h(z) dz where h = density(z) * A(|z|).
void append_piece(const Params& prm, double x, double y, double lo, double hi, double el, double er, int n,
                  TranslationRule& out) {
    // slivers left by clipping carry no mass and would put nodes on the kernel's edge
    if (!(hi - lo > 1e-12 * (std::abs(x) + std::abs(y)))) return;
    const QuadratureRule& rule = gauss_jacobi_rule(n, er, el);
    const double half = 0.5 * (hi - lo);
    const double scale = std::pow(half, 1.0 + el + er);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double dl = half * rule.left_gap[i], dr = half * rule.right_gap[i];
        const double z = lo + dl;
        const double k = kernel_K(prm, x, y, z);
        if (k == 0.0) continue;
        const double edges = std::pow(dl, el) * std::pow(dr, er);
        out.z.push_back(z);
        out.w.push_back(scale * rule.weights[i] * k * weight_A(prm, std::abs(z)) / edges);
    }
}

}  // namespace

LpReport lp_norm(const Params& prm, const SampledFunction& f, double p) {
    if (!(p >= 1.0)) throw ParameterError("L^p norms need p >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (cplx v : f.values()) m = std::max(m, std::abs(v));
        return {p, m};
    }
    cplx s = f.integrate_map(
        [&](double x, cplx v) { return cplx(std::pow(std::abs(v), p) * weight_A_reduced(prm, x)); },
        2.0 * prm.alpha() + 1.0);
    return {p, std::pow(std::max(0.0, s.real()), 1.0 / p)};
}

double bound_constant(const Params& prm) { return total_variation_bound(prm); }

SampledFunction bump(double center, double width, double half_width, int panels, int order) {
    if (!(width > 0.0)) throw ParameterError("bump width must be positive");
    if (std::abs(center) + width > half_width) throw ParameterError("bump does not fit in the grid");
    SampledFunction f(
        [=](double x) {
            const double t = (x - center) / width;
            return std::abs(t) < 1.0 ? cplx(std::exp(1.0 - 1.0 / (1.0 - t * t))) : cplx(0.0);
        },
        half_width, panels, order);
    f.set_support(center - width, center + width);
    return f;
}

TranslationRule translation_rule(const Params& prm, double x, double y, double clip_lo, double clip_hi,
                                 int nodes) {
    TranslationRule r;
    if (x == 0.0 || y == 0.0) {
        const double atom = x == 0.0 ? y : x;
        if (atom >= clip_lo && atom <= clip_hi) {
            r.z.push_back(atom);
            r.w.push_back(1.0);
        }
        return r;
    }
    const double lo = std::abs(std::abs(x) - std::abs(y)), hi = std::abs(x) + std::abs(y);
    const double edge = prm.alpha() - 0.5;
    const bool touches_zero = lo <= 1e-12 * hi;
    const double inner = touches_zero ? 2.0 * prm.alpha() : edge;
    const double inner_at = touches_zero ? 0.0 : lo;
    // positive piece [inner_at, hi], negative piece [-hi, -inner_at]
    {
        const double a = std::max(inner_at, clip_lo), b = std::min(hi, clip_hi);
        append_piece(prm, x, y, a, b, a == inner_at ? inner : 0.0, b == hi ? edge : 0.0, nodes, r);
    }
    {
        const double a = std::max(-hi, clip_lo), b = std::min(-inner_at, clip_hi);
        append_piece(prm, x, y, a, b, a == -hi ? edge : 0.0, b == -inner_at ? inner : 0.0, nodes, r);
    }
    return r;
}

cplx translate(const Params& prm, const SampledFunction& f, double x, double y, int nodes) {
    TranslationRule r = translation_rule(prm, x, y, f.support_lo(), f.support_hi(), nodes);
    cplx s = 0.0;
    for (std::size_t i = 0; i < r.z.size(); ++i) s += r.w[i] * f(r.z[i]);
    return s;
}

SampledFunction translate_function(const Params& prm, const SampledFunction& f, double x, int panels, int order,
                                   int nodes) {
    const double radius = std::abs(x) + support_radius(f);
    SampledFunction t = SampledFunction::tabulate([&](double y) { return translate(prm, f, x, y, nodes); }, radius, panels,
                                                  order);
    return t;
}

NormComparison translate_norm_check(const Params& prm, const SampledFunction& f, double x, double p) {
    SampledFunction t = translate_function(prm, f, x);
    return {lp_norm(prm, t, p).norm, bound_constant(prm) * lp_norm(prm, f, p).norm};
}

SampledFunction convolve(const Params& prm, const SampledFunction& f, const SampledFunction& g,
                         const ConvolutionGrid& grid) {
    const double inner = support_radius(f) + support_radius(g);
    const double radius = inner + grid.margin;
    const double e = 2.0 * prm.alpha() + 1.0;
    SampledFunction out = SampledFunction::tabulate(
        [&](double x) {
            return g.integrate_map(
                [&](double y, cplx gy) { return translate(prm, f, x, -y) * gy * weight_A_reduced(prm, y); }, e);
        },
        radius, grid.panels, grid.order);
    out.set_support(-inner, inner);
    return out;
}

double support_leak(const SampledFunction& conv, double radius) {
    double m = 0.0;
    for (std::size_t k = 0; k < conv.grid().size(); ++k)
        if (std::abs(conv.grid()[k]) > radius) m = std::max(m, std::abs(conv.values()[k]));
    return m;
}

NormComparison young_check(const Params& prm, const SampledFunction& f, const SampledFunction& g,
                           const SampledFunction& conv, double p, double q, double r) {
    if (!(p >= 1.0 && q >= 1.0 && r >= 1.0)) throw ParameterError("exponents must be >= 1");
    if (std::abs(inverse_index(p) + inverse_index(q) - 1.0 - inverse_index(r)) > 1e-12)
        throw ParameterError("Young exponents need 1/p + 1/q - 1 = 1/r");
    return {lp_norm(prm, conv, r).norm, bound_constant(prm) * lp_norm(prm, f, p).norm * lp_norm(prm, g, q).norm};
}

NormComparison young_check(const Params& prm, const SampledFunction& f, const SampledFunction& g, double p, double q,
                           double r) {
    if (std::abs(inverse_index(p) + inverse_index(q) - 1.0 - inverse_index(r)) > 1e-12)
        throw ParameterError("Young exponents need 1/p + 1/q - 1 = 1/r");
    return young_check(prm, f, g, convolve(prm, f, g), p, q, r);
}

double g0_eval(const Params& prm, double x) { return G(prm, 0.0, x).real(); }

double g0_asymptotic_constant(const Params& prm) {
    const double a = prm.alpha(), b = prm.beta(), rho = prm.rho();
    return std::exp((rho + 2.0) * std::numbers::ln2 + std::lgamma(a + 1.0) - std::lgamma(rho / 2.0) -
                    std::lgamma((a - b + 1.0) / 2.0));
}

double g0_asymptotic_ratio(const Params& prm, double x) {
    if (!(x > 0.0)) throw DomainError("the asymptotic ratio needs x > 0");
    return std::exp(std::log(g0_eval(prm, x)) + prm.rho() * x - std::log(x)) / g0_asymptotic_constant(prm);
}

double g_bound_check(const Params& prm, const std::vector<double>& lambdas, const std::vector<double>& xs) {
    double worst = -infinity;
    for (double x : xs) {
        const double g0 = g0_eval(prm, x);
        for (double l : lambdas) worst = std::max(worst, (std::abs(G(prm, l, x)) - g0) / g0);
    }
    return worst;
}

double g_lq_norm(const Params& prm, cplx lambda, double q) {
    if (!(q > 2.0)) throw ParameterError("||G_lambda||_q is finite only for q > 2");
    const double decay = std::isinf(q) ? prm.rho() : (q - 2.0) * prm.rho();
    const double X = 45.0 / decay + 4.0;
    SampledFunction g = SampledFunction::tabulate([&](double x) { return G(prm, lambda, x); }, X, 64, 16);
    return lp_norm(prm, g, q).norm;
}

KunzeSteinReport kunze_stein_check(const Params& prm, const SampledFunction& f, const SampledFunction& g,
                                   const SampledFunction& conv, double p, double q) {
    if (!(p >= 1.0 && p < 2.0 && q > 2.0)) throw ParameterError("need 1 <= p < 2 < q");
    auto ratio = [](double num, double den) { return num == 0.0 ? 0.0 : num / den; };
    KunzeSteinReport r{};
    const double c2 = lp_norm(prm, conv, 2.0).norm;
    const double f2 = lp_norm(prm, f, 2.0).norm, g2 = lp_norm(prm, g, 2.0).norm;
    r.ratio_1 = ratio(c2, lp_norm(prm, f, p).norm * g2);
    r.ratio_2 = ratio(lp_norm(prm, conv, q).norm, f2 * g2);
    r.bound_1 = g_lq_norm(prm, 0.0, dual_index(p));
    r.bound_2 = bound_constant(prm) * g_lq_norm(prm, 0.0, q);
    r.flagged = !(r.ratio_1 <= r.bound_1) || !(r.ratio_2 <= r.bound_2);
    return r;
}

KunzeSteinReport kunze_stein_check(const Params& prm, const SampledFunction& f, const SampledFunction& g, double p,
                                   double q) {
    return kunze_stein_check(prm, f, g, convolve(prm, f, g), p, q);
}

}  // namespace cherednik
