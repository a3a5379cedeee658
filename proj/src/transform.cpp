#include "cherednik/transform.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <mutex>

#include "cherednik/jacobi.hpp"
#include "cherednik/opdam.hpp"
#include "cherednik/parallel.hpp"
#include "cherednik/quadrature.hpp"
#include "cherednik/specfun.hpp"

namespace cherednik {

namespace {

// Per-order tables on [-1, 1]: barycentric weights and the integration matrix
// S[j][k] = int_{-1}^{t_j} l_k(t) dt for the Lagrange basis l_k on the Legendre nodes.
struct PanelTables {
    std::vector<double> bary;
    std::vector<std::vector<double>> running;
};

const PanelTables& panel_tables(int n) {
    static std::mutex mtx;
    static std::map<int, PanelTables> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const QuadratureRule& r = gauss_legendre_rule(n);
    PanelTables t;
    t.bary.assign(n, 1.0);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (k != j) t.bary[j] /= (r.nodes[j] - r.nodes[k]);
    t.running.assign(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j) {
        const double lo = -1.0, hi = r.nodes[j], half = 0.5 * (hi - lo);
        for (int q = 0; q < n; ++q) {
            const double s = lo + half * (r.nodes[q] + 1.0);
            for (int k = 0; k < n; ++k) {
                double lk = 1.0;
                for (int m = 0; m < n; ++m)
                    if (m != k) lk *= (s - r.nodes[m]) / (r.nodes[k] - r.nodes[m]);
                t.running[j][k] += half * r.weights[q] * lk;
            }
        }
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// Rule for int_0^L F(x) x^e dx: Gauss-Jacobi on the panel at 0, Legendre elsewhere.
struct HalfLineRule {
    std::vector<double> x;
    std::vector<double> w;
};

HalfLineRule half_line_rule(const SampledFunction& f, double e) {
    HalfLineRule r;
    const int n = f.order();
    const double h = 2.0 * f.half_width() / f.panels();
    const int m = n + 8;
    const QuadratureRule& gj = gauss_jacobi_rule(m, 0.0, e);
    const double scale = std::pow(0.5 * h, 1.0 + e);
    for (int i = 0; i < m; ++i) {
        r.x.push_back(0.5 * h * gj.left_gap[i]);
        r.w.push_back(scale * gj.weights[i]);
    }
    const std::size_t first = static_cast<std::size_t>(f.panels() / 2 + 1) * n;
    for (std::size_t k = first; k < f.grid().size(); ++k) {
        r.x.push_back(f.grid()[k]);
        r.w.push_back(f.weights()[k] * std::pow(f.grid()[k], e));
    }
    return r;
}

// Pieces of the transform on the half line: F f = E - O, F f_check = E + O with
// E = 2 int_0 f_e phi A and O = 2 c(lambda) int_0 f_o sinh(2x) phi_shifted A.
struct HalfLineData {
    Params p;
    HalfLineRule rule;
    std::vector<cplx> even, odd;
    std::vector<double> weight;
};

HalfLineData half_line_data(const Params& p, const SampledFunction& f) {
    HalfLineData d{p, half_line_rule(f, 2.0 * p.alpha() + 1.0), {}, {}, {}};
    std::vector<double> neg(d.rule.x.size());
    std::transform(d.rule.x.begin(), d.rule.x.end(), neg.begin(), [](double v) { return -v; });
    for (std::size_t i = 0; i < d.rule.x.size(); ++i) {
        cplx a = f(d.rule.x[i]), b = f(neg[i]);
        d.even.push_back(0.5 * (a + b));
        d.odd.push_back(0.5 * (a - b));
        d.weight.push_back(d.rule.w[i] * weight_A_reduced(p, d.rule.x[i]));
    }
    return d;
}

std::pair<cplx, cplx> half_line_pieces(const HalfLineData& d, cplx lambda) {
    const Params& p = d.p;
    const Params s = p.shifted();
    const cplx c = (p.rho() + I * lambda) / (4.0 * (p.alpha() + 1.0));
    cplx e = 0.0, o = 0.0;
    for (std::size_t i = 0; i < d.rule.x.size(); ++i) {
        const double x = d.rule.x[i];
        if (d.even[i] != 0.0) e += d.weight[i] * d.even[i] * phi(p, lambda, x);
        if (d.odd[i] != 0.0) o += d.weight[i] * d.odd[i] * std::sinh(2.0 * x) * phi(s, lambda, x);
    }
    return {2.0 * e, 2.0 * c * o};
}

}  // namespace

double weight_A_reduced(const Params& p, double x) {
    x = std::abs(x);
    const double e = 2.0 * p.alpha() + 1.0;
    if (x < 1e-8) return 1.0;
    return std::exp(log_weight_A(p, x) - e * std::log(x));
}

SampledFunction::SampledFunction(double half_width, int panels, int order)
    : half_width_(half_width), panels_(panels), order_(order), panel_width_(0.0),
      support_lo_(-half_width), support_hi_(half_width) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) throw ParameterError("half width must be positive");
    if (panels < 2 || panels % 2 != 0) throw ParameterError("panel count must be even and >= 2");
    if (order < 2 || order > 64) throw ParameterError("panel order must lie in [2, 64]");
    panel_width_ = 2.0 * half_width / panels;
    const QuadratureRule& r = gauss_legendre_rule(order);
    grid_.reserve(static_cast<std::size_t>(panels) * order);
    for (int i = 0; i < panels; ++i) {
        const double lo = panel_lo(i);
        for (int j = 0; j < order; ++j) {
            grid_.push_back(lo + 0.5 * panel_width_ * r.left_gap[j]);
            weights_.push_back(0.5 * panel_width_ * r.weights[j]);
        }
    }
    // exact reflection symmetry of the grid
    const std::size_t n = grid_.size();
    for (std::size_t k = 0; k < n / 2; ++k) {
        double v = 0.5 * (grid_[n - 1 - k] - grid_[k]);
        grid_[k] = -v;
        grid_[n - 1 - k] = v;
        double w = 0.5 * (weights_[k] + weights_[n - 1 - k]);
        weights_[k] = weights_[n - 1 - k] = w;
    }
    values_.assign(n, 0.0);
}

SampledFunction::SampledFunction(const std::function<cplx(double)>& f, double half_width, int panels, int order)
    : SampledFunction(half_width, panels, order) {
    for (std::size_t k = 0; k < grid_.size(); ++k) {
        values_[k] = f(grid_[k]);
        if (!std::isfinite(values_[k].real()) || !std::isfinite(values_[k].imag()))
            throw ParameterError("sampled value is not finite at x = " + std::to_string(grid_[k]));
    }
}

void SampledFunction::set_support(double lo, double hi) {
    if (!(lo <= hi)) throw ParameterError("support bounds out of order");
    support_lo_ = std::max(lo, -half_width_);
    support_hi_ = std::min(hi, half_width_);
}

int SampledFunction::panel_of(double x) const {
    int i = static_cast<int>(std::floor((x + half_width_) / panel_width_));
    return std::clamp(i, 0, panels_ - 1);
}

cplx SampledFunction::interpolate_panel(int panel, double x) const {
    const QuadratureRule& r = gauss_legendre_rule(order_);
    const PanelTables& t = panel_tables(order_);
    const double s = 2.0 * (x - panel_lo(panel)) / panel_width_ - 1.0;
    const std::size_t base = static_cast<std::size_t>(panel) * order_;
    cplx num = 0.0;
    double den = 0.0;
    for (int j = 0; j < order_; ++j) {
        const double d = s - r.nodes[j];
        if (d == 0.0) return values_[base + j];
        const double c = t.bary[j] / d;
        num += c * values_[base + j];
        den += c;
    }
    return num / den;
}

cplx SampledFunction::operator()(double x) const {
    if (x < -half_width_ || x > half_width_) return 0.0;
    if (x < support_lo_ || x > support_hi_) return 0.0;
    return interpolate_panel(panel_of(x), x);
}

SampledFunction SampledFunction::reflected() const {
    SampledFunction g(*this);
    std::reverse(g.values_.begin(), g.values_.end());
    g.support_lo_ = -support_hi_;
    g.support_hi_ = -support_lo_;
    return g;
}

SampledFunction SampledFunction::even_part() const {
    SampledFunction g(*this);
    const std::size_t n = values_.size();
    for (std::size_t k = 0; k < n; ++k) g.values_[k] = 0.5 * (values_[k] + values_[n - 1 - k]);
    const double s = std::max(std::abs(support_lo_), std::abs(support_hi_));
    g.support_lo_ = -s;
    g.support_hi_ = s;
    return g;
}

SampledFunction SampledFunction::odd_part() const {
    SampledFunction g = even_part();
    for (std::size_t k = 0; k < values_.size(); ++k) g.values_[k] = values_[k] - g.values_[k];
    return g;
}

SampledFunction SampledFunction::conj() const {
    SampledFunction g(*this);
    for (cplx& v : g.values_) v = std::conj(v);
    return g;
}

SampledFunction SampledFunction::running_integral() const {
    SampledFunction g(*this);
    const PanelTables& t = panel_tables(order_);
    const double half = 0.5 * panel_width_;
    cplx acc = 0.0;
    for (int i = 0; i < panels_; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) * order_;
        for (int j = 0; j < order_; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < order_; ++k) s += t.running[j][k] * values_[base + k];
            g.values_[base + j] = acc + half * s;
        }
        for (int k = 0; k < order_; ++k) acc += weights_[base + k] * values_[base + k];
    }
    // the antiderivative is only zero to the left of the support
    g.support_lo_ = support_lo_;
    g.support_hi_ = half_width_;
    return g;
}

cplx SampledFunction::integral() const {
    cplx s = 0.0;
    for (std::size_t k = 0; k < values_.size(); ++k) s += weights_[k] * values_[k];
    return s;
}

cplx SampledFunction::integrate_weighted_half(const std::function<cplx(double)>& h, double e) const {
    HalfLineRule r = half_line_rule(*this, e);
    cplx s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        cplx v = (*this)(r.x[i]);
        if (v != 0.0) s += r.w[i] * v * h(r.x[i]);
    }
    return s;
}

cplx SampledFunction::integrate_weighted(const std::function<cplx(double)>& h, double e) const {
    return integrate_map([&](double x, cplx v) { return v * h(x); }, e);
}

cplx SampledFunction::integrate_map(const std::function<cplx(double, cplx)>& h, double e) const {
    HalfLineRule r = half_line_rule(*this, e);
    cplx s = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        const double x = r.x[i];
        cplx a = (*this)(x), b = (*this)(-x);
        if (a != 0.0) s += r.w[i] * h(x, a);
        if (b != 0.0) s += r.w[i] * h(-x, b);
    }
    return s;
}

SampledFunction SampledFunction::tabulate(const std::function<cplx(double)>& f, double half_width, int panels,
                                          int order) {
    SampledFunction g(half_width, panels, order);
    parallel_for(g.grid_.size(), [&](std::size_t k) { g.values_[k] = f(g.grid_[k]); });
    for (std::size_t k = 0; k < g.grid_.size(); ++k)
        if (!std::isfinite(g.values_[k].real()) || !std::isfinite(g.values_[k].imag()))
            throw ParameterError("sampled value is not finite at x = " + std::to_string(g.grid_[k]));
    return g;
}

cplx opdam_transform(const Params& p, const SampledFunction& f, cplx lambda) {
    auto [e, o] = half_line_pieces(half_line_data(p, f), lambda);
    return e - o;
}

std::vector<cplx> opdam_transform(const Params& p, const SampledFunction& f, const std::vector<cplx>& lambdas) {
    HalfLineData d = half_line_data(p, f);
    std::vector<cplx> out(lambdas.size());
    parallel_for(lambdas.size(), [&](std::size_t i) {
        auto [e, o] = half_line_pieces(d, lambdas[i]);
        out[i] = e - o;
    });
    return out;
}

cplx jacobi_transform(const Params& p, const SampledFunction& f_even, cplx lambda) {
    return f_even.integrate_weighted_half(
        [&](double x) { return phi(p, lambda, x) * weight_A_reduced(p, x); }, 2.0 * p.alpha() + 1.0);
}

cplx jacobi_transform_cosh_power(const Params& p, double mu, cplx lambda) {
    const double a = p.alpha(), b = p.beta();
    if (!(mu > std::abs(lambda.imag()))) throw DomainError("need mu > |Im lambda|");
    cplx v = std::lgamma(a + 1.0) + ln_gamma((mu + I * lambda) / 2.0) + ln_gamma((mu - I * lambda) / 2.0) -
             std::lgamma((a + b + mu + 1.0) / 2.0) - std::lgamma((a - b + mu + 1.0) / 2.0);
    return 0.5 * std::exp(v);
}

Decomposition decompose_with_antiderivative(const SampledFunction& f) {
    SampledFunction e = f.even_part();
    SampledFunction o = f.odd_part();
    SampledFunction j = o.running_integral();
    return {e, o, j};
}

double decomposition_check(const Params& p, const SampledFunction& f, cplx lambda) {
    Decomposition d = decompose_with_antiderivative(f);
    cplx lhs = opdam_transform(p, f, lambda);
    cplx rhs = 2.0 * jacobi_transform(p, d.even, lambda) +
               2.0 * (p.rho() + I * lambda) * jacobi_transform(p, d.odd_antiderivative, lambda);
    return std::abs(lhs - rhs);
}

double integration_by_parts_check(const Params& p, const SampledFunction& f, cplx lambda) {
    Decomposition d = decompose_with_antiderivative(f);
    cplx lhs = d.odd.integrate_weighted_half(
        [&](double x) { return phi_derivative(p, lambda, x) * weight_A_reduced(p, x); }, 2.0 * p.alpha() + 1.0);
    cplx rhs = (p.rho() * p.rho() + lambda * lambda) * jacobi_transform(p, d.odd_antiderivative, lambda);
    return std::abs(lhs - rhs);
}

double plancherel_density(const Params& p, double lambda) {
    // 4^rho converts the c-function normalization to the weight A without factors of 2
    return std::exp(2.0 * p.rho() * std::numbers::ln2) * inv_abs_c_squared(p, lambda) / (8.0 * pi);
}

cplx inverse_factor(const Params& p, double lambda) {
    if (lambda == 0.0) throw DomainError("the factor 1 - rho/(i lambda) has a pole at 0");
    return 1.0 + I * p.rho() / lambda;
}

SpectralDensity spectral_density(const Params& p, double lambda_max, int panels, int order) {
    if (!(lambda_max > 0.0)) throw ParameterError("Lambda must be positive");
    if (panels < 2 || panels % 2 != 0) throw ParameterError("panel count must be even and >= 2");
    SpectralDensity sd;
    const QuadratureRule& r = gauss_legendre_rule(order);
    const double h = 2.0 * lambda_max / panels;
    for (int i = 0; i < panels; ++i) {
        const double lo = -lambda_max + i * h;
        for (int j = 0; j < order; ++j) {
            const double l = lo + 0.5 * h * r.left_gap[j];
            sd.lambda.push_back(l);
            sd.quad_weight.push_back(0.5 * h * r.weights[j]);
        }
    }
    const std::size_t n = sd.lambda.size();
    for (std::size_t k = 0; k < n / 2; ++k) {
        sd.lambda[k] = -sd.lambda[n - 1 - k];
        sd.quad_weight[k] = sd.quad_weight[n - 1 - k];
    }
    for (double l : sd.lambda) {
        sd.density.push_back(plancherel_density(p, l));
        sd.factor.push_back(inverse_factor(p, l));
    }
    return sd;
}

InverseResult inverse_transform(const Params& p, const SpectralDensity& sd, const std::vector<cplx>& g,
                                double x, double tol) {
    if (g.size() != sd.lambda.size()) throw ParameterError("spectral values do not match the grid");
    const double lmax = sd.lambda.empty() ? 0.0 : std::abs(sd.lambda.front());
    cplx sum = 0.0;
    double tail = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0.0) continue;
        cplx term = sd.quad_weight[i] * g[i] * G(p, sd.lambda[i], x) * sd.factor[i] * sd.density[i];
        sum += term;
        if (std::abs(sd.lambda[i]) > 0.5 * lmax) tail += std::abs(term);
    }
    return {sum, tail, tail > tol};
}

InverseResult inverse_transform(const Params& p, const std::function<cplx(double)>& g, double x,
                                double lambda_max, double tol) {
    SpectralDensity sd = spectral_density(p, lambda_max);
    std::vector<cplx> gv(sd.lambda.size());
    for (std::size_t i = 0; i < gv.size(); ++i) gv[i] = g(sd.lambda[i]);
    return inverse_transform(p, sd, gv, x, tol);
}

PlancherelResult plancherel_check(const Params& p, const SampledFunction& f, double lambda_max, int panels) {
    PlancherelResult out{};
    SpectralDensity sd = spectral_density(p, lambda_max, panels);
    HalfLineData d = half_line_data(p, f);
    // |f(x)|^2 + |f(-x)|^2 = 2 (|f_e|^2 + |f_o|^2)
    for (std::size_t i = 0; i < d.weight.size(); ++i)
        out.lhs += 2.0 * d.weight[i] * (std::norm(d.even[i]) + std::norm(d.odd[i]));
    // F f(l) = e - o, F f_check(l) = e + o; node i and node n-1-i are l and -l.
    // e is even in l and o/(rho + i l) is even, so only l > 0 is computed.
    const std::size_t n = sd.lambda.size();
    std::vector<cplx> e(n), o(n);
    parallel_for(n / 2, [&](std::size_t k) {
        const std::size_t i = n / 2 + k, m = n - 1 - i;
        auto [a, b] = half_line_pieces(d, sd.lambda[i]);
        e[i] = e[m] = a;
        o[i] = b;
        o[m] = b * (p.rho() - I * sd.lambda[i]) / (p.rho() + I * sd.lambda[i]);
    });
    double r1 = 0.0;
    cplx r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = sd.quad_weight[i] * sd.density[i];
        if (sd.lambda[i] > 0.0) r1 += 0.5 * w * (std::norm(e[i] - o[i]) + std::norm(e[i] + o[i]));
        const std::size_t m = n - 1 - i;
        r2 += w * (e[i] - o[i]) * std::conj(e[m] + o[m]) * sd.factor[i];
    }
    out.rhs1 = r1;
    out.rhs2 = r2.real();
    out.rhs2_imag = r2.imag();
    return out;
}

}  // namespace cherednik
