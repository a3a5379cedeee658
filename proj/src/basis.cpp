#include "cherednik/basis.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>

#include "cherednik/quadrature.hpp"
#include "cherednik/specfun.hpp"

namespace cherednik {

BasisIndex::BasisIndex(int n_, double delta_) : n(n_), delta(delta_) {
    if (n < 0) throw ParameterError("basis index must be nonnegative");
    if (!(delta > 0.0)) throw ParameterError("basis needs delta > 0");
}

namespace {

struct JacobiPair {
    double a;
    double b;
};

// Jacobi parameters of the polynomial factor
JacobiPair jacobi_pair(const Params& p, const BasisIndex& b) {
    return b.odd() ? JacobiPair{p.alpha() + 1.0, b.delta - 1.0} : JacobiPair{p.alpha(), b.delta};
}

// Wilson parameters for the even and odd closed forms
struct WilsonParams {
    double a, b, c, d;
};
WilsonParams wilson_params(const Params& p, const BasisIndex& b) {
    const double al = p.alpha(), be = p.beta(), de = b.delta;
    if (b.odd()) return {(de + 1.0) / 2.0, (de - 1.0) / 2.0, (al + be + 3.0) / 2.0, (al - be + 1.0) / 2.0};
    return {(de + 1.0) / 2.0, (de + 1.0) / 2.0, (al + be + 1.0) / 2.0, (al - be + 1.0) / 2.0};
}

using Poly = std::vector<double>;  // ascending coefficients

Poly multiply(const Poly& x, const Poly& y) {
    Poly r(x.size() + y.size() - 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

// Wilson polynomial as a polynomial in its argument u = t^2; same summation as wilson_poly
Poly wilson_coefficients(int n, const WilsonParams& w) {
    const double s = w.a + w.b + w.c + w.d + n - 1.0;
    Poly term{1.0}, sum{1.0};
    for (int m = 0; m < n; ++m) {
        const double am = w.a + m;
        const double k = (double(m) - n) * (s + m) / ((w.a + w.b + m) * (w.a + w.c + m) * (w.a + w.d + m) * (m + 1.0));
        term = multiply(term, Poly{k * am * am, -k});
        sum.resize(term.size(), 0.0);
        for (std::size_t i = 0; i < term.size(); ++i) sum[i] += term[i];
    }
    const double pre = (pochhammer(w.a + w.b, n) * pochhammer(w.a + w.c, n) * pochhammer(w.a + w.d, n)).real();
    for (double& c : sum) c *= pre;
    return sum;
}

double factorial(int k) { return std::tgamma(k + 1.0); }

}  // namespace

double h_eval(const Params& p, const BasisIndex& b, double x) {
    const JacobiPair jp = jacobi_pair(p, b);
    const double t = std::tanh(x);
    const double envelope = std::exp(-(p.alpha() + p.beta() + b.delta + 2.0) * log_cosh(x));
    const double poly = jacobi_poly(b.degree(), jp.a, jp.b, 1.0 - 2.0 * t * t);
    return b.odd() ? envelope * poly * t : envelope * poly;
}

double gram(const Params& p, double delta, int m, int n) {
    const BasisIndex bm(m, delta), bn(n, delta);
    if (bm.odd() != bn.odd()) return 0.0;
    const JacobiPair jp = jacobi_pair(p, bm);
    // y^{2a+1}(1-y^2)^delta dy from the even functions, y^{2a+3}(1-y^2)^delta dy from the odd ones
    const double wa = bm.odd() ? p.alpha() + 1.0 : p.alpha();
    const double scale = std::exp2(-p.alpha() - delta - (bm.odd() ? 2.0 : 1.0));
    // exact for the polynomial product of degree deg_m + deg_n
    const int nodes = (bm.degree() + bn.degree()) / 2 + 2;
    const QuadratureRule& rule = gauss_jacobi_rule(nodes, wa, delta);
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double z = rule.nodes[i];
        s += rule.weights[i] * jacobi_poly(bm.degree(), jp.a, jp.b, z) * jacobi_poly(bn.degree(), jp.a, jp.b, z);
    }
    return scale * s;
}

double gram_norm(const Params& p, double delta, int n) {
    const BasisIndex b(n, delta);
    const double a = p.alpha();
    const int k = b.degree();
    const double top = b.odd() ? std::lgamma(a + k + 2.0) + std::lgamma(delta + k)
                               : std::lgamma(a + k + 1.0) + std::lgamma(delta + k + 1.0);
    return std::exp(top - std::lgamma(k + 1.0) - std::lgamma(a + delta + k + 1.0)) / (a + delta + 2.0 * k + 1.0);
}

std::vector<double> gram_matrix(const Params& p, double delta, int N) {
    const int size = N + 1;
    std::vector<double> m(size * size);
    for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j) m[i * size + j] = m[j * size + i] = gram(p, delta, i, j);
    return m;
}

double condition_number(const std::vector<double>& m, int size) {
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> a(m.data(), size, size);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
    if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

cplx transform_closed_form(const Params& p, const BasisIndex& b, cplx lambda) {
    const double al = p.alpha(), be = p.beta(), de = b.delta;
    const int k = b.degree();
    const double s1 = (al + be + de) / 2.0 + 1.0, s2 = (al - be + de) / 2.0 + 1.0;
    const cplx il = I * lambda;
    cplx lg = std::lgamma(al + 1.0) + ln_gamma((de + 1.0 + il) / 2.0) + ln_gamma((de + 1.0 - il) / 2.0) -
              std::lgamma(s2 + k);
    const WilsonParams w = wilson_params(p, b);
    const cplx wil = wilson_poly(k, -lambda * lambda / 4.0, w.a, w.b, w.c, w.d);
    const double sign = (k % 2 == 0 ? 1.0 : -1.0) / factorial(k);
    if (!b.odd()) return sign * std::exp(lg - std::lgamma(s1 + k)) * wil;
    lg -= std::lgamma(s1 + k + 1.0);
    return -sign * (p.rho() + il) / 2.0 * std::exp(lg) * wil;
}

std::vector<double> rodrigues_coefficients(const Params& p, const BasisIndex& b) {
    const double al = p.alpha(), be = p.beta(), de = b.delta;
    const int k = b.degree();
    const double s1 = (al + be + de) / 2.0 + 1.0, s2 = (al - be + de) / 2.0 + 1.0;
    const Poly in_u = wilson_coefficients(k, wilson_params(p, b));
    // u = t^2 / 4
    Poly in_t(2 * in_u.size() - 1, 0.0);
    for (std::size_t i = 0; i < in_u.size(); ++i) in_t[2 * i] = in_u[i] / std::pow(4.0, double(i));
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    if (!b.odd()) {
        const double norm = sign / (factorial(k) * pochhammer(s1, k).real() * pochhammer(s2, k).real());
        for (double& c : in_t) c *= norm;
        return in_t;
    }
    const double norm = -sign / (2.0 * factorial(k) * pochhammer(s1, k + 1).real() * pochhammer(s2, k).real());
    Poly r = multiply(in_t, Poly{p.rho(), 1.0});
    for (double& c : r) c *= norm;
    return r;
}

double rodrigues_check(const Params& p, const BasisIndex& b, const std::vector<double>& xs,
                       const FiniteDifferenceScheme& fd) {
    const std::vector<double> c = rodrigues_coefficients(p, b);
    const BasisIndex ground(0, b.delta);
    const int top = int(c.size()) - 1;
    // Horner: g_top = c_top h, g_j = c_j h + T g_{j+1}
    std::function<cplx(int, double)> horner = [&](int j, double x) -> cplx {
        const double h = h_eval(p, ground, x);
        if (j == top) return c[j] * h;
        return c[j] * h + cherednik_apply(p, [&](double y) { return horner(j + 1, y); }, x, fd);
    };
    double worst = 0.0;
    for (double x : xs) worst = std::max(worst, std::abs(horner(0, x) - h_eval(p, b, x)));
    return worst;
}

HermiteLimit hermite_limit(double alpha, int n, double x, const std::vector<double>& epsilons) {
    const Params p(alpha, alpha);
    HermiteLimit r;
    const double g = std::exp(-x * x / 2.0);
    const double even_ref = g * laguerre_poly(n, alpha, x * x);
    const double odd_ref = g * laguerre_poly(n, alpha + 1.0, x * x) * x;
    for (double e : epsilons) {
        if (!(e > 0.0)) throw ParameterError("hermite_limit needs positive epsilons");
        const double delta = 1.0 / (e * e);
        r.even.epsilons.push_back(e);
        r.odd.epsilons.push_back(e);
        r.even.errors.push_back(std::abs(h_eval(p, BasisIndex(2 * n, delta), e * x) - even_ref));
        r.odd.errors.push_back(std::abs(h_eval(p, BasisIndex(2 * n + 1, delta), e * x) / e - odd_ref));
    }
    return r;
}

std::vector<double> projection_residuals(const Params& p, double delta, const SampledFunction& f, int max_index) {
    const double e = 2.0 * p.alpha() + 1.0;
    const double total =
        f.integrate_map([&](double x, cplx v) { return std::norm(v) * weight_A_reduced(p, x); }, e).real();
    const int size = max_index + 1;
    Eigen::VectorXcd c(size);
    for (int k = 0; k < size; ++k) {
        const BasisIndex b(k, delta);
        c[k] = f.integrate_map([&](double x, cplx v) { return v * h_eval(p, b, x) * weight_A_reduced(p, x); }, e);
    }
    const std::vector<double> g = gram_matrix(p, delta, max_index);
    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> gm(g.data(), size, size);
    std::vector<double> out;
    for (int k = 0; k < size; ++k) {
        // ||proj||^2 = c^* G^{-1} c on the leading block
        const Eigen::MatrixXd block = gm.topLeftCorner(k + 1, k + 1);
        const Eigen::VectorXcd ck = c.head(k + 1);
        const Eigen::VectorXcd sol = block.cast<cplx>().ldlt().solve(ck);
        const double captured = ck.dot(sol).real();
        out.push_back(std::sqrt(std::max(0.0, total - captured)));
    }
    return out;
}

}  // namespace cherednik
