#include "cherednik/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace cherednik {

namespace {

// P_n^{(a,b)}(t), P_{n-1}^{(a,b)}(t) by the three-term recurrence.
void jacobi_pair(int n, double a, double b, double t, double& pn, double& pn1) {
    double p0 = 1.0;
    double p1 = 0.5 * (a - b + (a + b + 2.0) * t);
    if (n == 0) {
        pn = p0;
        pn1 = 0.0;
        return;
    }
    for (int k = 2; k <= n; ++k) {
        double k2ab = 2.0 * k + a + b;
        double c1 = 2.0 * k * (k + a + b) * (k2ab - 2.0);
        double c2 = (k2ab - 1.0) * (a * a - b * b);
        double c3 = (k2ab - 2.0) * (k2ab - 1.0) * k2ab;
        double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * k2ab;
        double p2 = ((c2 + c3 * t) * p1 - c4 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    pn = p1;
    pn1 = p0;
}

std::unique_ptr<QuadratureRule> build_rule(int n, double a, double b) {
    auto rule = std::make_unique<QuadratureRule>();
    // Golub-Welsch eigenvalues as starting points
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    for (int k = 0; k < n; ++k) {
        double s = 2.0 * k + a + b;
        diag(k) = (s == 0.0 || s + 2.0 == 0.0) ? (b - a) / (a + b + 2.0)
                                                : (b * b - a * a) / (s * (s + 2.0));
        if (k + 1 < n) {
            double kk = k + 1.0;
            double s1 = 2.0 * kk + a + b;
            // at kk = 1, (kk+a+b)/(s1-1) = 1 exactly; avoids 0/0 when a+b = -1
            double ratio = kk == 1.0 ? 1.0 : (kk + a + b) / (s1 - 1.0);
            sub(k) = std::sqrt(4.0 * kk * (kk + a) * (kk + b) * ratio / (s1 * s1 * (s1 + 1.0)));
        }
    }
    if (n == 1) diag(0) = (b - a) / (a + b + 2.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)), Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = es.eigenvalues();

    const double log_const = std::lgamma(n + a + 1.0) + std::lgamma(n + b + 1.0) -
                             std::lgamma(n + a + b + 1.0) - std::lgamma(n + 1.0) +
                             (a + b + 1.0) * std::log(2.0);
    rule->nodes.resize(n);
    rule->weights.resize(n);
    rule->right_gap.resize(n);
    rule->left_gap.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::clamp(ev(i), -1.0 + 1e-15, 1.0 - 1e-15);
        double deriv = 0.0;
        for (int it = 0; it < 8; ++it) {
            double pn, pn1;
            jacobi_pair(n, a, b, t, pn, pn1);
            double s = 2.0 * n + a + b;
            // (1-t^2) P_n' = [n(a-b-s t) P_n + 2(n+a)(n+b) P_{n-1}] / s
            deriv = (n * (a - b - s * t) * pn + 2.0 * (n + a) * (n + b) * pn1) / (s * (1.0 - t * t));
            double step = pn / deriv;
            t -= step;
            if (std::abs(step) < 1e-17) break;
        }
        double pn, pn1;
        jacobi_pair(n, a, b, t, pn, pn1);
        double s = 2.0 * n + a + b;
        deriv = (n * (a - b - s * t) * pn + 2.0 * (n + a) * (n + b) * pn1) / (s * (1.0 - t * t));
        rule->nodes[i] = t;
        rule->weights[i] = std::exp(log_const) / ((1.0 - t * t) * deriv * deriv);
        rule->right_gap[i] = 1.0 - t;
        rule->left_gap[i] = 1.0 + t;
    }
    return rule;
}

std::mutex rule_mutex;
std::map<std::tuple<int, double, double>, std::unique_ptr<QuadratureRule>> rule_cache;

cplx tanh_sinh(const std::function<cplx(double)>& f, Interval iv, const QuadratureSpec& spec,
               double& err, int& count) {
    const double half = 0.5 * (iv.hi - iv.lo);
    const double mid = 0.5 * (iv.hi + iv.lo);
    auto eval_pair = [&](double t) -> cplx {
        double u = 0.5 * pi * std::sinh(t);
        double ch = std::cosh(u);
        double w = 0.5 * pi * std::cosh(t) / (ch * ch);
        double gap = 2.0 / (1.0 + std::exp(2.0 * u));  // 1 - tanh u
        cplx s = 0.0;
        double xr = iv.hi - half * gap;
        double xl = iv.lo + half * gap;
        if (xr < iv.hi && xr > iv.lo) s += f(xr);
        if (xl > iv.lo && xl < iv.hi) s += f(xl);
        count += 2;
        return w * s;
    };
    double h = 1.0;
    const double tmax = 3.2;
    cplx sum = 0.5 * pi * f(mid);
    count = 1;
    for (double t = h; t <= tmax; t += h) sum += eval_pair(t);
    cplx prev = sum * h * half;
    for (int level = 1; level < 12; ++level) {
        h *= 0.5;
        for (double t = h; t <= tmax; t += 2.0 * h) sum += eval_pair(t);
        cplx cur = sum * h * half;
        err = std::abs(cur - prev);
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(cur))) return cur;
        if (count > spec.max_nodes) throw QuadratureError("tanh-sinh tolerance not met", cur, err);
        prev = cur;
    }
    throw QuadratureError("tanh-sinh tolerance not met", prev, err);
}

}  // namespace

const QuadratureRule& gauss_jacobi_rule(int n, double a, double b) {
    if (n < 1) throw ParameterError("quadrature rule needs at least one node");
    if (!(a > -1.0) || !(b > -1.0)) throw ParameterError("Jacobi exponents must exceed -1");
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto key = std::make_tuple(n, a, b);
    auto it = rule_cache.find(key);
    if (it != rule_cache.end()) return *it->second;
    auto [pos, inserted] = rule_cache.emplace(key, build_rule(n, a, b));
    return *pos->second;
}

QuadratureResult integrate(const std::function<cplx(double)>& f, Interval iv,
                           const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
        throw ParameterError("quadrature tolerances must be positive");
    if (iv.hi == iv.lo) return {0.0, 0.0, 0};
    if (spec.family == QuadratureFamily::tanh_sinh) {
        double err = 0.0;
        int count = 0;
        cplx v = tanh_sinh(f, iv, spec, err, count);
        return {v, err, count};
    }
    const bool jac = spec.family == QuadratureFamily::gauss_jacobi;
    const double left = jac ? spec.left_exponent : 0.0;
    const double right = jac ? spec.right_exponent : 0.0;
    if (!(left > -1.0) || !(right > -1.0)) throw ParameterError("endpoint exponents must exceed -1");
    const double half = 0.5 * (iv.hi - iv.lo);
    auto estimate = [&](int n) {
        // the rule carries (1-t)^right (1+t)^left
        const QuadratureRule& r = gauss_jacobi_rule(n, right, left);
        cplx acc = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            double dl = half * r.left_gap[i];
            double dr = half * r.right_gap[i];
            double x = iv.lo + dl;
            double wgt = 1.0;
            if (left != 0.0) wgt *= std::pow(dl, left);
            if (right != 0.0) wgt *= std::pow(dr, right);
            acc += r.weights[i] * (f(x) / wgt);
        }
        return acc * std::pow(half, 1.0 + left + right);
    };
    int n = std::max(2, spec.initial_nodes);
    cplx prev = estimate(n);
    int used = n;
    double err = std::numeric_limits<double>::infinity();
    while (2 * n <= spec.max_nodes) {
        n *= 2;
        cplx cur = estimate(n);
        used += n;
        err = std::abs(cur - prev);
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(cur))) return {cur, err, used};
        prev = cur;
    }
    throw QuadratureError("quadrature tolerance not met", prev, err);
}

}  // namespace cherednik
