#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "cherednik/core.hpp"

namespace cherednik {

// Nodes and weights on [-1, 1] for the weight (1-t)^a (1+t)^b.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    // 1 - t and 1 + t at each node, kept separately to avoid cancellation
    std::vector<double> right_gap;
    std::vector<double> left_gap;
};

// Cached and immutable once built; safe to share between threads.
const QuadratureRule& gauss_jacobi_rule(int n, double a, double b);
inline const QuadratureRule& gauss_legendre_rule(int n) { return gauss_jacobi_rule(n, 0.0, 0.0); }

enum class QuadratureFamily { gauss_legendre, gauss_jacobi, tanh_sinh };

struct QuadratureSpec {
    QuadratureFamily family = QuadratureFamily::gauss_legendre;
    int max_nodes = 4096;
    double abs_tol = 1e-9;
    double rel_tol = 1e-12;
    // endpoint behaviour (x-lo)^left (hi-x)^right absorbed by gauss-jacobi
    double left_exponent = 0.0;
    double right_exponent = 0.0;
    int initial_nodes = 16;
};

struct Interval {
    double lo;
    double hi;
};

struct QuadratureResult {
    cplx value;
    double error;
    int nodes;
};

// Integrate the full integrand f over [lo, hi]. For gauss-jacobi the stated
// endpoint powers are divided out at the nodes and carried by the rule.
// Node count doubles until successive estimates agree; throws QuadratureError
// with the best estimate otherwise.
QuadratureResult integrate(const std::function<cplx(double)>& f, Interval iv,
                           const QuadratureSpec& spec = {});

// Fixed-order n-node Gauss-Jacobi sum of a smooth remainder h over [lo, hi]:
// approximates  int_lo^hi (x-lo)^left (hi-x)^right h(x) dx.
template <class F>
auto jacobi_weighted_sum(int n, double lo, double hi, double left, double right, F&& h)
    -> decltype(h(0.0)) {
    const QuadratureRule& rule = gauss_jacobi_rule(n, right, left);
    const double half = 0.5 * (hi - lo);
    decltype(h(0.0)) acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * h(lo + half * rule.left_gap[i]);
    return acc * std::pow(half, 1.0 + left + right);
}

}  // namespace cherednik
