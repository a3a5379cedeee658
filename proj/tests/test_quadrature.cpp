#include <cmath>

#include "cherednik/quadrature.hpp"
#include "cherednik/specfun.hpp"
#include "doctest.h"

using namespace cherednik;

TEST_CASE("sin power integral against the Beta function") {
    for (double beta : {0.5, 0.0, 0.25, 1.7}) {
        double oracle = std::sqrt(pi) * std::tgamma(beta + 0.5) / std::tgamma(beta + 1.0);
        QuadratureSpec spec;
        spec.abs_tol = 1e-13;
        // (sin t)^{2beta} behaves like t^{2beta} and (pi-t)^{2beta} at the ends
        spec.family = QuadratureFamily::gauss_jacobi;
        spec.left_exponent = 2.0 * beta;
        spec.right_exponent = 2.0 * beta;
        auto r = integrate([&](double t) { return cplx(std::pow(std::sin(t), 2.0 * beta)); }, {0.0, pi}, spec);
        CHECK(std::abs(r.value - oracle) < 1e-11);
    }
}

TEST_CASE("8-node Gauss-Legendre integrates degree 7 exactly") {
    const auto& rule = gauss_legendre_rule(8);
    auto p = [](double x) { return 3.0 * std::pow(x, 7) - 2.0 * std::pow(x, 5) + x * x - 4.0; };
    // on [0,1]: 3/8 - 2/6 + 1/3 - 4
    double exact = 3.0 / 8.0 - 2.0 / 6.0 + 1.0 / 3.0 - 4.0;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += 0.5 * rule.weights[i] * p(0.5 * rule.left_gap[i]);
    CHECK(std::abs(s - exact) < 1e-14);
}

TEST_CASE("endpoint singular integral with Gauss-Jacobi") {
    QuadratureSpec spec;
    spec.family = QuadratureFamily::gauss_jacobi;
    spec.left_exponent = -0.4;
    spec.abs_tol = 1e-12;
    auto r = integrate([](double t) { return cplx(std::pow(t, -0.4)); }, {0.0, 1.0}, spec);
    CHECK(std::abs(r.value - 5.0 / 3.0) < 1e-10);
}

TEST_CASE("tanh-sinh handles both endpoint singularities") {
    QuadratureSpec spec;
    spec.family = QuadratureFamily::tanh_sinh;
    spec.abs_tol = 1e-12;
    spec.max_nodes = 100000;
    auto r = integrate([](double t) { return cplx(std::pow(t * (1.0 - t), -0.25)); }, {0.0, 1.0}, spec);
    double exact = std::tgamma(0.75) * std::tgamma(0.75) / std::tgamma(1.5);
    CHECK(std::abs(r.value - exact) < 1e-10);
}

TEST_CASE("Gauss-Jacobi rule weights sum to the weight integral") {
    for (auto [a, b] : {std::pair{0.0, 0.0}, {-0.5, -0.5}, {1.5, 2.0}, {-0.8, 3.0}}) {
        const auto& r = gauss_jacobi_rule(30, a, b);
        double s = 0.0;
        for (double w : r.weights) s += w;
        double exact = std::pow(2.0, a + b + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) / std::tgamma(a + b + 2.0);
        CHECK(std::abs(s - exact) < 1e-12 * exact);
    }
}

TEST_CASE("jacobi_weighted_sum matches a Beta integral") {
    // int_0^2 x^{0.3} (2-x)^{1.2} dx = 2^{2.5} B(1.3, 2.2)
    double v = jacobi_weighted_sum(20, 0.0, 2.0, 0.3, 1.2, [](double) { return 1.0; });
    double exact = std::pow(2.0, 2.5) * std::tgamma(1.3) * std::tgamma(2.2) / std::tgamma(3.5);
    CHECK(std::abs(v - exact) < 1e-13);
}

TEST_CASE("tolerance failure carries an estimate") {
    QuadratureSpec spec;
    spec.max_nodes = 32;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-15;
    try {
        integrate([](double t) { return cplx(std::sqrt(t)); }, {0.0, 1.0}, spec);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(std::abs(e.best_estimate - 2.0 / 3.0) < 1e-3);
        CHECK(e.error_bound > 0.0);
    }
    spec.abs_tol = -1.0;
    CHECK_THROWS_AS(integrate([](double) { return cplx(1.0); }, {0.0, 1.0}, spec), ParameterError);
}
