#include <cmath>
#include <random>

#include "cherednik/jacobi.hpp"
#include "cherednik/specfun.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cherednik;
using test_util::rel_diff;

TEST_CASE("phi normalization and the terminating case") {
    Params p(1.5, 0.5);
    CHECK(phi(p, cplx(2.0, -0.3), 0.0) == cplx(1.0));
    const cplx irho = I * p.rho();
    for (double x : {0.1, 0.7, 3.0, 12.0}) CHECK(std::abs(phi(p, irho, x) - 1.0) < 1e-14);
}

TEST_CASE("phi: both hypergeometric lines agree") {
    Params p(1.0, 0.5);
    CHECK(rel_diff(phi_sinh_form(p, 2.0, 0.7), phi_tanh_form(p, 2.0, 0.7)) < 1e-12);
    // x = 0.6 keeps -sinh^2 x inside the direct-series disc, so no transformation is shared
    CHECK(rel_diff(phi_sinh_form(p, 2.0, 0.6), phi_tanh_form(p, 2.0, 0.6)) < 1e-12);
    CHECK(rel_diff(phi_sinh_form(p, cplx(1.0, 1.0), 0.2), phi_tanh_form(p, cplx(1.0, 1.0), 0.2)) < 1e-12);
}

TEST_CASE("phi against frozen 40-digit references") {
    Params p(1.5, 0.5);
    CHECK(rel_diff(phi(p, 50.0, 1.0), cplx(-0.00054701154647583066541)) < 1e-9);
    CHECK(rel_diff(phi(p, cplx(1.0, 1.0), 2.5), cplx(0.0078195051376604722119, -0.024933364623791313996)) < 1e-12);
    CHECK(rel_diff(phi(p, 0.0, 30.0), cplx(5.7030327862973987395e-37)) < 1e-10);
}

TEST_CASE("phi is even in x and in lambda") {
    Params p(0.75, 0.25);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double x = -4.9 + 0.2 * i;
        cplx l(0.3 + 0.1 * i, 0.02 * i - 0.5);
        cplx v = phi(p, l, x);
        worst = std::max({worst, rel_diff(v, phi(p, l, -x)), rel_diff(v, phi(p, -l, x))});
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("phi derivative identity by finite differences") {
    Params p(1.5, 0.5);
    const double x = 0.8, h = 1e-3;
    const cplx l = 1.0;
    cplx fd = (-phi(p, l, x + 2 * h) + 8.0 * phi(p, l, x + h) - 8.0 * phi(p, l, x - h) + phi(p, l, x - 2 * h)) / (12.0 * h);
    CHECK(std::abs(fd - phi_derivative(p, l, x)) < 1e-8);
}

TEST_CASE("quadratic transformation") {
    CHECK(quadratic_transform_check(0.8, 1.3, 0.0) == 0.0);
    CHECK(quadratic_transform_check(0.8, 1.3, 0.9) <= 1e-11);
    // lambda = i(alpha+1/2) terminates both sides: rho of (alpha,-1/2) is alpha+1/2
    CHECK(quadratic_transform_check(0.8, I * 1.3, 1.7) <= 1e-13);
}

TEST_CASE("c-function") {
    Params p(1.5, 0.5);
    CHECK(rel_diff(c_func(p, 2.0), c_func_duplicated(p, 2.0)) < 1e-12);
    CHECK(rel_diff(c_func(p, cplx(0.7, -0.4)), c_func_duplicated(p, cplx(0.7, -0.4))) < 1e-12);
    CHECK_THROWS_AS(c_func(p, 0.0), PoleError);
    // reference from a 40-digit evaluation of the Gamma quotient
    CHECK(rel_diff(c_func(Params(1.0, 1.0), 1.0), cplx(-1.2966889641428691685, -4.5310756818165686932)) < 1e-12);
    for (double l : {1e-6, 0.3, 2.0, 25.0})
        CHECK(rel_diff(inv_abs_c_squared(p, l), 1.0 / std::norm(c_func(p, l))) < 1e-11);
    CHECK(inv_abs_c_squared(p, 0.0) == 0.0);
}

TEST_CASE("asymptotic expansion") {
    Params p(1.5, 0.5);
    CHECK(phi_asymptotic_residual(p, 1.0, 3.0) <= 1e-9);
    CHECK(phi_asymptotic_residual(p, cplx(2.0, 0.5), 1.2) <= 1e-9);
    CHECK_THROWS_AS(phi_asymptotic_residual(p, I, 3.0), DomainError);
    CHECK_THROWS_AS(phi_asymptotic_residual(p, 0.0, 3.0), DomainError);
}

TEST_CASE("lambda = 0 asymptotics") {
    auto ratio = [](const Params& p, double x) {
        return phi(p, 0.0, x).real() * std::exp(p.rho() * x) / x / phi0_asymptotic_constant(p);
    };
    // the correction is O(1/x); within 10% at x = 6 for these parameters
    CHECK(std::abs(ratio(Params(1.0, 1.0), 6.0) - 1.0) < 0.1);
    CHECK(std::abs(ratio(Params(0.75, 0.25), 6.0) - 1.0) < 0.1);
    // at (1.5, 0.5) x = 6 is still 17% off; the ratio closes in as x grows
    Params p(1.5, 0.5);
    double e6 = std::abs(ratio(p, 6.0) - 1.0), e15 = std::abs(ratio(p, 15.0) - 1.0), e30 = std::abs(ratio(p, 30.0) - 1.0);
    CHECK(e15 < e6);
    CHECK(e30 < e15);
    CHECK(e30 < 0.05);
}

TEST_CASE("weight A") {
    Params p(1.5, 0.5);
    CHECK(weight_A(p, 0.0) == 0.0);
    CHECK(rel_diff(weight_A(p, 1.0), std::pow(std::sinh(1.0), 4.0) * std::pow(std::cosh(1.0), 2.0)) < 1e-14);
    const double z = 0.8;
    double s2 = std::sinh(2.0 * z);
    CHECK(rel_diff(weight_A(p.shifted(), z), s2 * s2 / 4.0 * weight_A(p, z)) < 1e-14);
    CHECK(rel_diff(log_weight_A(p, 300.0), 6.0 * 300.0 - 6.0 * std::log(2.0)) < 1e-14);
}

TEST_CASE("W: support, closed form against the angular integral, mass") {
    Params p(1.5, 0.5);
    CHECK(kernel_W(p, 0.8, 1.1, 0.2) == 0.0);
    CHECK(kernel_W(p, 0.8, 1.1, 2.0) == 0.0);
    CHECK(rel_diff(kernel_W_closed(p, 0.8, 1.1, 1.5), kernel_W_angular(p, 0.8, 1.1, 1.5)) < 1e-9);
    CHECK(std::abs(kernel_W_mass(p, 0.8, 1.1) - 1.0) < 1e-8);
    CHECK(std::abs(kernel_W_mass(p, 0.8, 0.8) - 1.0) < 1e-8);
    // alpha - beta < 1: the angular weight is endpoint singular
    Params q(0.75, 0.25);
    CHECK(rel_diff(kernel_W_closed(q, 0.5, 0.9, 1.1), kernel_W_angular(q, 0.5, 0.9, 1.1)) < 1e-9);
    CHECK(std::abs(kernel_W_mass(q, 2.5, 0.4) - 1.0) < 1e-8);
}

TEST_CASE("W is symmetric and nonnegative") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.1, 2.0);
    Params p(1.5, 0.5);
    int tested = 0;
    double worst = 0.0;
    while (tested < 20) {
        double x = u(rng), y = u(rng), z = u(rng);
        if (!in_open_triangle(x, y, z)) continue;
        ++tested;
        double w = kernel_W(p, x, y, z);
        CHECK(w >= 0.0);
        for (double v : {kernel_W(p, y, x, z), kernel_W(p, x, z, y), kernel_W(p, z, y, x), kernel_W(p, y, z, x),
                         kernel_W(p, z, x, y)})
            worst = std::max(worst, rel_diff(w, v));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("1 - B^2 factorizations agree") {
    for (auto [x, y, z] : {std::tuple{0.8, 1.1, 1.5}, {0.3, 0.4, 0.5}, {2.0, 1.5, 3.0}}) {
        OneMinusB2 f = one_minus_b2(x, y, z);
        CHECK(rel_diff(f.cosh_form, f.sinh_form) < 1e-12);
    }
}

TEST_CASE("alpha = beta and beta = -1/2 kernels") {
    const double a = 0.75, x = 0.9, y = 1.2, z = 1.6;
    // change of variable z -> z/2 in the alpha = beta product formula fixes the factor 2^{-2a-2}
    CHECK(rel_diff(kernel_W_half(a, x, y, z), std::pow(2.0, -2.0 * a - 2.0) * kernel_W_equal(a, x / 2, y / 2, z / 2)) < 1e-14);
    CHECK(std::abs(kernel_W_mass(Params(a, -0.5), x, y) - 1.0) < 1e-8);
    // the hypergeometric closed form is continuous in beta down to -1/2
    CHECK(rel_diff(kernel_W_closed(Params(a, -0.5), x, y, z), kernel_W_half(a, x, y, z)) < 1e-12);
    CHECK(kernel_W_equal(1.0, 0.7, 0.5, 1.2) == 0.0);
    CHECK(std::abs(kernel_W_mass(Params(1.0, 1.0), 0.7, 1.0) - 1.0) < 1e-8);
}

TEST_CASE("Jacobi product formula") {
    Params p(1.5, 0.5);
    CHECK(product_check_phi(p, I * p.rho(), 0.8, 1.1) <= 1e-8);
    CHECK(product_check_phi(p, 2.0, 0.8, 1.1) <= 1e-7);
    CHECK(product_check_phi(Params(1.0, 1.0), 1.5, 0.6, 0.9) <= 1e-7);
    CHECK(product_check_phi(Params(0.75, -0.5), cplx(1.0, 0.5), 0.6, 0.9) <= 1e-7);
}

TEST_CASE("change of variables lands in the triangle") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        double x = 3.0 * u(rng), y = 3.0 * u(rng), r = u(rng), psi = pi * u(rng);
        cplx g = std::cosh(x) * std::cosh(y) + std::sinh(x) * std::sinh(y) * std::polar(r, psi);
        double z = std::acosh(std::max(1.0, std::abs(g)));
        CHECK(z >= std::abs(x - y) - 1e-12);
        CHECK(z <= x + y + 1e-12);
    }
}

TEST_CASE("addition formula pieces") {
    Params p(1.5, 0.5);
    CHECK(chi_poly(p, 0, 0, 0.3, 2.0) == 1.0);
    CHECK(chi_poly(p, 0, 0, 0.9, 0.1) == 1.0);
    // chi_{1,0} = r cos psi
    CHECK(std::abs(chi_poly(p, 1, 0, 0.6, 1.1) - 0.6 * std::cos(1.1)) < 1e-15);
    // dm is a probability measure, so the defining integral gives 1
    CHECK(std::abs(pi_norm(p, 0, 0) - 1.0) < 1e-13);
    CHECK(std::abs(pi_norm_closed(p, 0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(chi_inner_product(p, 1, 0, 0, 0)) < 1e-9);
    for (int k1 = 0; k1 <= 2; ++k1)
        for (int l1 = 0; l1 <= k1; ++l1)
            for (int k2 = 0; k2 <= 2; ++k2)
                for (int l2 = 0; l2 <= k2; ++l2) {
                    double ip = chi_inner_product(p, k1, l1, k2, l2);
                    if (k1 == k2 && l1 == l2)
                        CHECK(rel_diff(ip, 1.0 / pi_norm(p, k1, l1)) < 1e-9);
                    else
                        CHECK(std::abs(ip) < 1e-9);
                }
    // phi_{+-lambda,1,0} = (rho -+ i lambda)/(4(alpha+1)) sinh 2x phi^{(alpha+1,beta+1)}
    const double x = 0.7;
    cplx l = 1.3;
    cplx expect = (p.rho() - I * l) / (4.0 * (p.alpha() + 1.0)) * std::sinh(2 * x) * phi(p.shifted(), l, x);
    CHECK(rel_diff(phi_modified(p, 1, 0, l, x), expect) < 1e-13);
    AdditionComponents c = addition_components(p, 2, 1, l, x, 0.5, 0.4);
    CHECK(c.chi == doctest::Approx(chi_poly(p, 2, 1, 0.5, 0.4)));
}

TEST_CASE("addition series") {
    Params p(1.5, 0.5);
    // x = 0: only the k = l terms survive
    CHECK(addition_series_check(p, 1.0, 0.0, 0.8, 0.6, 1.0, 8) <= 1e-6);
    CHECK(addition_series_check(p, 1.0, 0.5, 0.7, 0.6, 1.0, 10) <= 1e-5);
    CHECK(addition_series_check(p, 1.0, 0.5, 0.7, 0.6, 1.0, 12) <= addition_series_check(p, 1.0, 0.5, 0.7, 0.6, 1.0, 6));
    CHECK(addition_series_check(Params(0.75, 0.25), 2.0, 0.3, 0.4, 0.9, 2.5, 10) <= 1e-5);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Params(-0.5, -0.5), ParameterError);
    CHECK_THROWS_AS(Params(0.5, 0.7), ParameterError);
    CHECK_THROWS_AS(kernel_W_angular(Params(1.0, 1.0), 0.5, 0.5, 0.5), ParameterError);
    CHECK_THROWS_AS(weight_A(Params(1.0, 0.0), -1.0), DomainError);
}
