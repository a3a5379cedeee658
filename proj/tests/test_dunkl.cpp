#include <cmath>
#include <random>

#include "cherednik/dunkl.hpp"
#include "cherednik/jacobi.hpp"
#include "cherednik/opdam.hpp"
#include "cherednik/specfun.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cherednik;
using test_util::rel_diff;

TEST_CASE("Dunkl kernel E") {
    CHECK(dunkl_E(1.0, 0.0, 0.7) == cplx(1.0));
    CHECK(dunkl_E(1.0, 2.0, 0.0) == cplx(1.0));
    // 30-digit Bessel references
    CHECK(rel_diff(dunkl_E(1.0, 2.0, 0.7), cplx(0.774211019901220761647, 0.296222713609902914694)) < 1e-12);
    CHECK(rel_diff(dunkl_E(0.75, cplx(0.5, 0.3), 1.2), cplx(0.872202566533114148029, 0.111326939041456372414)) < 1e-12);
    for (double l : {0.3, 1.0, 4.0, 11.0})
        for (double x : {-1.3, 0.4, 2.2}) {
            cplx prod = dunkl_E(0.75, l, x) * dunkl_E(0.75, -l, x);
            CHECK(std::abs(prod.imag()) <= 1e-12 * std::max(1.0, std::abs(prod)));
        }
    CHECK_THROWS_AS(dunkl_E(-0.5, 1.0, 1.0), ParameterError);
}

TEST_CASE("E is the eigenfunction of the rational Dunkl operator") {
    // f' + (2a+1)(f(x) - f(-x))/(2x) = i lambda f
    const double a = 0.75, h = 1e-3;
    const cplx l(1.3, 0.2);
    for (double x : {-1.1, 0.4, 2.0}) {
        auto f = [&](double u) { return dunkl_E(a, l, u); };
        cplx d = finite_difference(f, x, {4, h});
        cplx lhs = d + (2.0 * a + 1.0) * (f(x) - f(-x)) / (2.0 * x);
        CHECK(std::abs(lhs - I * l * f(x)) < 1e-9);
    }
}

TEST_CASE("kernel k: forms, support, mass, product formula") {
    CHECK(rel_diff(dunkl_kernel_k(1.0, 0.5, 0.7, 1.0), dunkl_kernel_k_bracket(1.0, 0.5, 0.7, 1.0)) < 1e-12);
    CHECK(dunkl_kernel_k(1.0, 0.5, 0.7, 1.3) == 0.0);
    CHECK(dunkl_kernel_k(1.0, 0.5, 0.7, -0.1) == 0.0);
    CHECK(dunkl_kernel_k(1.0, 0.0, 0.7, 0.7) == 0.0);
    CHECK(std::abs(dunkl_kernel_mass(1.0, 0.8, 1.1) - 1.0) < 1e-10);
    CHECK(std::abs(dunkl_kernel_mass(0.3, 0.8, -0.8) - 1.0) < 1e-10);
    CHECK(dunkl_product_check(1.0, 1.5, 0.8, 1.1) <= 1e-6);
    CHECK(dunkl_product_check(2.5, cplx(1.0, 0.5), -0.8, 1.1) <= 1e-6);
    CHECK(dunkl_product_check(0.75, 4.0, 0.0, 1.1) <= 1e-14);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int tested = 0;
    double worst = 0.0;
    while (tested < 50) {
        double x = u(rng), y = u(rng), z = u(rng);
        if (!in_open_triangle(x, y, z) || x == 0.0 || y == 0.0 || z == 0.0) continue;
        ++tested;
        worst = std::max(worst, rel_diff(dunkl_kernel_k(0.6, x, y, z), dunkl_kernel_k_bracket(0.6, x, y, z)));
    }
    CHECK(worst < 1e-11);
}

TEST_CASE("kernel k shares the symmetries and sign pattern of K") {
    const double k = dunkl_kernel_k(1.0, 0.6, 0.9, 1.2);
    CHECK(rel_diff(k, dunkl_kernel_k(1.0, 0.9, 0.6, 1.2)) < 1e-14);
    CHECK(rel_diff(k, dunkl_kernel_k(1.0, -1.2, 0.9, -0.6)) < 1e-14);
    CHECK(rel_diff(k, dunkl_kernel_k(1.0, 0.6, -1.2, -0.9)) < 1e-14);
    CHECK(k > 0.0);
    CHECK(dunkl_kernel_k(1.0, 0.6, 0.9, -1.2) < 0.0);
}

TEST_CASE("rational limit of G") {
    LimitReport r = rational_limit_G(1.0, 1.0, 0.9, {0.2, 0.1, 0.05});
    CHECK(r.strictly_decreasing());
    CHECK(r.errors.size() == 3);
    // first-order convergence: the rho part of the odd term survives at order eps,
    // error / eps -> rho x |j_{a+1}(lambda x)| / (2(a+1))
    for (auto [a, l, x] : {std::tuple{1.0, 1.0, 0.9}, {0.75, 2.0, -0.7}, {1.0, 0.0, 0.9}}) {
        LimitReport s = rational_limit_G(a, l, x, {0.02, 0.01, 0.005});
        CHECK(s.strictly_decreasing());
        const double lead = (2.0 * a + 1.0) * std::abs(x) * std::abs(bessel_j_norm(a + 1.0, l * x)) / (2.0 * (a + 1.0));
        CHECK(std::abs(s.errors[2] / 0.005 / lead - 1.0) < 0.02);
    }
    // lambda = 0: both sides tend to 1 but G_0 is not constant, so the error is of order eps, not zero
    LimitReport z = rational_limit_G(1.0, 0.0, 0.9, {0.1});
    CHECK(std::abs(z.errors[0] - std::abs(G(Params(1.0, 1.0), 0.0, 0.09) - 1.0)) < 1e-15);
    CHECK(z.errors[0] > 1e-2);
}

TEST_CASE("rational limit of the kernel") {
    const double x = 0.6, y = 0.9, z = 1.2, k = dunkl_kernel_k(1.0, x, y, z);
    LimitReport r = rational_limit_kernel(1.0, x, y, z, {0.02, 0.01, 0.005});
    CHECK(r.strictly_decreasing());
    // leading error term comes from e^{eps(x+y-z)}
    CHECK(std::abs(r.errors[2] / 0.005 / (std::abs(x + y - z) * k) - 1.0) < 0.05);
    LimitReport out = rational_limit_kernel(1.0, x, y, 2.0, {0.2, 0.1});
    CHECK(out.errors[0] == 0.0);
    CHECK(out.errors[1] == 0.0);
    LimitReport other = rational_limit_kernel(0.75, -0.5, 0.9, 0.7, {0.04, 0.02, 0.01});
    CHECK(other.strictly_decreasing());
}

TEST_CASE("product formula limit") {
    for (auto [l, x, y] : {std::tuple{1.5, 0.8, 1.1}, {1.0, -0.6, 0.9}, {2.0, 0.5, 0.5}}) {
        LimitReport r = rational_limit_product(1.0, l, x, y, {0.2, 0.1, 0.05});
        CHECK(r.strictly_decreasing());
    }
}

TEST_CASE("limit report bookkeeping") {
    LimitReport r{{0.2, 0.1}, {1.0, 1.0}};
    CHECK_FALSE(r.strictly_decreasing());
    CHECK_THROWS_AS(rational_limit_G(1.0, 1.0, 0.5, {0.0}), ParameterError);
}
