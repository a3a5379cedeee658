#pragma once

#include <array>
#include <functional>

#include "cherednik/core.hpp"

namespace cherednik {

// Finite-difference settings for T; step must lie in [1e-6, 1e-2].
struct FiniteDifferenceScheme {
    int order = 4;  // 2 or 4
    double step = 1e-3;
    void validate() const;
};

// Opdam function G_lambda(x) = phi_lambda(x) + (rho + i lambda)/(4(alpha+1)) sinh 2x phi^{(alpha+1,beta+1)}_lambda(x).
cplx G(const Params& p, cplx lambda, double x);
// phi - (rho - i lambda)^{-1} d/dx phi with the derivative taken numerically (Ridders extrapolation).
// DomainError at lambda = -i rho.
cplx G_derivative_form(const Params& p, cplx lambda, double x);

struct EvenOdd {
    cplx even;
    cplx odd;
};
EvenOdd split_even_odd(const Params& p, cplx lambda, double x);

using ComplexFunction = std::function<cplx(double)>;

cplx finite_difference(const ComplexFunction& f, double x, const FiniteDifferenceScheme& fd);
// f' + {(2a+1) coth x + (2b+1) tanh x}(f(x) - f(-x))/2 - rho f(-x); DomainError at x = 0.
cplx cherednik_apply(const Params& p, const ComplexFunction& f, double x, const FiniteDifferenceScheme& fd = {});
// Same operator written with k1 = alpha - beta, k2 = beta + 1/2:
// f' + {2 k1/(1 - e^{-2x}) + 4 k2/(1 - e^{-4x})}(f(x) - f(-x)) - (k1 + 2 k2) f(x).
cplx cherednik_apply_k(const Params& p, const ComplexFunction& f, double x, const FiniteDifferenceScheme& fd = {});

// (cosh x cosh y - cosh z cos chi)/(sinh x sinh y), 0 when xy = 0.
double sigma_chi(double x, double y, double z, double chi);
// (cosh 2x cosh 2y - cosh 2z)/(sinh 2x sinh 2y), 0 when xy = 0.
double sigma2(double x, double y, double z);
// 1 - cosh^2 x - cosh^2 y - cosh^2 z + 2 cosh x cosh y cosh z cos chi
double g_fun(double x, double y, double z, double chi);

// Density of mu_{x,y} against A(|z|) dz; zero off ||x|-|y|| < |z| < |x|+|y|.
// ParameterError for beta = -1/2 < alpha.
double kernel_K(const Params& p, double x, double y, double z);
// alpha = beta kernel rebuilt from W, the sigma2 terms and the odd-odd remainder, without the
// closing hyperbolic identity.
double kernel_K_equal_recipe(double alpha, double x, double y, double z);

// Pieces of the kernel, one per parity product:
//   even_even  -> G_e(x) G_e(y)
//   odd_even   -> G_o(x) G_e(y)
//   even_odd   -> G_e(x) G_o(y)
//   odd_odd    -> G_o(x) G_o(y), the sum of odd_odd_first and odd_odd_second
// The first odd-odd piece carries the (rho^2 + lambda^2) part of the product, the second the rest.
enum class KernelPart { even_even, odd_even, even_odd, odd_odd, odd_odd_first, odd_odd_second };
double kernel_part(const Params& p, KernelPart part, double x, double y, double z);

// |(1 - s(x,y,z) + s(z,y,x) + s(x,z,y)) - 4 sinh(x+y+z) sinh(-x+y+z) sinh(x-y+z) cosh(x+y-z)/(sinh 2x sinh 2y sinh 2z)|
// with s = sigma2.
double rho_identity_check(double x, double y, double z);

struct KernelMeasure {
    enum class Kind { density, dirac };
    Kind kind = Kind::density;
    Params params{0.5, 0.5};
    double x = 0.0;
    double y = 0.0;
    // [-|x|-|y|, -||x|-|y||] and [||x|-|y||, |x|+|y|]
    std::array<double, 2> negative{};
    std::array<double, 2> positive{};
    std::function<double(double)> density;  // K(x, y, z), kind == density
    double atom = 0.0;                      // kind == dirac
};

KernelMeasure measure_mu(const Params& p, double x, double y);

struct MeasureTolerance {
    double abs_tol = 1e-9;
    int max_nodes = 4096;
};

// int f dmu; for a density the integral over each half of the support uses Gauss-Jacobi in |z|.
cplx integrate_measure(const KernelMeasure& mu, const ComplexFunction& f, const MeasureTolerance& tol = {});
// Same, with the density replaced by an arbitrary kernel k(z) against A(|z|) dz on the support of mu.
cplx integrate_kernel(const Params& p, double x, double y, const std::function<double(double)>& k,
                      const ComplexFunction& f, const MeasureTolerance& tol = {});
double measure_mass(const KernelMeasure& mu, const MeasureTolerance& tol = {});
double measure_total_variation(const KernelMeasure& mu, const MeasureTolerance& tol = {});
// 4 + Gamma(a+1)Gamma(b+1/2)/(Gamma(a+1/2)Gamma(b+1)) for alpha > beta, 5/2 for alpha = beta.
double total_variation_bound(const Params& p);

// |G(x)G(y) - int G dmu_{x,y}|
double product_check_G(const Params& p, cplx lambda, double x, double y, const MeasureTolerance& tol = {1e-11, 4096});
// |parity product - int G(z) part(x,y,z) A(|z|) dz| for a single kernel piece.
double partial_product_check(const Params& p, KernelPart part, cplx lambda, double x, double y,
                             const MeasureTolerance& tol = {1e-11, 4096});

// The odd-odd product split into its (rho^2 + lambda^2) piece and its rho (rho + i lambda) piece.
struct OddSplit {
    cplx first;
    cplx second;
    cplx odd_product;
};
OddSplit odd_split(const Params& p, cplx lambda, double x, double y);

}  // namespace cherednik
