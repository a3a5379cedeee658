#pragma once

#include <functional>
#include <vector>

#include "cherednik/core.hpp"

namespace cherednik {

// Max-norm errors at a decreasing sequence of scale parameters.
struct LimitReport {
    std::vector<double> epsilons;
    std::vector<double> errors;
    bool strictly_decreasing() const;
};

// E_alpha(i lambda, x) = j_alpha(lambda x) + (i lambda x/(2(alpha+1))) j_{alpha+1}(lambda x)
cplx dunkl_E(double alpha, cplx lambda, double x);

// Product kernel of E_alpha against |z|^{2 alpha+1} dz; zero off ||x|-|y|| < |z| < |x|+|y|.
// Cubic form: 2^{-2a-1} c_a [Q]^{a-1/2} |xyz|^{-2a} (x+y+z)(-x+y+z)(x-y+z)/(xyz).
double dunkl_kernel_k(double alpha, double x, double y, double z);
// Bracket form: 2^{-2a} c_a [1 - s(x,y,z) + s(z,y,x) + s(x,z,y)] [Q]^{a-1/2} |xyz|^{-2a},
// s(x,y,z) = (x^2+y^2-z^2)/(2xy).
double dunkl_kernel_k_bracket(double alpha, double x, double y, double z);

// int f(z) k(x,y,z) |z|^{2 alpha+1} dz over both halves of the support.
cplx integrate_dunkl_kernel(double alpha, double x, double y, const std::function<cplx(double)>& f,
                            double abs_tol = 1e-11);
// int k |z|^{2 alpha+1} dz
double dunkl_kernel_mass(double alpha, double x, double y);
// |E(x)E(y) - int E(z) k(x,y,z) |z|^{2 alpha+1} dz|
double dunkl_product_check(double alpha, cplx lambda, double x, double y);

// errors[i] = |G^{(a,a)}_{lambda/eps}(eps x) - E_alpha(i lambda, x)|
LimitReport rational_limit_G(double alpha, cplx lambda, double x, const std::vector<double>& epsilons);
// errors[i] = |eps^{2a+2} K_{a,a}(eps x, eps y, eps z) - k_alpha(x, y, z)|
LimitReport rational_limit_kernel(double alpha, double x, double y, double z, const std::vector<double>& epsilons);
// errors[i] = |int G_{lambda/eps} dmu_{eps x, eps y} - int E k |z|^{2a+1} dz|, both sides computed by quadrature
LimitReport rational_limit_product(double alpha, cplx lambda, double x, double y, const std::vector<double>& epsilons);

}  // namespace cherednik
