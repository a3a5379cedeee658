#pragma once

#include <limits>
#include <vector>

#include "cherednik/core.hpp"
#include "cherednik/transform.hpp"

namespace cherednik {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// Norm in L^p(R, A(|x|) dx); p = infinity is the sup over grid nodes.
struct LpReport {
    double p;
    double norm;
};
LpReport lp_norm(const Params& prm, const SampledFunction& f, double p);

// 4 + Gamma(a+1)Gamma(b+1/2)/(Gamma(a+1/2)Gamma(b+1)) for a > b, 5/2 for a = b
double bound_constant(const Params& prm);

// C^infinity bump exp(1 - 1/(1 - ((x-c)/w)^2)) on |x - c| < w, sampled on [-L, L] with its support recorded.
SampledFunction bump(double center, double width, double half_width, int panels = 32, int order = 16);

// Nodes and weights with sum w_k f(z_k) = int f dmu_{x,y}, for f vanishing off [clip_lo, clip_hi].
// Each piece of the support is integrated by Gauss-Jacobi, with the kernel's edge exponent
// kept only at ends that are not clipped.
struct TranslationRule {
    std::vector<double> z;
    std::vector<double> w;
};
TranslationRule translation_rule(const Params& prm, double x, double y, double clip_lo, double clip_hi,
                                 int nodes = 32);

// tau_x f(y) = int f dmu_{x,y}
cplx translate(const Params& prm, const SampledFunction& f, double x, double y, int nodes = 32);
// y -> tau_x f(y) sampled on [-(|x| + s), |x| + s], s the support radius of f
SampledFunction translate_function(const Params& prm, const SampledFunction& f, double x, int panels = 16,
                                   int order = 16, int nodes = 32);

struct NormComparison {
    double lhs;
    double rhs;
};
// (||tau_x f||_p, C ||f||_p)
NormComparison translate_norm_check(const Params& prm, const SampledFunction& f, double x, double p);

struct ConvolutionGrid {
    int panels = 16;
    int order = 16;
    double margin = 0.25;  // output grid reaches this far past the predicted support
};
// (f * g)(x) = int tau_x f(-y) g(y) A(|y|) dy on [-(a+b+margin), a+b+margin]
SampledFunction convolve(const Params& prm, const SampledFunction& f, const SampledFunction& g,
                         const ConvolutionGrid& grid = {});
// Largest |f*g| at output nodes outside [-(a+b), a+b].
double support_leak(const SampledFunction& conv, double radius);

// (||f*g||_r, C ||f||_p ||g||_q); throws ParameterError unless 1/p + 1/q - 1 = 1/r.
NormComparison young_check(const Params& prm, const SampledFunction& f, const SampledFunction& g, double p, double q,
                           double r);
NormComparison young_check(const Params& prm, const SampledFunction& f, const SampledFunction& g,
                           const SampledFunction& conv, double p, double q, double r);

// G_0(x) = phi_0(x) + (rho/2)/(a+1) sinh x cosh x phi_0^{(a+1,b+1)}(x)
double g0_eval(const Params& prm, double x);
// 2^{rho+2} Gamma(a+1) / (Gamma(rho/2) Gamma((a-b+1)/2)), the coefficient of x e^{-rho x}
double g0_asymptotic_constant(const Params& prm);
// G_0(x) e^{rho x} / (x * constant); tends to 1 like 1 - O(1/x)
double g0_asymptotic_ratio(const Params& prm, double x);
// max over the grids of (|G_lambda(x)| - G_0(x)) / G_0(x), real lambda
double g_bound_check(const Params& prm, const std::vector<double>& lambdas, const std::vector<double>& xs);
// ||G_lambda||_q over R, integrated on [-X, X] where the tail is below 1e-16 of the total
double g_lq_norm(const Params& prm, cplx lambda, double q);

struct KunzeSteinReport {
    double ratio_1;  // ||f*g||_2 / (||f||_p ||g||_2)
    double ratio_2;  // ||f*g||_q / (||f||_2 ||g||_2)
    double bound_1;  // ||G_0||_{p'}, p' the dual index of p
    double bound_2;  // C ||G_0||_q
    bool flagged;    // a ratio exceeds its bound
};
KunzeSteinReport kunze_stein_check(const Params& prm, const SampledFunction& f, const SampledFunction& g, double p,
                                   double q);
KunzeSteinReport kunze_stein_check(const Params& prm, const SampledFunction& f, const SampledFunction& g,
                                   const SampledFunction& conv, double p, double q);

}  // namespace cherednik
