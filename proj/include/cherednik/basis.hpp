#pragma once

#include <vector>

#include "cherednik/core.hpp"
#include "cherednik/dunkl.hpp"
#include "cherednik/opdam.hpp"
#include "cherednik/transform.hpp"

namespace cherednik {

// H_n^delta; n is the full index, so even n uses P_{n/2}^{(a,delta)} and odd n uses
// P_{(n-1)/2}^{(a+1,delta-1)} times tanh x.
struct BasisIndex {
    int n;
    double delta;
    BasisIndex(int n_, double delta_);
    bool odd() const { return n % 2 == 1; }
    int degree() const { return n / 2; }  // degree of the Jacobi polynomial
};

// (cosh x)^{-a-b-delta-2} P(1 - 2 tanh^2 x) [tanh x], the cosh power taken in log space
double h_eval(const Params& p, const BasisIndex& b, double x);

// <H_m, H_n> in L^2(R, A(|x|) dx) by Gauss-Jacobi in z = 1 - 2 tanh^2 x; exactly 0 for mixed parity.
// The even weight is 2^{-a-delta-1} (1-z)^a (1+z)^delta. The odd one is 2^{-a-delta-2} (1-z)^{a+1} (1+z)^delta,
// for which P^{(a+1,delta-1)} is not an orthogonal family: odd off-diagonal entries do not vanish.
double gram(const Params& p, double delta, int m, int n);
// Gamma(a+k+1)Gamma(delta+k+1)/((a+delta+2k+1) k! Gamma(a+delta+k+1)) for n = 2k and
// Gamma(a+k+2)Gamma(delta+k)/((a+delta+2k+1) k! Gamma(a+delta+k+1)) for n = 2k+1.
// The even value is ||H_n||^2; the odd value is the norm P^{(a+1,delta-1)} would have with weight
// (1+z)^{delta-1}, and differs from gram(n, n).
double gram_norm(const Params& p, double delta, int n);
// (N+1) x (N+1) Gram matrix of H_0..H_N, row major
std::vector<double> gram_matrix(const Params& p, double delta, int N);
// 2-norm condition number of a symmetric positive definite matrix; infinity if singular
double condition_number(const std::vector<double>& m, int size);

// Closed-form transform of H_n. Sign convention: the same kernel G_lambda(-x) as opdam_transform,
// which flips the sign of the odd-index formula as usually displayed (proof done with G_lambda(x)).
// PoleError where a Gamma factor has a pole.
cplx transform_closed_form(const Params& p, const BasisIndex& b, cplx lambda);

// Coefficients of the Rodrigues polynomial in t (ascending), normalized so that
// Q(T) (cosh x)^{-a-b-delta-2} = H_n; odd ones carry the sign matching the kernel G_lambda(-x).
std::vector<double> rodrigues_coefficients(const Params& p, const BasisIndex& b);
// max over xs of |Q(T) H_0 - H_n| with T iterated by finite differences; xs must avoid 0
double rodrigues_check(const Params& p, const BasisIndex& b, const std::vector<double>& xs,
                       const FiniteDifferenceScheme& fd = {});

// delta = eps^{-2}, x -> eps x, alpha = beta:
//   even: |H_{2n}(eps x) - e^{-x^2/2} L_n^a(x^2)|
//   odd:  |eps^{-1} H_{2n+1}(eps x) - e^{-x^2/2} L_n^{a+1}(x^2) x|
struct HermiteLimit {
    LimitReport even;
    LimitReport odd;
};
HermiteLimit hermite_limit(double alpha, int n, double x, const std::vector<double>& epsilons);

// Residual norms ||f - proj_N f|| for N = 0..max_index, projecting through the Gram matrix
// (the odd family is not orthogonal); inner products taken on the sampled grid of f
std::vector<double> projection_residuals(const Params& p, double delta, const SampledFunction& f, int max_index);

}  // namespace cherednik
