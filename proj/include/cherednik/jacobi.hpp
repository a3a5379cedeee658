#pragma once

#include "cherednik/core.hpp"
#include "cherednik/quadrature.hpp"

namespace cherednik {

// Jacobi function phi_lambda^{(alpha,beta)}(x); even in x and in lambda.
cplx phi(const Params& p, cplx lambda, double x);
// The two hypergeometric representations, evaluated literally at any x.
cplx phi_sinh_form(const Params& p, cplx lambda, double x);
cplx phi_tanh_form(const Params& p, cplx lambda, double x);
// d/dx phi_lambda(x) = -((rho^2+lambda^2)/(4(alpha+1))) sinh 2x phi_lambda^{(alpha+1,beta+1)}(x)
cplx phi_derivative(const Params& p, cplx lambda, double x);

// |phi^{(alpha,-1/2)}_lambda(x) - phi^{(alpha,alpha)}_{2 lambda}(x/2)|
double quadratic_transform_check(double alpha, cplx lambda, double x);

// Harish-Chandra c-function, Gamma(2a+1)/Gamma(a+1/2) form. PoleError when Gamma(i lambda) has a pole.
cplx c_func(const Params& p, cplx lambda);
// The duplicated form Gamma(a+1) 2^{rho - i lambda} Gamma(i lambda) / (...).
cplx c_func_duplicated(const Params& p, cplx lambda);
// 1/|c(lambda)|^2 for real lambda; finite and O(lambda^2) at 0.
double inv_abs_c_squared(const Params& p, double lambda);

// Second solution with the e^{(i lambda - rho) x} behaviour at infinity.
cplx Phi(const Params& p, cplx lambda, double x);
// |phi - c(l) Phi_l - c(-l) Phi_{-l}|; DomainError for lambda in iZ.
double phi_asymptotic_residual(const Params& p, cplx lambda, double x);
// The limit of phi_0(x) e^{rho x} / x as x -> infinity.
double phi0_asymptotic_constant(const Params& p);

// A(z) = (sinh z)^{2 alpha+1} (cosh z)^{2 beta+1}, z >= 0.
double weight_A(const Params& p, double z);
double log_weight_A(const Params& p, double z);

double M_const(double alpha, double beta);  // alpha > beta
double M_equal(double alpha);               // the alpha = beta constant

// Strict triangle inequality ||x|-|y|| < |z| < |x|+|y|.
bool in_open_triangle(double x, double y, double z);

struct TriangleTriple {
    double x;
    double y;
    double z;
    bool inside() const { return in_open_triangle(x, y, z); }
};

// Product kernel on x, y, z > 0, zero off the open triangle.
// Dispatches on (alpha, beta): closed form for alpha > beta, the alpha = beta form,
// and the quadratic relation for beta = -1/2.
double kernel_W(const Params& p, double x, double y, double z);
// Hypergeometric closed form, alpha > beta >= -1/2.
double kernel_W_closed(const Params& p, double x, double y, double z);
// The defining angular integral, alpha > beta > -1/2.
double kernel_W_angular(const Params& p, double x, double y, double z);
double kernel_W_equal(double alpha, double x, double y, double z);
double kernel_W_half(double alpha, double x, double y, double z);  // beta = -1/2

// 1 - B^2 by the two displayed factorizations; the pair is returned for comparison.
struct OneMinusB2 {
    double cosh_form;
    double sinh_form;
};
OneMinusB2 one_minus_b2(double x, double y, double z);

// int_0^inf W A dz and |phi(x)phi(y) - int phi W A dz|.
double kernel_W_mass(const Params& p, double x, double y);
double product_check_phi(const Params& p, cplx lambda, double x, double y);

// Pieces of the addition formula.
struct AdditionComponents {
    cplx phi_mod;
    double chi;
    double pi_norm;
};
cplx phi_modified(const Params& p, int k, int l, cplx lambda, double x);
double chi_poly(const Params& p, int k, int l, double r, double psi);
// Normalizer from the defining integral of chi^2 against dm.
double pi_norm(const Params& p, int k, int l);
// The displayed Pochhammer closed form.
double pi_norm_closed(const Params& p, int k, int l);
AdditionComponents addition_components(const Params& p, int k, int l, cplx lambda, double x, double r,
                                       double psi);
// int int chi_{k1,l1} chi_{k2,l2} dm by tensor Gauss quadrature in (r, psi).
double chi_inner_product(const Params& p, int k1, int l1, int k2, int l2);
// |phi(arg cosh |gamma|) - partial sum up to k <= k_max|, real lambda.
double addition_series_check(const Params& p, double lambda, double x, double y, double r, double psi,
                             int k_max);

namespace detail {

// Geometry of a strictly interior triangle (a, b, c > 0), shared by W and K.
struct Triangle {
    double a, b, c;
    double ca, cb, cc;  // cosh
    double sa, sb, sc;  // sinh
    double log_ccc;     // log(ca cb cc)
    double log_sss;     // log(sa sb sc)
    double chi0;        // arccos B
    // ca cb - cc and its two permutations, written without cancellation where possible
    double d_abc, d_acb, d_cba;
};
Triangle make_triangle(double a, double b, double c);

// Angular integrals int_0^{chi0} (cos chi - cos chi0)^{p} (sin chi)^{2 beta} f(chi) d chi for
// f in {1, sigma_{a,b,c}, sigma_{a,c,b}, sigma_{c,b,a}, sin^2 chi} (all arguments positive).
struct AngularMoments {
    double one;
    double s_abc;
    double s_acb;
    double s_cba;
    double sin2;
};
AngularMoments angular_moments(const Triangle& t, double p, double beta, int nodes = 32);

// Integral of f over [lo, hi] with Gauss-Jacobi endpoint exponents and node doubling.
cplx integrate_segment(const std::function<cplx(double)>& f, double lo, double hi, double left_exp,
                       double right_exp, double abs_tol = 1e-12, int max_nodes = 2048);

}  // namespace detail

}  // namespace cherednik
