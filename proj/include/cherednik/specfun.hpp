#pragma once

#include "cherednik/core.hpp"

namespace cherednik {

struct SeriesControl {
    int max_terms = 2000;
    double abs_tol = 1e-15;
    double rel_tol = 1e-13;
};

// Principal branch of log Gamma. Throws PoleError at 0, -1, -2, ...
cplx ln_gamma(cplx z);
cplx gamma(cplx z);
// 1/Gamma, entire; exactly zero at the poles of Gamma.
cplx rgamma(cplx z);
double gamma(double x);

cplx pochhammer(cplx a, int n);

// True when a is a nonpositive integer (|im a| < 1e-14, exact integer real part).
bool is_nonpositive_integer(cplx a);

// Gauss hypergeometric 2F1(a,b;c;z).
// Direct series near 0, Pfaff for z < 0, the 1-z connection formula on (1/2, 1).
cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl = {});

// Same for real z in [0,1] when the complement w = 1-z is known more
// accurately than 1-z can be formed in floating point (z = tanh^2 x for large x).
cplx gauss_2f1_complement(cplx a, cplx b, cplx c, double z, double w,
                          const SeriesControl& ctl = {});

// Plain power series with no transformation; throws SeriesError if it does not
// settle within ctl.max_terms.
cplx gauss_2f1_series(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl = {});

// P_n^{(a,b)}(x) from its terminating 2F1 form.
double jacobi_poly(int n, double a, double b, double x);

// Wilson polynomial P_n(t^2; a,b,c,d) as (a+b)_n (a+c)_n (a+d)_n times a terminating 4F3.
cplx wilson_poly(int n, cplx t2, cplx a, cplx b, cplx c, cplx d);

// j_alpha(u) = Gamma(alpha+1) sum (-1)^m (u/2)^{2m} / (m! Gamma(alpha+1+m)).
double bessel_j_norm(double alpha, double u);
// Complex argument; power series, so accuracy degrades like e^{|u|} eps for large |u| off the real axis.
cplx bessel_j_norm(double alpha, cplx u);

// L_n^a(x) = ((a+1)_n / n!) 1F1(-n; a+1; x).
double laguerre_poly(int n, double a, double x);

// log cosh x without overflow.
double log_cosh(double x);
// log sinh x for x > 0 without overflow.
double log_sinh(double x);

}  // namespace cherednik
