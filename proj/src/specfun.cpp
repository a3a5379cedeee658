#include "cherednik/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace cherednik {

namespace {

constexpr double ln_sqrt_2pi = 0.91893853320467274178032973640562;

// B_{2k} / (2k (2k-1)) for the Stirling tail.
constexpr std::array<double, 10> stirling_coeff = {
    1.0 / 12.0,        -1.0 / 360.0,        1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0,   1.0 / 156.0,          -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0};

cplx ln_gamma_stirling(cplx z) {
    // shift until |z| is large enough for ten Stirling terms to reach double precision
    cplx shift_log = 0.0;
    while (std::abs(z) < 16.0 || z.real() < 8.0) {
        shift_log += std::log(z);
        z += 1.0;
    }
    cplx zinv = 1.0 / z;
    cplx zinv2 = zinv * zinv;
    cplx tail = 0.0;
    cplx pw = zinv;
    for (double c : stirling_coeff) {
        tail += c * pw;
        pw *= zinv2;
    }
    return (z - 0.5) * std::log(z) - z + ln_sqrt_2pi + tail - shift_log;
}

// log sin(w) that stays finite for large |Im w|
cplx log_sin(cplx w) {
    if (w.imag() > 20.0) return -I * w + std::log(0.5) + I * (pi / 2.0);
    if (w.imag() < -20.0) return I * w + std::log(0.5) - I * (pi / 2.0);
    return std::log(std::sin(w));
}

cplx principal(cplx v) {
    double im = std::remainder(v.imag(), 2.0 * pi);
    if (im <= -pi) im += 2.0 * pi;
    return {v.real(), im};
}

double round_if_integer(double x) { return std::nearbyint(x); }

cplx exp_checked(cplx v) {
    cplx r = std::exp(v);
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
        throw NumericError("overflow in exp of log-Gamma combination");
    return r;
}

// Direct summation with a running bound on the accumulated rounding error.
struct SeriesSum {
    cplx value;
    double magnitude;  // sum of |terms|, drives the error estimate
    bool converged;
};

SeriesSum sum_2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl) {
    cplx term = 1.0;
    cplx sum = 1.0;
    double mag = 1.0;
    double prev_abs = 1.0;
    for (int n = 0; n < ctl.max_terms; ++n) {
        cplx num = (a + double(n)) * (b + double(n));
        if (num == 0.0) return {sum, mag, true};
        term *= num / ((c + double(n)) * double(n + 1)) * z;
        sum += term;
        double t = std::abs(term);
        mag += t;
        double ratio = prev_abs > 0.0 ? t / prev_abs : 0.0;
        prev_abs = t;
        // past the hump and the geometric tail bound is below target
        double target = std::max(ctl.abs_tol, ctl.rel_tol * std::abs(sum)) * 1e-2;
        if (n > 2 && ratio < 1.0 && t * ratio / (1.0 - ratio) <= target) return {sum, mag, true};
        if (t == 0.0) return {sum, mag, true};
    }
    return {sum, mag, false};
}

cplx terminating_2f1(cplx a, cplx b, cplx c, cplx z) {
    int n = -int(round_if_integer(a.real()));
    if (is_nonpositive_integer(b) && -int(round_if_integer(b.real())) < n)
        n = -int(round_if_integer(b.real()));
    cplx term = 1.0;
    cplx sum = 1.0;
    for (int m = 0; m < n; ++m) {
        cplx den = (c + double(m)) * double(m + 1);
        if (den == 0.0) throw PoleError("2F1: c is a nonpositive integer inside the terminating range");
        term *= (a + double(m)) * (b + double(m)) / den * z;
        sum += term;
    }
    return sum;
}

bool near_integer(cplx s, double tol, int& m) {
    double r = round_if_integer(s.real());
    m = int(r);
    return std::abs(s - r) < tol;
}

// 1-z connection formula, s = c-a-b not an integer
cplx connection_generic(cplx a, cplx b, cplx c, double w, const SeriesControl& ctl, double& err) {
    cplx s = c - a - b;
    cplx lgc = ln_gamma(c);
    cplx t1 = 0.0;
    cplx t2 = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    cplx r1 = rgamma(c - a) * rgamma(c - b);
    if (r1 != 0.0) {
        SeriesSum f = sum_2f1(a, b, 1.0 - s, w, ctl);
        if (!f.converged) throw SeriesError("2F1 connection series did not converge", f.value);
        cplx pref = exp_checked(lgc + ln_gamma(s)) * r1;
        t1 = pref * f.value;
        e1 = std::abs(pref) * f.magnitude;
    }
    cplx r2 = rgamma(a) * rgamma(b);
    if (r2 != 0.0) {
        SeriesSum f = sum_2f1(c - a, c - b, 1.0 + s, w, ctl);
        if (!f.converged) throw SeriesError("2F1 connection series did not converge", f.value);
        cplx pref = exp_checked(lgc + ln_gamma(-s) + s * std::log(w)) * r2;
        t2 = pref * f.value;
        e2 = std::abs(pref) * f.magnitude;
    }
    err = (e1 + e2) * 4.0 * std::numeric_limits<double>::epsilon();
    return t1 + t2;
}

// Connection formula valid for every s. The generic form loses about
// 1/(|s - m| |log w|) digits-worth when s is close to an integer m; in that case the
// value is recovered from a circle of perturbed c (Cauchy integral in the
// perturbation) with radius ~ 1/|log w| so the w^{+-u} factors stay O(1).
cplx connection(cplx a, cplx b, cplx c, double w, const SeriesControl& ctl, double& err) {
    int m = 0;
    cplx s = c - a - b;
    near_integer(s, 0.5, m);
    const cplx delta = s - double(m);
    const double scale = std::max(1.0, std::abs(std::log(w)));
    if (std::abs(delta) * scale >= 0.1) return connection_generic(a, b, c, w, ctl, err);
    const double radius = std::min(0.3, 1.0 / scale);
    const int nodes = 40;
    cplx acc = 0.0;
    double eacc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        cplx u = std::polar(radius, 2.0 * pi * (k + 0.5) / nodes);
        double ek = 0.0;
        cplx fk = connection_generic(a, b, a + b + double(m) + u, w, ctl, ek);
        cplx wk = u / (u - delta);
        acc += fk * wk;
        eacc += ek * std::abs(wk);
    }
    err = eacc / nodes;
    return acc / double(nodes);
}

// 0 <= z < 1 with complement w
cplx unit_interval(cplx a, cplx b, cplx c, double z, double w, const SeriesControl& ctl) {
    if (z == 0.0) return 1.0;
    if (z <= 0.5) {
        SeriesSum d = sum_2f1(a, b, c, z, ctl);
        double err_d = d.converged ? d.magnitude * 4.0 * std::numeric_limits<double>::epsilon()
                                   : std::numeric_limits<double>::infinity();
        if (err_d <= ctl.rel_tol * std::abs(d.value)) return d.value;
        // heavy cancellation in the direct series (large parameters): try the other side
        double err_c = std::numeric_limits<double>::infinity();
        cplx v;
        try {
            v = connection(a, b, c, w, ctl, err_c);
        } catch (const NumericError&) {
            err_c = std::numeric_limits<double>::infinity();
        }
        if (err_c < err_d) return v;
        if (!d.converged) throw SeriesError("2F1 series did not converge", d.value);
        return d.value;
    }
    double err = 0.0;
    return connection(a, b, c, w, ctl, err);
}

}  // namespace

bool is_nonpositive_integer(cplx a) {
    if (std::abs(a.imag()) >= 1e-14) return false;
    double r = a.real();
    return r <= 0.0 && r == std::nearbyint(r);
}

cplx ln_gamma(cplx z) {
    if (is_nonpositive_integer(z)) throw PoleError("Gamma pole at nonpositive integer");
    if (z.imag() == 0.0 && z.real() > 0.0) return std::lgamma(z.real());
    if (z.imag() == 0.0) {
        double lg = std::lgamma(z.real());
        return std::tgamma(z.real()) < 0.0 ? cplx(lg, pi) : cplx(lg, 0.0);
    }
    if (z.real() < 0.5) {
        cplx v = std::log(pi) - log_sin(pi * z) - ln_gamma_stirling(1.0 - z);
        return principal(v);
    }
    return principal(ln_gamma_stirling(z));
}

cplx gamma(cplx z) {
    if (z.imag() == 0.0) return gamma(z.real());
    return std::exp(ln_gamma(z));
}

double gamma(double x) {
    if (is_nonpositive_integer(x)) throw PoleError("Gamma pole at nonpositive integer");
    return std::tgamma(x);
}

cplx rgamma(cplx z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.imag() == 0.0 && std::abs(z.real()) < 150.0) return 1.0 / std::tgamma(z.real());
    return std::exp(-ln_gamma(z));
}

cplx pochhammer(cplx a, int n) {
    cplx p = 1.0;
    for (int k = 0; k < n; ++k) p *= a + double(k);
    return p;
}

cplx gauss_2f1_series(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl) {
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return terminating_2f1(a, b, c, z);
    if (is_nonpositive_integer(c)) throw PoleError("2F1: c is a nonpositive integer");
    SeriesSum s = sum_2f1(a, b, c, z, ctl);
    if (!s.converged) throw SeriesError("2F1 series did not converge", s.value);
    return s.value;
}

cplx gauss_2f1_complement(cplx a, cplx b, cplx c, double z, double w, const SeriesControl& ctl) {
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return terminating_2f1(a, b, c, z);
    if (is_nonpositive_integer(c)) throw PoleError("2F1: c is a nonpositive integer");
    if (!(z >= 0.0 && z <= 1.0) || !(w > 0.0))
        throw DomainError("gauss_2f1_complement needs 0 <= z <= 1 and w > 0");
    return unit_interval(a, b, c, z, w, ctl);
}

cplx gauss_2f1(cplx a, cplx b, cplx c, cplx z, const SeriesControl& ctl) {
    if (z == 0.0) return 1.0;
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return terminating_2f1(a, b, c, z);
    if (is_nonpositive_integer(c)) throw PoleError("2F1: c is a nonpositive integer");
    if (z.imag() != 0.0) {
        if (std::abs(z) >= 1.0) throw SeriesError("2F1: complex |z| >= 1 is not supported", 0.0);
        return gauss_2f1_series(a, b, c, z, ctl);
    }
    double x = z.real();
    if (x >= -0.5 && x < 0.0) {
        SeriesSum s = sum_2f1(a, b, c, x, ctl);
        if (s.converged) return s.value;
    }
    if (x < 0.0) {
        // Pfaff: (1-x)^{-a} 2F1(a, c-b; c; x/(x-1))
        double u = x / (x - 1.0);
        double w = 1.0 / (1.0 - x);
        cplx pre = std::exp(-a * std::log1p(-x));
        if (is_nonpositive_integer(c - b)) return pre * terminating_2f1(a, c - b, c, u);
        return pre * unit_interval(a, c - b, c, u, w, ctl);
    }
    if (x < 1.0) return unit_interval(a, b, c, x, 1.0 - x, ctl);
    if (x == 1.0) {
        cplx s = c - a - b;
        if (s.real() <= 0.0) throw SeriesError("2F1 diverges at z=1 when Re(c-a-b) <= 0", 0.0);
        return exp_checked(ln_gamma(c) + ln_gamma(s)) * rgamma(c - a) * rgamma(c - b);
    }
    throw SeriesError("2F1: z > 1 is outside the implemented region", 0.0);
}

double jacobi_poly(int n, double a, double b, double x) {
    if (n < 0) throw ParameterError("jacobi_poly: n must be nonnegative");
    if (n == 0) return 1.0;
    // (a+1)_n/n! 2F1(-n, a+b+n+1; a+1; (1-x)/2) summed with the prefactor folded in
    // so that a+1 near a nonpositive integer does not divide by zero
    double u = 0.5 * (1.0 - x);
    double sum = 0.0;
    double coef = 1.0;  // (a+1)_n / n!
    for (int k = 0; k < n; ++k) coef *= (a + 1.0 + k) / (k + 1.0);
    double term = coef;
    sum = term;
    for (int m = 0; m < n; ++m) {
        term *= (double(m) - n) * (a + b + n + 1.0 + m) / ((a + 1.0 + m) * (m + 1.0)) * u;
        sum += term;
    }
    return sum;
}

cplx wilson_poly(int n, cplx t2, cplx a, cplx b, cplx c, cplx d) {
    if (n < 0) throw ParameterError("wilson_poly: n must be nonnegative");
    for (int m = 0; m < n; ++m) {
        if ((a + b + double(m)) == 0.0 || (a + c + double(m)) == 0.0 || (a + d + double(m)) == 0.0)
            throw PoleError("wilson_poly: vanishing Pochhammer denominator");
    }
    cplx s = a + b + c + d + double(n) - 1.0;
    cplx term = 1.0;
    cplx sum = 1.0;
    for (int m = 0; m < n; ++m) {
        // (a+t)_m (a-t)_m grows by (a+m)^2 - t^2
        cplx am = a + double(m);
        term *= (double(m) - n) * (s + double(m)) * (am * am - t2) /
                ((a + b + double(m)) * (a + c + double(m)) * (a + d + double(m)) * double(m + 1));
        sum += term;
    }
    return pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n) * sum;
}

double bessel_j_norm(double alpha, double u) {
    if (!(alpha > -1.0)) throw ParameterError("bessel_j_norm: alpha must exceed -1");
    u = std::abs(u);
    if (u == 0.0) return 1.0;
    if (u > 8.0) {
        double lg = std::lgamma(alpha + 1.0) - alpha * std::log(0.5 * u);
        return std::exp(lg) * std::cyl_bessel_j(alpha, u);
    }
    double q = 0.25 * u * u;
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < 200; ++m) {
        term *= -q / (m * (alpha + m));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

cplx bessel_j_norm(double alpha, cplx u) {
    if (u.imag() == 0.0) return bessel_j_norm(alpha, u.real());
    if (!(alpha > -1.0)) throw ParameterError("bessel_j_norm: alpha must exceed -1");
    const cplx q = 0.25 * u * u;
    cplx term = 1.0, sum = 1.0;
    for (int m = 1; m < 2000; ++m) {
        term *= -q / (m * (alpha + m));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) return sum;
    }
    throw SeriesError("bessel_j_norm: series did not settle", sum);
}

double laguerre_poly(int n, double a, double x) {
    if (n < 0) throw ParameterError("laguerre_poly: n must be nonnegative");
    double coef = 1.0;  // (a+1)_n / n!
    for (int k = 0; k < n; ++k) coef *= (a + 1.0 + k) / (k + 1.0);
    double term = coef;
    double sum = term;
    for (int m = 0; m < n; ++m) {
        term *= (double(m) - n) / ((a + 1.0 + m) * (m + 1.0)) * x;
        sum += term;
    }
    return sum;
}

double log_cosh(double x) {
    x = std::abs(x);
    return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

double log_sinh(double x) {
    if (!(x > 0.0)) throw DomainError("log_sinh needs x > 0");
    if (x < 1.0) return std::log(std::sinh(x));
    return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

}  // namespace cherednik
