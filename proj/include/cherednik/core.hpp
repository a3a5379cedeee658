#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cherednik {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Invalid parameters or arguments supplied by the caller.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the set where an identity or formula is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Numerical failure: poles, non-convergent series, unmet quadrature tolerance.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class PoleError : public NumericError {
public:
    using NumericError::NumericError;
};

class SeriesError : public NumericError {
public:
    SeriesError(const std::string& what, cplx partial)
        : NumericError(what), partial_sum(partial) {}
    cplx partial_sum;
};

class QuadratureError : public NumericError {
public:
    QuadratureError(const std::string& what, cplx estimate, double bound)
        : NumericError(what), best_estimate(estimate), error_bound(bound) {}
    cplx best_estimate;
    double error_bound;
};

// The pair (alpha, beta) with alpha >= beta >= -1/2 and alpha > -1/2.
class Params {
public:
    Params(double alpha, double beta) : alpha_(alpha), beta_(beta) {
        if (!(alpha > -0.5) || !(beta >= -0.5) || !(alpha >= beta))
            throw ParameterError("need alpha >= beta >= -1/2 and alpha > -1/2, got alpha=" +
                                 std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double rho() const { return alpha_ + beta_ + 1.0; }
    bool equal() const { return alpha_ == beta_; }
    Params shifted() const { return Params(alpha_ + 1.0, beta_ + 1.0); }

private:
    double alpha_;
    double beta_;
};

}  // namespace cherednik
