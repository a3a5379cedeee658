#pragma once

#include <functional>
#include <vector>

#include "cherednik/core.hpp"

namespace cherednik {

// A function on [-L, L] stored at the nodes of composite Gauss-Legendre panels.
// Panels are symmetric about 0 and 0 is a panel edge, so reflection maps nodes to nodes.
// Values off [-L, L] are taken to be 0.
class SampledFunction {
public:
    SampledFunction(const std::function<cplx(double)>& f, double half_width, int panels = 128, int order = 16);

    double half_width() const { return half_width_; }
    int panels() const { return panels_; }
    int order() const { return order_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& weights() const { return weights_; }
    const std::vector<cplx>& values() const { return values_; }

    // Closed interval outside which the function vanishes; defaults to [-L, L].
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }
    void set_support(double lo, double hi);

    // Polynomial interpolation on the panel containing x.
    cplx operator()(double x) const;

    SampledFunction reflected() const;  // x -> f(-x)
    SampledFunction even_part() const;
    SampledFunction odd_part() const;
    // x -> int_{-L}^{x} f(t) dt, exact for the panel interpolants
    SampledFunction running_integral() const;
    SampledFunction conj() const;

    cplx integral() const;
    // int f(x) h(x) |x|^{e} dx; panels touching 0 use a Gauss-Jacobi rule in |x| with exponent e,
    // so h only needs to be smooth.
    cplx integrate_weighted(const std::function<cplx(double)>& h, double e) const;
    // Same over [0, L] only.
    cplx integrate_weighted_half(const std::function<cplx(double)>& h, double e) const;
    // int h(x, f(x)) |x|^e dx over the nodes where f is nonzero
    cplx integrate_map(const std::function<cplx(double, cplx)>& h, double e) const;

    // Samples f at every node, spreading the calls over worker threads.
    static SampledFunction tabulate(const std::function<cplx(double)>& f, double half_width, int panels = 128,
                                    int order = 16);

private:
    SampledFunction(double half_width, int panels, int order);
    cplx interpolate_panel(int panel, double x) const;
    int panel_of(double x) const;
    double panel_lo(int panel) const { return -half_width_ + panel * panel_width_; }

    double half_width_;
    int panels_;
    int order_;
    double panel_width_;
    std::vector<double> grid_;
    std::vector<double> weights_;
    std::vector<cplx> values_;
    double support_lo_;
    double support_hi_;
};

// A(|x|) / |x|^{2a+1}, smooth and even
double weight_A_reduced(const Params& p, double x);

// F(f)(lambda) = int f(x) G_lambda(-x) A(|x|) dx
cplx opdam_transform(const Params& p, const SampledFunction& f, cplx lambda);
std::vector<cplx> opdam_transform(const Params& p, const SampledFunction& f, const std::vector<cplx>& lambdas);
// int_0^inf f phi_lambda A dx for the restriction of f to [0, L]
cplx jacobi_transform(const Params& p, const SampledFunction& f_even, cplx lambda);

// int_0^inf (cosh x)^{-alpha-beta-mu-1} phi_lambda A dx in closed form, Re mu > |Im lambda|.
cplx jacobi_transform_cosh_power(const Params& p, double mu, cplx lambda);

struct Decomposition {
    SampledFunction even;
    SampledFunction odd;
    SampledFunction odd_antiderivative;  // int_{-inf}^x f_o
};
Decomposition decompose_with_antiderivative(const SampledFunction& f);

// |F(f)(lambda) - 2 F_ab(f_e)(lambda) - 2 (rho + i lambda) F_ab(J f_o)(lambda)|
double decomposition_check(const Params& p, const SampledFunction& f, cplx lambda);
// |int_0^inf f_o d/dx phi_lambda A dx - (rho^2 + lambda^2) F_ab(J f_o)(lambda)|
double integration_by_parts_check(const Params& p, const SampledFunction& f, cplx lambda);

// 4^rho/(8 pi |c(lambda)|^2) and the factor (1 - rho/(i lambda)); the product tends to 0 at lambda = 0.
// The 4^rho matches the weight A = sinh^{2a+1} cosh^{2b+1}; without it the inverse returns f/4^rho.
double plancherel_density(const Params& p, double lambda);
cplx inverse_factor(const Params& p, double lambda);

// Gauss-Legendre panels on [-Lambda, Lambda] with 0 as a panel edge.
struct SpectralDensity {
    std::vector<double> lambda;
    std::vector<double> quad_weight;
    std::vector<double> density;  // 4^rho/(8 pi |c|^2)
    std::vector<cplx> factor;     // 1 - rho/(i lambda)
};
SpectralDensity spectral_density(const Params& p, double lambda_max, int panels = 64, int order = 16);

struct InverseResult {
    cplx value;
    // contribution of Lambda/2 < |lambda| <= Lambda; a warning is raised when it exceeds the tolerance
    double truncation_estimate;
    bool truncation_warning;
};
InverseResult inverse_transform(const Params& p, const std::function<cplx(double)>& g, double x, double lambda_max,
                                double tol = 1e-6);
// Same with g given at the nodes of sd.
InverseResult inverse_transform(const Params& p, const SpectralDensity& sd, const std::vector<cplx>& g_at_nodes,
                                double x, double tol = 1e-6);

struct PlancherelResult {
    double lhs;   // int |f|^2 A
    double rhs1;  // int_0^Lambda (|Ff|^2 + |F f_check|^2) 4^rho/(16 pi |c|^2); comes out as lhs/2
    double rhs2;  // int_{-Lambda}^{Lambda} Ff(l) conj(F f_check(-l)) (1 - rho/(i l)) 4^rho/(8 pi |c|^2)
    double rhs2_imag;
};
PlancherelResult plancherel_check(const Params& p, const SampledFunction& f, double lambda_max, int panels = 32);

}  // namespace cherednik
