#pragma once

#include <Eigen/Dense>
#include <vector>

#include "obswave/arcs.hpp"
#include "obswave/schedule.hpp"

namespace obswave {

/// Truncated Fourier data of an initial pair (u_0, u_1) on (0, pi):
/// u_h(x) = sum_j c_h(j) sin(j x), j = 1..M (stored at index j-1).
struct FourierData {
    std::vector<double> c0;
    std::vector<double> c1;

    int modes() const { return static_cast<int>(c0.size()); }
    void validate() const;
};

/// u_x(0, t) = sum_j [ j c0(j) cos(jt) + c1(j) sin(jt) ].
double trace_at_zero(const FourierData& data, double t);

/// u_x(pi, t) = sum_j (-1)^j [ j c0(j) cos(jt) + c1(j) sin(jt) ];
/// identical to trace_at_zero(data, t - pi).
double trace_at_pi(const FourierData& data, double t);

/// E_0 = (pi/4) sum_j ( j^2 c0(j)^2 + c1(j)^2 ).
double energy(const FourierData& data);

struct ParsevalCheck {
    double lhs = 0;  ///< int_0^{2pi} |u_x(0,t)|^2 dt, closed form
    double rhs = 0;  ///< 2 (||u_0'||^2 + ||u_1||^2)
    double relative_residual() const;
};

ParsevalCheck parseval_check(const FourierData& data);

/// sum_k int_{I_k cap (0,T)} |u_x(lambda_k, t)|^2 dt, evaluated with
/// closed-form antiderivatives of the trigonometric products (the resonant
/// j = k terms take their own branch; no quadrature anywhere).
double observed_energy(const FourierData& data, const Schedule<double>& schedule,
                       double horizon);

/// Diagonal of the energy quadratic form in (c0, c1) coordinates.
Eigen::VectorXd energy_form_diagonal(int m);

/// Symmetric 2m x 2m form of the observed energy for the schedule clipped
/// to (0, horizon), in coordinates y = (c0(1..m), c1(1..m)).
Eigen::MatrixXd observed_form(const Schedule<double>& schedule, double horizon, int m);

/// Smallest generalized Rayleigh quotient of observed vs energy form over
/// the 2m-dimensional truncated space: the sharpest constant c with
/// observed >= c E_0 on that subspace. Full-period one-endpoint observation
/// gives exactly 4.
double observability_constant(const Schedule<double>& schedule, double horizon, int m);

struct BumpParams {
    /// Width of the bump support as a fraction of the chosen arc.
    double support_fraction = 0.5;
    /// Lower bound on the number of quadrature cells over the support.
    int min_quadrature_cells = 32;
};

struct Counterexample {
    FourierData data;
    double support_lo = 0;
    double support_hi = 0;
    /// Relative L^2 mass of psi beyond the first M modes; the trace of the
    /// truncated data leaks exactly this much outside the support.
    double truncation_residue = 0;
    double psi_norm2 = 0;
};

/// Initial data whose boundary trace u_x(0, .) is supported in the open set
/// U (up to truncation at M modes): psi is the derivative of a smooth bump
/// placed inside one arc of U avoiding pi, so that
///   u_1(t) = (psi(t) - psi(2pi - t)) / 2,
///   u_0(x) = int_0^x (psi(t) + psi(2pi - t)) dt / 2
/// have sine coefficients c1(j) and c0(j) equal to the Fourier coefficients
/// beta_j and alpha_j / j of psi.
Counterexample build_counterexample(const ArcSet<double>& u_open, int modes,
                                    const BumpParams& params = {});

} // namespace obswave
