#pragma once

// Analytic radial eigenfunctions u_nl(r) in the variable s = e^{-delta r}:
// construction, quadrature normalization, closed-form normalization
// cross-check, critical-screening edge states, and overlaps.

#include "hulthen/spectrum.hpp"

#include <Eigen/Dense>

namespace hulthen {

struct GridSpec {
    int n_points = 2000;
    double r_min = 0.0; ///< 0 = automatic
    double r_max = 0.0; ///< 0 = automatic, max(30/(eps*delta), 20/delta)
};

struct RadialWavefunction {
    QuantumNumbers state;
    double delta = 0.0;
    double eps = 0.0;
    double norm_quadrature = 0.0;          ///< authoritative normalization constant
    double norm_closed_form = 0.0;         ///< closed-form double-sum value (suspect)
    double norm_closed_form_deviation = 0.0; ///< |closed/quadrature - 1|
    Eigen::ArrayXd r;
    Eigen::ArrayXd u;
    int node_count = 0;
    bool critical = false; ///< eps = 0 edge state, not normalizable
};

/// Unnormalized shape s^eps (1-s)^(l+1) P_n^(2 eps, 2l+1)(1-2s), s = e^{-delta r}.
/// Throws NotNormalizableError if eps_nl <= 0.
double u_unnormalized(const QuantumNumbers& q, const PhysicalSystem& sys, double r);

/// Same shape through the terminating hypergeometric series; equals the
/// Jacobi route including the (2 eps + 1)_n / n! prefactor.
double u_unnormalized_hyp2f1(const QuantumNumbers& q, const PhysicalSystem& sys, double r);

/// Normalization constant from the weighted Gauss rule that integrates the
/// squared polynomial factor exactly.
double norm_quadrature(const QuantumNumbers& q, const PhysicalSystem& sys);

struct ClosedFormNorm {
    double value;     ///< may be NaN if the inner double sum is not positive
    double deviation; ///< |value/quadrature - 1|
};

/// The closed-form double-sum normalization constant, evaluated exactly as
/// published with factorials of real arguments read as Gamma functions. Known
/// to disagree with the quadrature normalization (it fails the n = 0 collapse
/// onto the Beta-integral result); the deviation is returned as data.
ClosedFormNorm norm_closed_form(const QuantumNumbers& q, const PhysicalSystem& sys);

/// Normalized wavefunction sampled on a grid that is logarithmic near the
/// origin and uniform in the tail.
RadialWavefunction normalize(const QuantumNumbers& q, const PhysicalSystem& sys,
                             const GridSpec& grid = {});

/// The eps = 0 edge state at the Usual-scheme critical screening,
/// (1-e^{-delta_c r})^(l+1) P_n^(0, 2l+1)(1-2 e^{-delta_c r}), unnormalized
/// and flagged non-normalizable. sys.delta is ignored.
RadialWavefunction critical_state(const QuantumNumbers& q, const PhysicalSystem& sys,
                                  const GridSpec& grid = {});

/// Overlap integral of two normalized states with the same l and screening.
/// Throws std::invalid_argument on an l mismatch.
double orthogonality_check(const QuantumNumbers& a, const QuantumNumbers& b,
                           const PhysicalSystem& sys);

/// Interior sign changes of a sampled function, ignoring exact zeros.
int count_sign_changes(const Eigen::ArrayXd& u);

} // namespace hulthen
