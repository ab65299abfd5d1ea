#pragma once

// Independent numerical eigensolver for the radial equation with the exact
// centrifugal term: fourth-order Numerov integration, two-sided shooting with
// log-derivative matching at the outer turning point, node-count bracketing,
// and grid refinement. This is the ground truth the closed forms are
// compared against.

#include "hulthen/spectrum.hpp"

#include <Eigen/Dense>

#include <span>
#include <utility>
#include <vector>

namespace hulthen {

struct ShootingConfig {
    double r_min = 1e-6; ///< inner start; raised to the first stable grid point
    double r_max = 0.0;  ///< 0 = automatic from the warm-start energy
    int n_steps = 0;     ///< 0 = automatic (step near 0.02); explicit values need >= 1000
    std::pair<double, double> energy_bracket{0.0, 0.0}; ///< (0,0) = warm start from closed forms
    double match_tolerance = 1e-10; ///< stop once the scaled mismatch is below this
    int max_iterations = 300;       ///< per-grid eigenvalue iterations
    double grid_tolerance = 1e-9;   ///< stop refining once |E_k - E_{k-1}| is below this
    int max_refinements = 6;
    double match_radius = 0.0; ///< 0 = match at the outer turning point

    void validate() const;
};

/// One two-sided integration at fixed energy, with the full solutions kept.
struct IntegrationResult {
    Eigen::ArrayXd r;     ///< grid points, uniform spacing
    Eigen::ArrayXd u_out; ///< outward solution, zero beyond the match point
    Eigen::ArrayXd u_in;  ///< inward solution, zero below the match point
    int match_index = 0;  ///< outer classical turning point on the grid
    double mismatch = 0.0; ///< log-derivative difference L_out - L_in at the match point
    int node_count = 0;
};

/// Integrates at energy E < 0 with the exact l(l+1)/r^2 term. Throws
/// std::invalid_argument when the outer turning point does not fit the grid.
IntegrationResult integrate_radial(const PhysicalSystem& sys, int l, double E,
                                   const ShootingConfig& config);

struct OracleResult {
    QuantumNumbers state;
    double delta = 0.0;
    double energy = 0.0;
    double binding = 0.0;
    int node_count = 0;
    double match_residual = 0.0;   ///< scaled log-derivative mismatch at convergence
    double grid_convergence = 0.0; ///< |E_k - E_{k-1}| / max(1, |E_k|) of the last refinement
};

/// Locates the eigenvalue with exactly n radial nodes. Bisection on the
/// node count isolates the level; secant refinement on the mismatch then
/// converges inside the node plateau. The grid is refined (step halved)
/// until the eigenvalue is stable to grid_tolerance.
OracleResult solve_eigenvalue(const PhysicalSystem& sys, const QuantumNumbers& q,
                              const ShootingConfig& config = {});

struct ComparisonRow {
    QuantumNumbers state;
    double delta = 0.0;
    double present = 0.0; ///< binding energies
    double usual = 0.0;
    double numerov = 0.0;
    double err_present = 0.0;
    double err_usual = 0.0;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;
    int cells_l_positive = 0;
    int present_wins = 0; ///< l > 0 cells with |present - numerov| < |usual - numerov|
    int l0_ties = 0;      ///< l = 0 cells where the schemes coincide
};

/// Present/Usual closed forms against the shooting oracle for each
/// (state, delta) cell.
ComparisonReport approximation_error_report(std::span<const std::pair<QuantumNumbers, double>> cells,
                                            const PhysicalSystem& base,
                                            const ShootingConfig& config = {});

} // namespace hulthen
