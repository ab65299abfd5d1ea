#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hulthen/numerov.hpp"
#include "hulthen/tables.hpp"

#include <cmath>

using namespace hulthen;

namespace {

PhysicalSystem atomic(double delta)
{
    PhysicalSystem s;
    s.delta = delta;
    return s;
}

double swave_exact(double delta, int n)
{
    long double d = delta;
    long double e = 1.0L / (d * (n + 1.0L)) - (n + 1.0L) / 2.0L;
    return (double)(-(d * d / 2.0L) * e * e);
}

} // namespace

TEST_CASE("s-wave calibration against the exact level")
{
    OracleResult r = solve_eigenvalue(atomic(0.025), parse_state("1s"));
    CHECK(std::fabs(r.energy - (-0.487578125)) < 1e-8);
    CHECK(r.node_count == 0);
    CHECK(r.grid_convergence <= 1e-9);

    OracleResult r2 = solve_eigenvalue(atomic(0.15), parse_state("3s"));
    CHECK(std::fabs(r2.energy - swave_exact(0.15, 2)) < 1e-8);
    CHECK(r2.node_count == 2);
}

TEST_CASE("reference cells across the screening range")
{
    struct Cell {
        const char* state;
        double delta;
        double numerical;
    };
    for (const Cell& c : {Cell{"2p", 0.025, 0.1127605}, Cell{"2p", 0.350, 0.0037931},
                          Cell{"3d", 0.150, 0.0013966}, Cell{"6g", 0.025, 0.0037201}}) {
        OracleResult r = solve_eigenvalue(atomic(c.delta), parse_state(c.state));
        CHECK(std::fabs(r.binding - c.numerical) < 2e-5);
        CHECK(r.node_count == parse_state(c.state).n);
        CHECK(r.grid_convergence <= 1e-9);
    }
}

TEST_CASE("near-Coulomb screening still matches the s-wave closed form")
{
    // tiny screening: the bracketing sign change must straddle the exact level
    PhysicalSystem sys = atomic(1e-4);
    double Eexact = swave_exact(1e-4, 0);
    ShootingConfig cfg;
    IntegrationResult below = integrate_radial(sys, 0, Eexact * (1.0 + 1e-4), cfg);
    IntegrationResult above = integrate_radial(sys, 0, Eexact * (1.0 - 1e-4), cfg);
    CHECK(below.mismatch * above.mismatch < 0.0);

    OracleResult r = solve_eigenvalue(sys, parse_state("1s"));
    CHECK(std::fabs(r.energy - Eexact) < 1e-8);
}

TEST_CASE("energies far below the spectrum have no nodes and one mismatch sign")
{
    PhysicalSystem sys = atomic(0.1);
    ShootingConfig cfg;
    cfg.r_max = 80.0;
    IntegrationResult deep1 = integrate_radial(sys, 1, -3.0, cfg);
    IntegrationResult deep2 = integrate_radial(sys, 1, -5.0, cfg);
    CHECK(deep1.node_count == 0);
    CHECK(deep2.node_count == 0);
    CHECK(deep1.mismatch * deep2.mismatch > 0.0);
}

TEST_CASE("matched solutions agree at the match point")
{
    PhysicalSystem sys = atomic(0.05);
    ShootingConfig cfg;
    IntegrationResult res = integrate_radial(sys, 1, -0.10104245, cfg);
    int im = res.match_index;
    REQUIRE(im > 2);
    CHECK(res.u_out[im] == doctest::Approx(res.u_in[im]).epsilon(1e-12));
    // outward branch is zero past the match point, inward zero before it
    CHECK(res.u_out[im + 2] == 0.0);
    CHECK(res.u_in[im - 2] == 0.0);
}

TEST_CASE("mismatch shrinks at fourth order under step halving")
{
    // fixed off-eigenvalue energy and a pinned match radius, so the only
    // h-dependence left is the integrator's truncation error
    // coarse grids keep the truncation term above the roundoff floor
    PhysicalSystem sys = atomic(0.05);
    double E = -0.1015; // near 2p but not on it
    double m[3];
    int steps = 1500;
    for (int k = 0; k < 3; ++k) {
        ShootingConfig cfg;
        cfg.r_max = 120.0;
        cfg.n_steps = steps << k;
        cfg.match_radius = 12.0;
        m[k] = integrate_radial(sys, 1, E, cfg).mismatch;
    }
    double ratio = std::fabs(m[0] - m[1]) / std::fabs(m[1] - m[2]);
    double order = std::log2(ratio);
    CHECK(order > 3.5);
    CHECK(order < 4.5);
}

TEST_CASE("eigenvalue converges at fourth order under step halving")
{
    PhysicalSystem sys = atomic(0.05);
    QuantumNumbers q = parse_state("2p");
    double E[3];
    int steps = 6000;
    for (int k = 0; k < 3; ++k) {
        ShootingConfig cfg;
        cfg.r_max = 120.0;
        cfg.n_steps = steps << k;
        cfg.max_refinements = 0; // single mesh per solve
        cfg.grid_tolerance = 1.0;
        E[k] = solve_eigenvalue(sys, q, cfg).energy;
    }
    double ratio = std::fabs(E[0] - E[1]) / std::fabs(E[1] - E[2]);
    double order = std::log2(ratio);
    CHECK(order > 3.5);
    CHECK(order < 4.5);
}

TEST_CASE("levels are ordered in the node count at fixed l")
{
    PhysicalSystem sys = atomic(0.05);
    double prev = -1e9;
    for (const char* st : {"2p", "3p", "4p", "5p"}) {
        OracleResult r = solve_eigenvalue(sys, parse_state(st));
        CHECK(r.energy > prev);
        prev = r.energy;
    }
}

TEST_CASE("unbound requests and bad configs are rejected")
{
    CHECK_THROWS_AS((void)solve_eigenvalue(atomic(0.6), parse_state("2p")), NoBoundStateError);

    ShootingConfig bad;
    bad.n_steps = 10; // below the floor
    CHECK_THROWS_AS((void)solve_eigenvalue(atomic(0.05), parse_state("2p"), bad),
                    std::invalid_argument);

    // grid too small to hold the turning point and tail
    ShootingConfig tiny;
    tiny.r_max = 3.0;
    PhysicalSystem sys = atomic(0.025);
    CHECK_THROWS_AS((void)integrate_radial(sys, 1, -0.11276, tiny), std::invalid_argument);

    CHECK_THROWS_AS((void)integrate_radial(sys, 0, 0.5, ShootingConfig{}), std::domain_error);
}

TEST_CASE("error report prefers the improved scheme away from l = 0")
{
    std::vector<std::pair<QuantumNumbers, double>> cells = {
        {parse_state("2p"), 0.025}, {parse_state("2p"), 0.300}, {parse_state("3d"), 0.075},
        {parse_state("5g"), 0.050}, {parse_state("1s"), 0.100}, {parse_state("2s"), 0.050}};
    ComparisonReport rep = approximation_error_report(cells, PhysicalSystem{});
    CHECK(rep.rows.size() == 6);
    CHECK(rep.cells_l_positive == 4);
    CHECK(rep.present_wins == 4);
    CHECK(rep.l0_ties == 2); // schemes coincide exactly at l = 0

    // spot magnitudes for the first cell
    CHECK(rep.rows[0].err_present < 1e-6);
    CHECK(rep.rows[0].err_usual > 4e-5);
}
