#include "hulthen/numerov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hulthen {

void ShootingConfig::validate() const
{
    if (!(r_min > 0.0))
        throw std::invalid_argument("ShootingConfig: r_min must be positive");
    if (r_max != 0.0 && !(r_max > r_min))
        throw std::invalid_argument("ShootingConfig: r_max must exceed r_min");
    if (n_steps != 0 && n_steps < 1000)
        throw std::invalid_argument("ShootingConfig: n_steps must be >= 1000");
    if (energy_bracket != std::pair<double, double>{0.0, 0.0}) {
        if (!(energy_bracket.first < energy_bracket.second) || !(energy_bracket.second < 0.0))
            throw std::invalid_argument("ShootingConfig: need E_lo < E_hi < 0");
    }
    if (!(match_tolerance > 0.0) || !(grid_tolerance > 0.0) || max_iterations < 8)
        throw std::invalid_argument("ShootingConfig: bad tolerances or iteration budget");
}

namespace {

// Uniform grid r_i = i*h for i in [i_start, n]. base_i holds the
// energy-independent part of g in u'' = g u.
struct Mesh {
    double h = 0.0;
    int i_start = 1;
    int n = 0;
    int l = 0;
    double c = 0.0; // 2 mu / hbar^2
    std::vector<double> base;

    double g(int i, double cE) const { return base[i - i_start] - cE; }
    double r(int i) const { return i * h; }
};

Mesh make_mesh(const PhysicalSystem& sys, int l, double r_max, int n_steps)
{
    Mesh m;
    m.n = n_steps;
    m.h = r_max / n_steps;
    m.l = l;
    m.c = 2.0 * sys.mu / (sys.hbar * sys.hbar);
    // keep 1 - h^2 g/12 well away from zero at the centrifugal wall
    m.i_start = std::max(1, (int)std::ceil(std::sqrt(l * (l + 1) / 3.0)));
    m.base.resize(m.n - m.i_start + 1);
    double zc = sys.Z * sys.delta; // e^2 = 1
    for (int i = m.i_start; i <= m.n; ++i) {
        double r = i * m.h;
        double V = -zc / std::expm1(sys.delta * r);
        m.base[i - m.i_start] = (double)l * (l + 1) / (r * r) + m.c * V;
    }
    return m;
}

struct Shot {
    int nodes = 0;
    double mismatch = 0.0; // L_out - L_in, strictly decreasing in E on a plateau
    bool on_plateau = false;
    int cmp = 0; // -1: E below the target level, +1: above
};

// One two-sided pass. If record buffers are given, the full solutions are
// stored (outward scaled so both agree at the match point). forced_im pins
// the match index; -1 selects the outer turning point.
Shot shoot(const Mesh& m, const PhysicalSystem& sys, double E, int n_target,
           Eigen::ArrayXd* rec_out = nullptr, Eigen::ArrayXd* rec_in = nullptr,
           int* match_index = nullptr, int forced_im = -1)
{
    Shot res;
    const double cE = m.c * E;

    int im = -1;
    if (forced_im >= 0) {
        im = forced_im;
        if (im < m.i_start + 2 || im > m.n - 3)
            throw std::invalid_argument("integrate_radial: match radius outside the grid");
    } else {
        for (int i = m.n; i >= m.i_start; --i)
            if (m.g(i, cE) <= 0.0) {
                im = i;
                break;
            }
        if (im < m.i_start + 2) {
            // classically forbidden everywhere: match at the potential
            // minimum; both branches are monotone and the mismatch keeps a
            // fixed positive sign below the spectrum
            int best = m.i_start + 2;
            for (int i = m.i_start + 2; i <= m.n - 3; ++i)
                if (m.g(i, cE) < m.g(best, cE))
                    best = i;
            im = best;
        }
        if (im > m.n - 3)
            throw std::invalid_argument("integrate_radial: outer turning point outside the grid");
    }
    if (match_index)
        *match_index = im;

    const double h2 = m.h * m.h;
    const double zeff = sys.mu * sys.Z / (sys.hbar * sys.hbar);

    // outward seed: r^(l+1) with the next two series coefficients, which keeps
    // the irregular-solution admixture at the h^4 level
    const double s1 = -zeff / (m.l + 1.0);
    const double s2 = (zeff * sys.delta - cE + 2.0 * zeff * zeff / (m.l + 1.0)) / (4.0 * m.l + 6.0);
    auto seed = [&](double r) { return std::pow(r, m.l + 1) * (1.0 + s1 * r + s2 * r * r); };

    int nodes_out = 0;
    double um1 = seed(m.r(m.i_start));
    double u0 = seed(m.r(m.i_start + 1));
    double wm1 = (1.0 - h2 / 12.0 * m.g(m.i_start, cE)) * um1;
    double w0 = (1.0 - h2 / 12.0 * m.g(m.i_start + 1, cE)) * u0;
    if (um1 * u0 < 0.0)
        ++nodes_out;
    double uo[5] = {0.0, 0.0, 0.0, 0.0, 0.0}; // u_out at im-2 .. im+2
    auto note_out = [&](int i, double u) {
        if (i >= im - 2 && i <= im + 2)
            uo[i - (im - 2)] = u;
        if (rec_out && i <= im)
            (*rec_out)[i] = u;
    };
    note_out(m.i_start, um1);
    note_out(m.i_start + 1, u0);
    for (int i = m.i_start + 2; i <= im + 2; ++i) {
        double w1 = 12.0 * u0 - 10.0 * w0 - wm1;
        double u1 = w1 / (1.0 - h2 / 12.0 * m.g(i, cE));
        if (i <= im && u1 * u0 < 0.0)
            ++nodes_out;
        wm1 = w0;
        w0 = w1;
        um1 = u0;
        u0 = u1;
        if (std::fabs(u0) > 1e250) {
            const double f = 1e-250;
            u0 *= f;
            um1 *= f;
            w0 *= f;
            wm1 *= f;
            for (double& x : uo)
                x *= f;
            if (rec_out)
                *rec_out *= f;
        }
        note_out(i, u0);
    }

    // inward seed: decaying exponential, scale-free
    double kappa = std::sqrt(std::max(-cE, 1e-300));
    double vp = 1.0;
    double v0 = std::exp(std::min(kappa * m.h, 600.0));
    double wp = (1.0 - h2 / 12.0 * m.g(m.n, cE)) * vp;
    double wv = (1.0 - h2 / 12.0 * m.g(m.n - 1, cE)) * v0;
    int nodes_in = 0;
    double ui[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
    auto note_in = [&](int i, double u) {
        if (i >= im - 2 && i <= im + 2)
            ui[i - (im - 2)] = u;
        if (rec_in && i >= im)
            (*rec_in)[i] = u;
    };
    note_in(m.n, vp);
    note_in(m.n - 1, v0);
    for (int i = m.n - 2; i >= im - 2; --i) {
        double w1 = 12.0 * v0 - 10.0 * wv - wp;
        double u1 = w1 / (1.0 - h2 / 12.0 * m.g(i, cE));
        if (i >= im && u1 * v0 < 0.0)
            ++nodes_in;
        wp = wv;
        wv = w1;
        vp = v0;
        v0 = u1;
        if (std::fabs(v0) > 1e250) {
            const double f = 1e-250;
            v0 *= f;
            vp *= f;
            wv *= f;
            wp *= f;
            for (double& x : ui)
                x *= f;
            if (rec_in)
                *rec_in *= f;
        }
        note_in(i, v0);
    }

    res.nodes = nodes_out + nodes_in;
    bool have_vals = uo[2] != 0.0 && ui[2] != 0.0;
    if (have_vals) {
        // five-point first derivative keeps the mismatch fourth-order accurate
        double Lout = (8.0 * (uo[3] - uo[1]) - (uo[4] - uo[0])) / (12.0 * m.h * uo[2]);
        double Lin = (8.0 * (ui[3] - ui[1]) - (ui[4] - ui[0])) / (12.0 * m.h * ui[2]);
        res.mismatch = Lout - Lin;
    }
    if (rec_out && rec_in && have_vals) {
        // scale the outward branch so the two agree at the match point
        double f = ui[2] / uo[2];
        for (int i = 0; i <= im; ++i)
            (*rec_out)[i] *= f;
    }
    if (res.nodes != n_target) {
        res.cmp = res.nodes < n_target ? -1 : +1;
        return res;
    }
    if (!have_vals) { // measure-zero pole at the plateau edge
        res.cmp = -1;
        return res;
    }
    res.on_plateau = std::isfinite(res.mismatch);
    res.cmp = res.mismatch > 0.0 ? -1 : +1;
    return res;
}

struct GridSolve {
    double E = 0.0;
    double mismatch = 0.0;
    int nodes = 0;
    bool ok = false;
};

// Bisection on the (node count, mismatch sign) ordering with secant
// acceleration once both bracket ends sit on the target plateau.
GridSolve solve_on_mesh(const Mesh& m, const PhysicalSystem& sys, int n_target, double Elo,
                        double Ehi, const ShootingConfig& cfg)
{
    GridSolve out;
    auto eval = [&](double E) {
        try {
            return shoot(m, sys, E, n_target);
        } catch (const std::invalid_argument&) {
            // turning point beyond the grid: this probe is too shallow
            Shot s;
            s.nodes = std::numeric_limits<int>::max();
            s.cmp = +1;
            return s;
        }
    };

    Shot rlo = eval(Elo);
    for (int w = 0; w < 200 && rlo.cmp > 0; ++w) {
        Elo *= 2.0;
        rlo = eval(Elo);
    }
    Shot rhi = eval(Ehi);
    for (int w = 0; w < 200 && rhi.cmp < 0; ++w) {
        Ehi *= 0.5;
        if (Ehi > -1e-15)
            return out; // no such level below zero
        rhi = eval(Ehi);
    }
    if (rlo.cmp > 0 || rhi.cmp < 0)
        return out;

    double a = Elo, b = Ehi;
    double x0 = std::numeric_limits<double>::quiet_NaN(), f0 = x0, x1 = x0, f1 = x0;
    if (rlo.on_plateau) {
        x0 = a;
        f0 = rlo.mismatch;
    }
    if (rhi.on_plateau) {
        x1 = b;
        f1 = rhi.mismatch;
    }
    double last_mismatch = std::numeric_limits<double>::quiet_NaN();
    for (int it = 0; it < cfg.max_iterations; ++it) {
        double mtrial;
        bool secant = std::isfinite(f0) && std::isfinite(f1) && f0 != f1 && it % 3 != 2;
        if (secant) {
            mtrial = x1 - f1 * (x1 - x0) / (f1 - f0);
            if (!(mtrial > a && mtrial < b))
                mtrial = 0.5 * (a + b);
        } else {
            mtrial = 0.5 * (a + b);
        }
        Shot rm = eval(mtrial);
        if (rm.cmp < 0)
            a = mtrial;
        else
            b = mtrial;
        if (rm.on_plateau) {
            x0 = x1;
            f0 = f1;
            x1 = mtrial;
            f1 = rm.mismatch;
            last_mismatch = rm.mismatch;
        }
        if (b - a <= 1e-15 * std::fabs(a) + 1e-18)
            break;
    }
    out.E = 0.5 * (a + b);
    Shot rf = eval(out.E);
    out.nodes = rf.nodes;
    out.mismatch = rf.on_plateau ? rf.mismatch : last_mismatch;
    out.ok = true;
    return out;
}

// Outermost classical turning point of the exact effective potential.
double turning_point(const PhysicalSystem& sys, int l, double E)
{
    auto veff = [&](double r) {
        double V = -sys.Z * sys.delta / std::expm1(sys.delta * r);
        return V + sys.hbar * sys.hbar * l * (l + 1) / (2.0 * sys.mu * r * r);
    };
    double lo = 1e-6, hi = 10.0;
    while (veff(hi) < E && hi < 1e9)
        hi *= 2.0;
    // V_eff is increasing toward zero from the well region; step lo out of
    // any inner forbidden zone first
    double step = (hi - lo) / 4096.0;
    double probe = lo;
    double vmin = veff(lo);
    for (double rr = lo; rr <= hi; rr += step)
        if (veff(rr) < vmin) {
            vmin = veff(rr);
            probe = rr;
        }
    if (vmin >= E)
        return hi;
    lo = probe;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (veff(mid) < E)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double auto_r_max(const PhysicalSystem& sys, int l, double E_ref)
{
    double kappa = std::sqrt(std::max(2.0 * sys.mu * (-E_ref), 1e-12)) / sys.hbar;
    double rtp = turning_point(sys, l, E_ref);
    return std::max(rtp + 25.0 / kappa, 50.0);
}

} // namespace

IntegrationResult integrate_radial(const PhysicalSystem& sys, int l, double E,
                                   const ShootingConfig& config)
{
    sys.validate();
    config.validate();
    if (!(E < 0.0))
        throw std::domain_error("integrate_radial: need E < 0 for a bound-state shot");

    double r_max = config.r_max > 0.0 ? config.r_max
                                      : std::max(3.0 / (std::sqrt(2.0 * sys.mu * -E) / sys.hbar) +
                                                     20.0 / sys.delta,
                                                 50.0);
    int n_steps = config.n_steps > 0 ? config.n_steps
                                     : std::max(2000, (int)std::ceil(r_max / 0.02));
    Mesh m = make_mesh(sys, l, r_max, n_steps);

    IntegrationResult res;
    res.r = Eigen::ArrayXd::LinSpaced(m.n + 1, 0.0, r_max);
    res.u_out = Eigen::ArrayXd::Zero(m.n + 1);
    res.u_in = Eigen::ArrayXd::Zero(m.n + 1);
    int forced_im = config.match_radius > 0.0 ? (int)std::llround(config.match_radius / m.h) : -1;
    // node target -1: a raw shot, only the mismatch and node count matter
    Shot s = shoot(m, sys, E, -1, &res.u_out, &res.u_in, &res.match_index, forced_im);
    res.node_count = s.nodes;
    res.mismatch = s.mismatch;
    return res;
}

OracleResult solve_eigenvalue(const PhysicalSystem& sys, const QuantumNumbers& q,
                              const ShootingConfig& config)
{
    sys.validate();
    config.validate();

    // warm start from the closed forms
    double E_usual, E_present;
    {
        double eps = epsilon_nl(sys, q);
        if (eps < 0.0)
            throw NoBoundStateError("state " + q.label + " is unbound at delta = " +
                                        std::to_string(sys.delta),
                                    delta_threshold(sys, q));
        double k = sys.hbar * sys.hbar * sys.delta * sys.delta / (2.0 * sys.mu);
        E_usual = -k * eps * eps;
        E_present = E_usual + k * q.l * (q.l + 1) * kD0;
    }
    double Elo, Ehi;
    if (config.energy_bracket != std::pair<double, double>{0.0, 0.0}) {
        Elo = config.energy_bracket.first;
        Ehi = config.energy_bracket.second;
    } else {
        double gap = std::max({std::fabs(E_present - E_usual), 1e-3 * std::fabs(E_usual), 1e-9});
        Elo = E_usual - 10.0 * gap;
        Ehi = std::min(E_usual + 10.0 * gap, -1e-12);
    }

    double r_max = config.r_max > 0.0 ? config.r_max : auto_r_max(sys, q.l, std::min(Ehi, E_usual));
    double h0 = config.n_steps > 0 ? r_max / config.n_steps : 0.02;

    OracleResult out;
    out.state = q;
    out.delta = sys.delta;

    double E_prev = 0.0;
    double conv = std::numeric_limits<double>::infinity();
    bool have_prev = false;
    for (int k = 0; k <= config.max_refinements; ++k) {
        int n_steps = std::max(2000, (int)std::ceil(r_max / h0)) << std::min(k, 30);
        Mesh m = make_mesh(sys, q.l, r_max, n_steps);
        GridSolve sol = solve_on_mesh(m, sys, q.n, Elo, Ehi, config);
        if (!sol.ok)
            throw NoBoundStateError("no level with " + std::to_string(q.n) +
                                        " nodes found below zero for " + q.label,
                                    delta_threshold(sys, q));
        out.energy = sol.E;
        out.node_count = sol.nodes;
        out.match_residual = std::fabs(sol.mismatch) /
                             std::max(1.0, std::sqrt(2.0 * sys.mu * -sol.E) / sys.hbar);
        if (have_prev) {
            conv = std::fabs(sol.E - E_prev);
            if (conv <= config.grid_tolerance)
                break;
        }
        E_prev = sol.E;
        have_prev = true;
        // after the first pass the level is known well; shrink the box and
        // tighten the bracket for the refined grids
        if (k == 0) {
            r_max = config.r_max > 0.0 ? config.r_max : auto_r_max(sys, q.l, sol.E);
            double w = std::max(1e-6, 1e-4 * std::fabs(sol.E));
            Elo = sol.E - w;
            Ehi = std::min(sol.E + w, -1e-18);
        } else {
            double w = std::max(50.0 * conv, 1e-10);
            Elo = sol.E - w;
            Ehi = std::min(sol.E + w, -1e-18);
        }
    }
    if (!(conv <= config.grid_tolerance) && std::isfinite(conv))
        throw ConvergenceError("solve_eigenvalue: grid refinement stalled at |dE| = " +
                               std::to_string(conv) + " for " + q.label);
    out.binding = -out.energy;
    out.grid_convergence = conv / std::max(1.0, std::fabs(out.energy));
    return out;
}

ComparisonReport approximation_error_report(std::span<const std::pair<QuantumNumbers, double>> cells,
                                            const PhysicalSystem& base, const ShootingConfig& config)
{
    ComparisonReport rep;
    for (const auto& [q, delta] : cells) {
        PhysicalSystem sys = base;
        sys.delta = delta;
        EnergyRecord p = energy(sys, q, SchemeParams::present());
        EnergyRecord u = energy(sys, q, SchemeParams::usual());
        OracleResult o = solve_eigenvalue(sys, q, config);

        ComparisonRow row;
        row.state = q;
        row.delta = delta;
        row.present = p.binding;
        row.usual = u.binding;
        row.numerov = o.binding;
        row.err_present = std::fabs(p.binding - o.binding);
        row.err_usual = std::fabs(u.binding - o.binding);
        rep.rows.push_back(row);
        if (q.l > 0) {
            ++rep.cells_l_positive;
            if (row.err_present < row.err_usual)
                ++rep.present_wins;
        } else if (row.err_present == row.err_usual) {
            ++rep.l0_ties;
        }
    }
    return rep;
}

} // namespace hulthen
