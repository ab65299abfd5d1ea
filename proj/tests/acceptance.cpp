// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not configurable.

#include "hulthen/io.hpp"
#include "hulthen/numerov.hpp"
#include "hulthen/scheme.hpp"
#include "hulthen/specfun.hpp"
#include "hulthen/spectrum.hpp"
#include "hulthen/tables.hpp"
#include "hulthen/wavefunction.hpp"

#include <chrono>
#include <cfloat>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <vector>

using namespace hulthen;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail)
{
    std::printf("criterion %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass)
        ++g_failures;
}

PhysicalSystem atomic(double delta)
{
    PhysicalSystem s;
    s.delta = delta;
    return s;
}

std::string fmt(const char* f, ...)
{
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// independent norm check, composite Gauss-Legendre panels in s
double norm_integral_independent(const QuantumNumbers& q, const PhysicalSystem& sys, double N)
{
    double eps = epsilon_nl(sys, q);
    QuadratureRule gl = gauss_legendre_rule(32);
    const int panels = 24;
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        double a = (double)p / panels, w = 1.0 / panels;
        for (Eigen::Index i = 0; i < gl.nodes.size(); ++i) {
            double s = a + w * gl.nodes[i];
            double P = jacobi_eval(q.n, 2.0 * eps, 2.0 * q.l + 1.0, 1.0 - 2.0 * s);
            acc += w * gl.weights[i] * std::pow(s, 2.0 * eps - 1.0) *
                   std::pow(1.0 - s, 2.0 * q.l + 2.0) * P * P;
        }
    }
    return N * N / sys.delta * acc;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    return num / den;
}

} // namespace

int main()
{
    std::vector<TableRow> rows = load_tables(default_tables_path());

    // 1: the shift constant from the adopted expansion point
    {
        double d0 = d0_shift_constant(kGamma);
        double dev = std::fabs(d0 - 0.0823058167837972);
        report(1, dev <= 1e-9, fmt("d0(gamma) = %.16g, |dev from 0.0823058167837972| = %.3g (tol 1e-9)", d0, dev));
    }

    // 2: improved-scheme column of both tables within 5e-8, suspect cells listed
    {
        double max_dev = 0.0;
        int clean = 0;
        std::string suspects;
        for (const auto& row : rows) {
            QuantumNumbers q = parse_state(row.state);
            double calc = energy(atomic(row.delta), q, SchemeParams::present()).binding;
            double dev = std::fabs(calc - row.present);
            if (row.is_suspect("present")) {
                suspects += fmt(" [%s@%.3f fixture %.7f calc %.10f dev %.2g, flagged misprint]",
                                row.state.c_str(), row.delta, row.present, calc, dev);
                continue;
            }
            ++clean;
            max_dev = std::max(max_dev, dev);
        }
        report(2, max_dev <= 5e-8,
               fmt("%d/41 cells clean, max dev %.3g (tol 5e-8);%s", clean, max_dev,
                   suspects.empty() ? " none flagged" : suspects.c_str()));
    }

    // 3: d0 = 0 column within 5e-8, suspect cells listed
    {
        double max_dev = 0.0;
        int clean = 0;
        std::string suspects;
        for (const auto& row : rows) {
            QuantumNumbers q = parse_state(row.state);
            double calc = energy(atomic(row.delta), q, SchemeParams::usual()).binding;
            double dev = std::fabs(calc - row.aim);
            if (row.is_suspect("aim")) {
                suspects += fmt(" [%s@%.3f fixture %.7f calc %.10f dev %.2g, flagged misprint]",
                                row.state.c_str(), row.delta, row.aim, calc, dev);
                continue;
            }
            ++clean;
            max_dev = std::max(max_dev, dev);
        }
        report(3, max_dev <= 5e-8,
               fmt("%d/41 cells clean, max dev %.3g (tol 5e-8);%s", clean, max_dev,
                   suspects.empty() ? " none flagged" : suspects.c_str()));
    }

    // 4: shooting oracle reproduces the numerical column; s-wave calibration
    std::map<std::pair<std::string, double>, double> oracle;
    {
        auto t0 = std::chrono::steady_clock::now();
        double max_dev = 0.0, max_conv = 0.0;
        std::string worst;
        bool nodes_ok = true;
        for (const auto& row : rows) {
            QuantumNumbers q = parse_state(row.state);
            OracleResult r = solve_eigenvalue(atomic(row.delta), q);
            oracle[{row.state, row.delta}] = r.binding;
            double dev = std::fabs(r.binding - row.numerical);
            if (dev > max_dev) {
                max_dev = dev;
                worst = fmt("%s@%.3f", row.state.c_str(), row.delta);
            }
            max_conv = std::max(max_conv, r.grid_convergence);
            nodes_ok = nodes_ok && (r.node_count == q.n);
        }
        OracleResult cal = solve_eigenvalue(atomic(0.025), parse_state("1s"));
        double cal_dev = std::fabs(cal.binding - 0.487578125);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = max_dev <= 2e-5 && max_conv <= 1e-9 && cal_dev <= 1e-8 && nodes_ok &&
                    secs <= 60.0;
        report(4, pass,
               fmt("42 solves: max |dev| %.3g at %s (tol 2e-5), max grid conv %.2g (tol 1e-9), "
                   "1s calibration dev %.3g (tol 1e-8), node counts %s, %.1f s (limit 60)",
                   max_dev, worst.c_str(), max_conv, cal_dev, nodes_ok ? "exact" : "WRONG", secs));
    }

    // 5: the improved scheme is closer to the oracle on every l > 0 cell,
    //    and ties exactly at l = 0
    {
        int wins = 0, cells = 0;
        std::string losses;
        for (const auto& row : rows) {
            QuantumNumbers q = parse_state(row.state);
            if (q.l == 0)
                continue;
            ++cells;
            double nume = oracle[{row.state, row.delta}];
            double ep = std::fabs(energy(atomic(row.delta), q, SchemeParams::present()).binding - nume);
            double eu = std::fabs(energy(atomic(row.delta), q, SchemeParams::usual()).binding - nume);
            if (ep < eu)
                ++wins;
            else
                losses += fmt(" [%s@%.3f]", row.state.c_str(), row.delta);
        }
        bool l0_equal = true;
        for (double d : {0.025, 0.08, 0.2}) // 3s stays bound below 2/9
            for (const char* st : {"1s", "2s", "3s"}) {
                double bp = energy(atomic(d), parse_state(st), SchemeParams::present()).binding;
                double bu = energy(atomic(d), parse_state(st), SchemeParams::usual()).binding;
                l0_equal = l0_equal && bp == bu;
            }
        report(5, wins == cells && l0_equal,
               fmt("improved scheme closer on %d/%d l>0 cells%s; l=0 schemes identical: %s", wins,
                   cells, losses.empty() ? "" : losses.c_str(), l0_equal ? "yes" : "NO"));
    }

    // 6: wavefunction properties at the smallest tabulated screening
    {
        bool pass = true;
        std::string detail;
        std::map<std::string, double> smallest;
        for (const auto& row : rows)
            if (!smallest.count(row.state) || row.delta < smallest[row.state])
                smallest[row.state] = row.delta;
        std::vector<std::pair<std::string, double>> t1_states;
        for (const auto& row : rows)
            if (row.table == 1 && row.delta == smallest[row.state])
                t1_states.emplace_back(row.state, row.delta);

        double worst_norm = 0.0, worst_dual = 0.0, worst_tail = 0.0;
        bool nodes_ok = true;
        for (const auto& [label, delta] : t1_states) {
            QuantumNumbers q = parse_state(label);
            PhysicalSystem sys = atomic(delta);
            RadialWavefunction wf = normalize(q, sys);
            worst_norm = std::max(worst_norm,
                                  std::fabs(norm_integral_independent(q, sys, wf.norm_quadrature) - 1.0));
            nodes_ok = nodes_ok && wf.node_count == q.n;

            // dual path at scattered radii
            for (double t : {0.8, 3.0, 9.0, 17.0}) {
                double r = t / (wf.eps * delta);
                double a = u_unnormalized(q, sys, r);
                double b = u_unnormalized_hyp2f1(q, sys, r);
                worst_dual = std::max(worst_dual,
                                      std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300}));
            }

            // tail rate where s = e^{-delta r} is negligible
            std::vector<double> xs, ys;
            double rate = wf.eps * delta;
            double w_lo = std::max(3.0, std::log(100.0 * (q.l + 1) / wf.eps));
            for (Eigen::Index i = 0; i < wf.r.size(); ++i) {
                double t = delta * wf.r[i];
                if (t >= w_lo && t <= w_lo + 2.0 && wf.u[i] != 0.0) {
                    xs.push_back(wf.r[i]);
                    ys.push_back(std::log(std::fabs(wf.u[i])));
                }
            }
            double fitted = -fit_slope(xs, ys);
            worst_tail = std::max(worst_tail, std::fabs(fitted / rate - 1.0));
        }
        double overlap = std::fabs(orthogonality_check(parse_state("2p"), parse_state("3p"),
                                                       atomic(0.025)));
        pass = worst_norm <= 1e-8 && nodes_ok && overlap <= 1e-6 && worst_dual <= 1e-12 &&
               worst_tail <= 0.02;
        report(6, pass,
               fmt("norm dev %.2g (tol 1e-8), nodes %s, same-l overlap %.2g (tol 1e-6), "
                   "dual-path %.2g (tol 1e-12), tail-rate dev %.2g (tol 0.02)",
                   worst_norm, nodes_ok ? "exact" : "WRONG", overlap, worst_dual, worst_tail));
    }

    // 7: approximation-scheme properties
    {
        // exactness at the expansion point
        double worst_exact = 0.0;
        for (double delta : {0.025, 0.05, 0.25})
            worst_exact = std::max(worst_exact,
                                   std::fabs(approx_centrifugal(kGamma / delta, delta,
                                                                SchemeParams::present()) *
                                                 (kGamma / delta) * (kGamma / delta) -
                                             1.0));
        // algebraic identity within 4 ulps on a log grid
        double worst_ulp = 0.0;
        for (double x = 1e-6; x <= 30.0; x *= 1.2) {
            double v = v_of(x);
            double a = v + v * v;
            double b = std::exp(x) / (std::expm1(x) * std::expm1(x));
            worst_ulp = std::max(worst_ulp, std::fabs(a - b) / (DBL_EPSILON * b));
        }
        // monotone limit over a factor-2 ladder
        auto errs = limit_consistency_check(std::vector<double>{0.125, 0.0625, 0.03125}, 2.0);
        bool monotone = errs[0] > errs[1] && errs[1] > errs[2];
        // scheme gap identity; the floor is one rounding of the binding, the
        // smallest error any double-valued level can carry (the raw target of
        // 1e-14 relative to the shift would demand sub-ulp gaps)
        double worst_gap_rel = 0.0, worst_gap_ulp = 0.0;
        bool gap_ok = true;
        for (const auto& row : rows) {
            QuantumNumbers q = parse_state(row.state);
            double bp = energy(atomic(row.delta), q, SchemeParams::present()).binding;
            double bu = energy(atomic(row.delta), q, SchemeParams::usual()).binding;
            double shift = row.delta * row.delta / 2.0 * (double)q.l * (q.l + 1) * kD0;
            double err = std::fabs((bu - bp) - shift);
            worst_gap_rel = std::max(worst_gap_rel, err / shift);
            worst_gap_ulp = std::max(worst_gap_ulp, err / (DBL_EPSILON * bu));
            gap_ok = gap_ok && err <= std::max(1e-14 * shift, 2.0 * DBL_EPSILON * bu);
        }
        bool pass = worst_exact <= 1e-12 && worst_ulp <= 4.0 && monotone && gap_ok;
        report(7, pass,
               fmt("expansion-point exactness %.2g (tol 1e-12), identity %.2f ulp (tol 4), "
                   "limit ladder monotone: %s, scheme-gap identity %.2f ulp of the level "
                   "(tol 2; raw %.2g relative to the shift)",
                   worst_exact, worst_ulp, monotone ? "yes" : "NO", worst_gap_ulp,
                   worst_gap_rel));
    }

    // 8: the two documented discrepancies are computed and nonzero
    {
        double slope_res = gamma_condition_residual(kGamma);
        GammaSolveResult root = solve_gamma_d0(1e-12);
        ClosedFormNorm cf1 = norm_closed_form(parse_state("1s"), atomic(0.05));
        ClosedFormNorm cf2 = norm_closed_form(parse_state("3p"), atomic(0.05));
        bool pass = std::fabs(slope_res) > 1e-5 && !root.bracketing_root_found &&
                    std::isfinite(cf1.deviation) && cf1.deviation > 0.01 &&
                    std::isfinite(cf2.deviation) && cf2.deviation > 0.01;
        report(8, pass,
               fmt("slope-condition residual %.6g (no positive root; search agrees: %s); "
                   "closed-form norm deviates from quadrature by %.4g (1s@0.05) and %.4g (3p@0.05)",
                   slope_res, root.bracketing_root_found ? "NO" : "yes", cf1.deviation,
                   cf2.deviation));
    }

    std::printf("%s\n", g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                        : "ACCEPTANCE: failures present");
    return g_failures == 0 ? 0 : 1;
}
