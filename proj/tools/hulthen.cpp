// Command-line front end: reproduce the reference tables and comparison
// curves, query energies and wavefunctions, and run the shooting oracle.

#include "hulthen/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>

namespace {

// exit codes: 0 ok, 2 parse/argument, 3 domain, 4 convergence, 5 io
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConvergence = 4;
constexpr int kExitIo = 5;

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file.open(path);
            if (!file)
                throw hulthen::IoError("cannot open output file: " + path);
            os = &file;
        }
    }
    std::ostream& stream() { return *os; }
};

std::string curve_path(const std::string& base, double delta)
{
    size_t dot = base.find_last_of('.');
    std::string stem = dot == std::string::npos ? base : base.substr(0, dot);
    std::string ext = dot == std::string::npos ? ".csv" : base.substr(dot);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", delta);
    return stem + "_delta" + buf + ext;
}

hulthen::ShootingConfig shooting_config(const hulthen::RunConfig& cfg)
{
    hulthen::ShootingConfig sc;
    sc.r_max = cfg.oracle_rmax;
    sc.n_steps = cfg.oracle_steps;
    return sc;
}

} // namespace

int main(int argc, char** argv)
{
    using namespace hulthen;

    CLI::App app{"Bound-state toolkit for the screened Coulomb (Hulthen) potential"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "flat key = value config file");
    app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.out, "output path (default standard output)");
    app.add_option("--precision", cfg.precision, "significant digits for report values")
        ->check(CLI::Range(1, 17));
    app.add_option("--hbar", cfg.units.hbar, "Planck constant over 2 pi");
    app.add_option("--mu", cfg.units.mu, "reduced mass");
    app.add_option("--Z", cfg.units.Z, "atomic number");
    app.add_option("--rmax", cfg.oracle_rmax, "shooting grid extent override");
    app.add_option("--steps", cfg.oracle_steps, "shooting grid steps override");

    // constants
    auto* c_const = app.add_subcommand("constants", "print the scheme constants and residuals");

    // energy STATE DELTA
    std::string st_label;
    double delta = 0.0;
    std::string scheme_name = "present";
    auto* c_energy = app.add_subcommand("energy", "closed-form level for one state");
    c_energy->add_option("state", st_label, "spectroscopic label, e.g. 2p")->required();
    c_energy->add_option("delta", delta, "screening parameter")->required();
    c_energy->add_option("--scheme", scheme_name, "present or usual")
        ->check(CLI::IsMember({"present", "usual"}));

    // table ID
    int table_id = 1;
    bool with_oracle = false;
    std::string fixtures_path;
    auto* c_table = app.add_subcommand("table", "recompute a reference table beside its fixtures");
    c_table->add_option("id", table_id, "table number, 1 or 2")->check(CLI::IsMember({1, 2}));
    c_table->add_flag("--with-oracle", with_oracle, "also run the shooting oracle per cell");
    c_table->add_option("--fixtures", fixtures_path, "fixture file override");

    // wavefunction STATE [DELTA]
    bool critical = false;
    int wf_points = 2000;
    double wf_rmax = 0.0;
    auto* c_wf = app.add_subcommand("wavefunction", "normalized radial wavefunction samples");
    c_wf->add_option("state", st_label, "spectroscopic label")->required();
    auto* wf_delta_opt = c_wf->add_option("delta", delta, "screening parameter");
    c_wf->add_flag("--critical", critical, "evaluate the zero-energy edge state instead");
    c_wf->add_option("--points", wf_points, "grid size");
    c_wf->add_option("--grid-rmax", wf_rmax, "grid extent override");

    // figure1
    std::vector<double> fig_deltas;
    double xmin = 0.05, xmax = 2.0;
    int fig_points = 400;
    auto* c_fig = app.add_subcommand("figure1", "exact vs approximate centrifugal curves");
    c_fig->add_option("--deltas", fig_deltas, "screening values (default 0.05..0.25 step 0.05)")
        ->delimiter(',');
    c_fig->add_option("--xmin", xmin, "window start in delta*r");
    c_fig->add_option("--xmax", xmax, "window end in delta*r");
    c_fig->add_option("--points", fig_points, "samples per curve");

    // compare
    std::vector<std::string> cmp_states;
    std::vector<double> cmp_deltas;
    auto* c_cmp = app.add_subcommand("compare",
                                     "closed forms vs the shooting oracle (default: all fixture cells)");
    c_cmp->add_option("--states", cmp_states, "state labels (with --deltas, a full grid)")
        ->delimiter(',');
    c_cmp->add_option("--deltas", cmp_deltas, "screening values")->delimiter(',');
    c_cmp->add_option("--fixtures", fixtures_path, "fixture file override");

    // global options may appear after the subcommand name
    for (CLI::App* sc : {c_const, c_energy, c_table, c_wf, c_fig, c_cmp})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        if (!config_path.empty()) {
            // file values fill in whatever the command line left untouched
            hulthen::RunConfig file_cfg;
            apply_config_file(file_cfg, config_path);
            if (!app.count("--format"))
                cfg.format = file_cfg.format;
            if (!app.count("--out"))
                cfg.out = file_cfg.out;
            if (!app.count("--precision"))
                cfg.precision = file_cfg.precision;
            if (!app.count("--hbar"))
                cfg.units.hbar = file_cfg.units.hbar;
            if (!app.count("--mu"))
                cfg.units.mu = file_cfg.units.mu;
            if (!app.count("--Z"))
                cfg.units.Z = file_cfg.units.Z;
            if (!app.count("--rmax"))
                cfg.oracle_rmax = file_cfg.oracle_rmax;
            if (!app.count("--steps"))
                cfg.oracle_steps = file_cfg.oracle_steps;
        }
        cfg.validate();

        if (c_const->parsed()) {
            GammaSolveResult r = solve_gamma_d0(1e-12);
            double eq_shift = d0_shift_constant(kGamma);
            Output out(cfg.out);
            if (cfg.format == "json") {
                nlohmann::json j{{"gamma", kGamma},
                                 {"d0", kD0},
                                 {"d0_from_gamma", eq_shift},
                                 {"shift_consistency_residual", eq_shift - kD0},
                                 {"slope_condition_residual", gamma_condition_residual(kGamma)},
                                 {"root_search",
                                  {{"bracketing_root_found", r.bracketing_root_found},
                                   {"gamma", r.gamma},
                                   {"d0", r.d0},
                                   {"residual", r.residual}}}};
                out.stream() << j.dump(2) << '\n';
            } else {
                out.stream() << "gamma = " << format_full(kGamma) << '\n'
                             << "d0 = " << format_full(kD0) << '\n'
                             << "d0_from_gamma = " << format_full(eq_shift) << '\n'
                             << "shift_consistency_residual = " << format_full(eq_shift - kD0) << '\n'
                             << "slope_condition_residual = "
                             << format_full(gamma_condition_residual(kGamma)) << '\n'
                             << "bracketing_root_found = " << (r.bracketing_root_found ? 1 : 0)
                             << '\n';
            }
            return 0;
        }

        if (c_energy->parsed()) {
            QuantumNumbers q = parse_state(st_label);
            PhysicalSystem sys = cfg.units;
            sys.delta = delta;
            SchemeParams scheme =
                scheme_name == "usual" ? SchemeParams::usual() : SchemeParams::present();
            double dc = critical_screening(sys, q, scheme);
            EnergyRecord rec = energy(sys, q, scheme); // throws NoBoundStateError if unbound
            double eps = epsilon_nl(sys, q);
            Output out(cfg.out);
            if (cfg.format == "json")
                out.stream() << energy_json(rec, eps, dc).dump(2) << '\n';
            else
                write_energy_csv(out.stream(), rec, eps, dc, cfg.precision);
            return 0;
        }

        if (c_table->parsed()) {
            std::string path = fixtures_path.empty() ? default_tables_path() : fixtures_path;
            std::vector<TableRow> rows = load_tables(path);
            std::vector<TableCheckRow> checks;
            ShootingConfig sc = shooting_config(cfg);
            for (const auto& row : rows) {
                if (row.table != table_id)
                    continue;
                QuantumNumbers q = parse_state(row.state);
                PhysicalSystem sys = cfg.units;
                sys.delta = row.delta;
                TableCheckRow c;
                c.fixture = row;
                c.present_calc = energy(sys, q, SchemeParams::present()).binding;
                c.usual_calc = energy(sys, q, SchemeParams::usual()).binding;
                c.present_dev = std::fabs(c.present_calc - row.present);
                c.aim_dev = std::fabs(c.usual_calc - row.aim);
                if (with_oracle) {
                    OracleResult o = solve_eigenvalue(sys, q, sc);
                    c.numerov_calc = o.binding;
                    c.numerov_dev = std::fabs(o.binding - row.numerical);
                } else {
                    c.numerov_calc = c.numerov_dev = std::nan("");
                }
                checks.push_back(std::move(c));
            }
            if (checks.empty())
                throw IoError("fixture file has no rows for table " + std::to_string(table_id));
            Output out(cfg.out);
            if (cfg.format == "json")
                out.stream() << table_check_json(checks, with_oracle).dump(2) << '\n';
            else
                write_table_check_csv(out.stream(), checks, cfg.precision, with_oracle);
            return 0;
        }

        if (c_wf->parsed()) {
            QuantumNumbers q = parse_state(st_label);
            PhysicalSystem sys = cfg.units;
            GridSpec grid;
            grid.n_points = wf_points;
            grid.r_max = wf_rmax;
            RadialWavefunction wf;
            if (critical) {
                sys.delta = wf_delta_opt->count() ? delta : 1.0; // ignored by the edge state
                wf = critical_state(q, sys, grid);
            } else {
                if (!wf_delta_opt->count())
                    throw ParseError("wavefunction: delta is required unless --critical is given");
                sys.delta = delta;
                wf = normalize(q, sys, grid);
            }
            Output out(cfg.out);
            if (cfg.format == "json")
                out.stream() << wavefunction_json(wf).dump() << '\n';
            else
                write_wavefunction_csv(out.stream(), wf);
            return 0;
        }

        if (c_fig->parsed()) {
            if (fig_deltas.empty())
                fig_deltas = {0.050, 0.100, 0.150, 0.200, 0.250};
            auto curves = figure1_data(fig_deltas, {xmin, xmax}, fig_points);
            if (cfg.format == "json") {
                Output out(cfg.out);
                out.stream() << curves_json(curves).dump() << '\n';
            } else if (cfg.out.empty()) {
                write_curves_csv(std::cout, curves);
            } else {
                // one file per screening value
                for (const auto& c : curves) {
                    std::ofstream f(curve_path(cfg.out, c.delta));
                    if (!f)
                        throw IoError("cannot open output file: " + curve_path(cfg.out, c.delta));
                    write_curves_csv(f, {c});
                }
            }
            return 0;
        }

        if (c_cmp->parsed()) {
            std::vector<std::pair<QuantumNumbers, double>> cells;
            if (cmp_states.empty() != cmp_deltas.empty())
                throw ParseError("compare: give both --states and --deltas, or neither");
            if (cmp_states.empty()) {
                std::string path = fixtures_path.empty() ? default_tables_path() : fixtures_path;
                for (const auto& row : load_tables(path))
                    cells.emplace_back(parse_state(row.state), row.delta);
            } else {
                for (const auto& s : cmp_states)
                    for (double d : cmp_deltas)
                        cells.emplace_back(parse_state(s), d);
            }
            ComparisonReport rep =
                approximation_error_report(cells, cfg.units, shooting_config(cfg));
            Output out(cfg.out);
            if (cfg.format == "json") {
                out.stream() << report_json(rep).dump(2) << '\n';
            } else {
                write_report_csv(out.stream(), rep, cfg.precision);
                out.stream() << "# present_beats_usual: " << rep.present_wins << "/"
                             << rep.cells_l_positive << " cells with l > 0; l0_ties: " << rep.l0_ties
                             << '\n';
            }
            return 0;
        }
    } catch (const NoBoundStateError& e) {
        std::cerr << "error: " << e.what() << "\nhint: the state is bound for delta <= "
                  << format_full(e.delta_max()) << '\n';
        return kExitDomain;
    } catch (const NotNormalizableError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
