#pragma once

// Output formatting and run configuration shared by the CLI: deterministic
// numeric formatting, a flat key = value config file, and CSV/JSON writers
// for curves, wavefunctions, energies, and comparison reports.

#include "hulthen/numerov.hpp"
#include "hulthen/scheme.hpp"
#include "hulthen/spectrum.hpp"
#include "hulthen/tables.hpp"
#include "hulthen/wavefunction.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hulthen {

struct RunConfig {
    PhysicalSystem units;            ///< delta filled per command
    std::string format = "csv";      ///< csv or json
    std::string out;                 ///< empty = standard output
    int precision = 7;               ///< significant digits for report values
    double oracle_rmax = 0.0;        ///< shooting overrides, 0 = automatic
    int oracle_steps = 0;

    void validate() const;
};

/// Reads a flat `key = value` file. Known keys: hbar, mu, z, format, out,
/// precision, rmax, steps. Unknown keys are rejected. Flags on the command
/// line override file values, so this runs before flag handling.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// %.17g, enough digits to round-trip a double.
std::string format_full(double v);

/// %.{sig}g with sig clamped to [1, 17].
std::string format_sig(double v, int sig);

// curve export
void write_curves_csv(std::ostream& os, const std::vector<CentrifugalCurve>& curves);
nlohmann::json curves_json(const std::vector<CentrifugalCurve>& curves);

// wavefunction export
void write_wavefunction_csv(std::ostream& os, const RadialWavefunction& wf);
nlohmann::json wavefunction_json(const RadialWavefunction& wf);

// energy record
void write_energy_csv(std::ostream& os, const EnergyRecord& rec, double eps, double delta_c,
                      int precision);
nlohmann::json energy_json(const EnergyRecord& rec, double eps, double delta_c);

// comparison report, header state,delta,present,usual,numerov,err_present,err_usual
void write_report_csv(std::ostream& os, const ComparisonReport& rep, int precision);
nlohmann::json report_json(const ComparisonReport& rep);

/// One recomputed table beside its fixtures with per-cell deviations.
struct TableCheckRow {
    TableRow fixture;
    double present_calc = 0.0;
    double usual_calc = 0.0;
    double present_dev = 0.0;
    double aim_dev = 0.0;
    double numerov_calc = 0.0; ///< NaN unless the oracle ran
    double numerov_dev = 0.0;
};

void write_table_check_csv(std::ostream& os, const std::vector<TableCheckRow>& rows, int precision,
                           bool with_oracle);
nlohmann::json table_check_json(const std::vector<TableCheckRow>& rows, bool with_oracle);

} // namespace hulthen
