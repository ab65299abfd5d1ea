#include "hulthen/io.hpp"

#include "hulthen/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace hulthen {

void RunConfig::validate() const
{
    if (precision < 1 || precision > 17)
        throw ParseError("precision must lie in [1, 17]");
    if (format != "csv" && format != "json")
        throw ParseError("format must be csv or json");
}

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    if (a == std::string::npos)
        return {};
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v)
{
    try {
        size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size())
            throw ParseError("");
        return d;
    } catch (...) {
        throw ParseError("config key '" + key + "' has a non-numeric value '" + v + "'");
    }
}

} // namespace

void apply_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#')
            continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ParseError("config line " + std::to_string(lineno) + " is not key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        std::transform(key.begin(), key.end(), key.begin(),
                       [](unsigned char c) { return (char)std::tolower(c); });
        if (key == "hbar")
            cfg.units.hbar = parse_double(key, val);
        else if (key == "mu")
            cfg.units.mu = parse_double(key, val);
        else if (key == "z")
            cfg.units.Z = parse_double(key, val);
        else if (key == "format")
            cfg.format = val;
        else if (key == "out")
            cfg.out = val;
        else if (key == "precision")
            cfg.precision = (int)parse_double(key, val);
        else if (key == "rmax")
            cfg.oracle_rmax = parse_double(key, val);
        else if (key == "steps")
            cfg.oracle_steps = (int)parse_double(key, val);
        else
            throw ParseError("unknown config key '" + key + "' on line " + std::to_string(lineno));
    }
    cfg.validate();
}

std::string format_full(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_sig(double v, int sig)
{
    sig = std::clamp(sig, 1, 17);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

void write_curves_csv(std::ostream& os, const std::vector<CentrifugalCurve>& curves)
{
    os << "delta,delta_r,exact,approx\n";
    for (const auto& c : curves)
        for (Eigen::Index i = 0; i < c.delta_r.size(); ++i)
            os << format_full(c.delta) << ',' << format_full(c.delta_r[i]) << ','
               << format_full(c.exact[i]) << ',' << format_full(c.approx[i]) << '\n';
}

nlohmann::json curves_json(const std::vector<CentrifugalCurve>& curves)
{
    nlohmann::json out;
    out["curves"] = nlohmann::json::array();
    for (const auto& c : curves) {
        nlohmann::json jc;
        jc["delta"] = c.delta;
        jc["max_rel_gap"] = c.max_rel_gap;
        jc["samples"] = nlohmann::json::array();
        for (Eigen::Index i = 0; i < c.delta_r.size(); ++i)
            jc["samples"].push_back(
                {{"delta_r", c.delta_r[i]}, {"exact", c.exact[i]}, {"approx", c.approx[i]}});
        out["curves"].push_back(std::move(jc));
    }
    return out;
}

void write_wavefunction_csv(std::ostream& os, const RadialWavefunction& wf)
{
    os << "r,u\n";
    for (Eigen::Index i = 0; i < wf.r.size(); ++i)
        os << format_full(wf.r[i]) << ',' << format_full(wf.u[i]) << '\n';
}

nlohmann::json wavefunction_json(const RadialWavefunction& wf)
{
    nlohmann::json out;
    out["state"] = wf.state.label;
    out["n"] = wf.state.n;
    out["l"] = wf.state.l;
    out["N"] = wf.state.N;
    out["delta"] = wf.delta;
    out["eps"] = wf.eps;
    out["critical"] = wf.critical;
    out["node_count"] = wf.node_count;
    if (std::isfinite(wf.norm_quadrature))
        out["norm_quadrature"] = wf.norm_quadrature;
    else
        out["norm_quadrature"] = nullptr;
    if (std::isfinite(wf.norm_closed_form)) {
        out["norm_closed_form"] = wf.norm_closed_form;
        out["norm_closed_form_deviation"] = wf.norm_closed_form_deviation;
    } else {
        out["norm_closed_form"] = nullptr;
        out["norm_closed_form_deviation"] = nullptr;
    }
    out["samples"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < wf.r.size(); ++i)
        out["samples"].push_back({{"r", wf.r[i]}, {"u", wf.u[i]}});
    return out;
}

void write_energy_csv(std::ostream& os, const EnergyRecord& rec, double eps, double delta_c,
                      int precision)
{
    os << "state,delta,scheme,energy,binding,eps,delta_c,above_zero_artifact\n";
    os << rec.state.label << ',' << format_sig(rec.delta, precision) << ','
       << (rec.scheme.is_present() ? "present" : "usual") << ','
       << format_sig(rec.energy, precision) << ',' << format_sig(rec.binding, precision) << ','
       << format_sig(eps, precision) << ',' << format_sig(delta_c, precision) << ','
       << (rec.above_zero_artifact ? 1 : 0) << '\n';
}

nlohmann::json energy_json(const EnergyRecord& rec, double eps, double delta_c)
{
    return {{"state", rec.state.label},
            {"delta", rec.delta},
            {"scheme", rec.scheme.is_present() ? "present" : "usual"},
            {"energy", rec.energy},
            {"binding", rec.binding},
            {"eps", eps},
            {"delta_c", delta_c},
            {"above_zero_artifact", rec.above_zero_artifact}};
}

void write_report_csv(std::ostream& os, const ComparisonReport& rep, int precision)
{
    os << "state,delta,present,usual,numerov,err_present,err_usual\n";
    for (const auto& r : rep.rows)
        os << r.state.label << ',' << format_sig(r.delta, precision) << ','
           << format_sig(r.present, precision) << ',' << format_sig(r.usual, precision) << ','
           << format_sig(r.numerov, precision) << ',' << format_sig(r.err_present, precision)
           << ',' << format_sig(r.err_usual, precision) << '\n';
}

nlohmann::json report_json(const ComparisonReport& rep)
{
    nlohmann::json out;
    out["rows"] = nlohmann::json::array();
    for (const auto& r : rep.rows)
        out["rows"].push_back({{"state", r.state.label},
                               {"delta", r.delta},
                               {"present", r.present},
                               {"usual", r.usual},
                               {"numerov", r.numerov},
                               {"err_present", r.err_present},
                               {"err_usual", r.err_usual}});
    out["summary"] = {{"cells_l_positive", rep.cells_l_positive},
                      {"present_wins", rep.present_wins},
                      {"l0_ties", rep.l0_ties}};
    return out;
}

void write_table_check_csv(std::ostream& os, const std::vector<TableCheckRow>& rows, int precision,
                           bool with_oracle)
{
    os << "state,delta,present_fixture,present_calc,present_dev,aim_fixture,usual_calc,aim_dev";
    if (with_oracle)
        os << ",numerical_fixture,numerov_calc,numerov_dev";
    os << ",suspect\n";
    for (const auto& r : rows) {
        os << r.fixture.state << ',' << format_sig(r.fixture.delta, precision) << ','
           << format_sig(r.fixture.present, precision) << ',' << format_sig(r.present_calc, precision)
           << ',' << format_sig(r.present_dev, 3) << ',' << format_sig(r.fixture.aim, precision)
           << ',' << format_sig(r.usual_calc, precision) << ',' << format_sig(r.aim_dev, 3);
        if (with_oracle)
            os << ',' << format_sig(r.fixture.numerical, precision) << ','
               << format_sig(r.numerov_calc, precision) << ',' << format_sig(r.numerov_dev, 3);
        os << ',';
        for (size_t i = 0; i < r.fixture.suspect.size(); ++i)
            os << (i ? ";" : "") << r.fixture.suspect[i];
        os << '\n';
    }
}

nlohmann::json table_check_json(const std::vector<TableCheckRow>& rows, bool with_oracle)
{
    nlohmann::json out;
    out["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j = {{"state", r.fixture.state},
                            {"delta", r.fixture.delta},
                            {"present_fixture", r.fixture.present},
                            {"present_calc", r.present_calc},
                            {"present_dev", r.present_dev},
                            {"aim_fixture", r.fixture.aim},
                            {"usual_calc", r.usual_calc},
                            {"aim_dev", r.aim_dev},
                            {"suspect", r.fixture.suspect}};
        if (with_oracle) {
            j["numerical_fixture"] = r.fixture.numerical;
            j["numerov_calc"] = r.numerov_calc;
            j["numerov_dev"] = r.numerov_dev;
        }
        out["rows"].push_back(std::move(j));
    }
    return out;
}

} // namespace hulthen
