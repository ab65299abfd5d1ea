#pragma once

// Reference bound-state binding energies used as regression fixtures, loaded
// from the versioned data file shipped with the repository.

#include <optional>
#include <string>
#include <vector>

namespace hulthen {

struct TableRow {
    int table = 0;             ///< 1 or 2
    std::string state;         ///< spectroscopic label
    double delta = 0.0;
    double present = 0.0;      ///< improved-scheme closed form
    double previous = 0.0;     ///< earlier two-term scheme, display only
    double numerical = 0.0;    ///< numerical-integration reference
    double aim = 0.0;          ///< d0 = 0 closed form
    std::optional<double> variational; ///< missing in some rows
    double susy = 0.0;         ///< display only
    std::vector<std::string> suspect; ///< column names with suspected misprints
    std::string note;

    bool is_suspect(const std::string& column) const
    {
        for (const auto& c : suspect)
            if (c == column)
                return true;
        return false;
    }
};

/// Loads and validates the fixture file; throws IoError if unreadable.
std::vector<TableRow> load_tables(const std::string& path);

/// The compiled-in fixture location (the repository data directory).
std::string default_tables_path();

} // namespace hulthen
