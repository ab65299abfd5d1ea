#include "hulthen/tables.hpp"

#include "hulthen/errors.hpp"

#include <json.hpp>

#include <fstream>

namespace hulthen {

std::string default_tables_path()
{
#ifdef HULTHEN_DATA_DIR
    return std::string(HULTHEN_DATA_DIR) + "/hulthen_tables.json";
#else
    return "data/hulthen_tables.json";
#endif
}

std::vector<TableRow> load_tables(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open fixture file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("fixture file " + path + " is not valid JSON: " + e.what());
    }
    if (!doc.contains("rows") || !doc["rows"].is_array())
        throw IoError("fixture file " + path + " has no rows array");

    std::vector<TableRow> rows;
    for (const auto& j : doc["rows"]) {
        TableRow r;
        r.table = j.at("table").get<int>();
        r.state = j.at("state").get<std::string>();
        r.delta = j.at("delta").get<double>();
        r.present = j.at("present").get<double>();
        r.previous = j.at("previous").get<double>();
        r.numerical = j.at("numerical").get<double>();
        r.aim = j.at("aim").get<double>();
        if (j.contains("variational") && !j["variational"].is_null())
            r.variational = j["variational"].get<double>();
        r.susy = j.at("susy").get<double>();
        if (j.contains("suspect"))
            r.suspect = j["suspect"].get<std::vector<std::string>>();
        if (j.contains("note"))
            r.note = j["note"].get<std::string>();
        rows.push_back(std::move(r));
    }
    if (rows.empty())
        throw IoError("fixture file " + path + " contains no rows");
    return rows;
}

} // namespace hulthen
