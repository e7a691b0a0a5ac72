// Table output (CSV and JSON) and plain `key = value` config files.
//
// Every numeric cell carries a safe-rounding direction: "down" for constants
// that stay admissible when truncated (c1, c2 flavors), "up" for those that
// stay admissible when raised (c3, B), "exact" otherwise.  CSV uses '.'
// decimals, no grouping, 10 significant digits; JSON mirrors the columns as
// an array of objects.
#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "../../vendor/json.hpp"

namespace chebotarev::io {

enum class Rounding { Exact, Down, Up };

inline const char* rounding_name(Rounding r) {
    switch (r) {
        case Rounding::Down: return "down";
        case Rounding::Up: return "up";
        default: return "exact";
    }
}

struct Cell {
    std::variant<std::string, double, long long> value;
    Rounding rounding = Rounding::Exact;

    Cell(const char* s) : value(std::string(s)) {}
    Cell(std::string s) : value(std::move(s)) {}
    Cell(double v, Rounding r = Rounding::Exact) : value(v), rounding(r) {}
    Cell(long long v) : value(v) {}
    Cell(int v) : value(static_cast<long long>(v)) {}
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells) {
        if (cells.size() != columns.size()) {
            throw std::logic_error("Table: row width mismatch");
        }
        rows.push_back(std::move(cells));
    }
};

inline std::string format_number(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

inline std::string cell_text(const Cell& c) {
    if (std::holds_alternative<std::string>(c.value)) {
        return std::get<std::string>(c.value);
    }
    if (std::holds_alternative<long long>(c.value)) {
        return std::to_string(std::get<long long>(c.value));
    }
    return format_number(std::get<double>(c.value));
}

// CSV with a trailing per-row `rounding` metadata column listing the safe
// direction of each non-exact cell as `column:direction` pairs.
inline std::string to_csv(const Table& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.columns.size(); ++i) {
        os << (i ? "," : "") << t.columns[i];
    }
    os << ",rounding\n";
    for (const auto& row : t.rows) {
        std::string meta;
        for (size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << cell_text(row[i]);
            if (row[i].rounding != Rounding::Exact) {
                if (!meta.empty()) meta += ';';
                meta += t.columns[i] + ":" + rounding_name(row[i].rounding);
            }
        }
        os << "," << meta << "\n";
    }
    return os.str();
}

inline std::string to_json(const Table& t) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        nlohmann::json meta = nlohmann::json::object();
        for (size_t i = 0; i < row.size(); ++i) {
            const Cell& c = row[i];
            if (std::holds_alternative<std::string>(c.value)) {
                obj[t.columns[i]] = std::get<std::string>(c.value);
            } else if (std::holds_alternative<long long>(c.value)) {
                obj[t.columns[i]] = std::get<long long>(c.value);
            } else {
                obj[t.columns[i]] = std::get<double>(c.value);
            }
            if (c.rounding != Rounding::Exact) {
                meta[t.columns[i]] = rounding_name(c.rounding);
            }
        }
        obj["rounding"] = meta;
        arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
}

// Plain-text config: one `key = value` per line, '#' comments, blank lines
// ignored.  Malformed lines raise with the line number.
inline std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string raw;
    int lineno = 0;
    auto strip = [](const std::string& s) {
        const size_t a = s.find_first_not_of(" \t\r");
        const size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = strip(raw);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": expected `key = value`");
        }
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        if (key.empty()) {
            throw std::runtime_error("config line " + std::to_string(lineno) +
                                     ": empty key");
        }
        out[key] = value;
    }
    return out;
}

inline std::map<std::string, std::string> parse_config_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse_config(in);
}

}  // namespace chebotarev::io
