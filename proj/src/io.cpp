#include "pcm/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pcm {

namespace {

using nlohmann::json;

struct CellGrid {
    std::vector<std::vector<Rational>> rats;
    std::vector<std::vector<double>> vals;
    bool exact = true;
};

// A cell is exact when it is an integer or a fraction string; any decimal anywhere
// demotes the whole grid to floating mode.
void push_cell(CellGrid& g, const Rational& r) {
    g.rats.back().push_back(r);
    g.vals.back().push_back(r.to_double());
}

void push_cell(CellGrid& g, double v) {
    g.exact = false;
    g.rats.back().emplace_back();
    g.vals.back().push_back(v);
}

Pcm finish(CellGrid& g, double tolerance) {
    if (g.exact) return validate(g.rats);
    return validate(g.vals, tolerance);
}

void parse_json_cell(CellGrid& g, const json& cell, const std::string& where) {
    if (cell.is_number_integer()) {
        push_cell(g, Rational(cell.get<std::int64_t>()));
    } else if (cell.is_number_float()) {
        push_cell(g, cell.get<double>());
    } else if (cell.is_string()) {
        auto r = Rational::parse(cell.get<std::string>());
        if (!r) {
            throw Error(errc::parse_error,
                        where + ": cell \"" + cell.get<std::string>() + "\" is not a number or fraction");
        }
        push_cell(g, *r);
    } else {
        throw Error(errc::parse_error, where + ": cell must be a number or a fraction string");
    }
}

}  // namespace

Pcm read_matrix_json(std::istream& in, const std::string& name, double tolerance) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        // nlohmann reports the byte position; recover the line for the message.
        throw Error(errc::parse_error, name + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
        throw Error(errc::parse_error, name + ": expected an object with an \"entries\" array");
    }
    const json& entries = doc["entries"];
    CellGrid g;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (!entries[i].is_array()) {
            throw Error(errc::parse_error, name + ": row " + std::to_string(i + 1) + " is not an array");
        }
        g.rats.emplace_back();
        g.vals.emplace_back();
        for (size_t j = 0; j < entries[i].size(); ++j) {
            parse_json_cell(g, entries[i][j],
                            name + ": row " + std::to_string(i + 1) + " col " + std::to_string(j + 1));
        }
    }
    if (doc.contains("n") && doc["n"].is_number_integer() &&
        doc["n"].get<size_t>() != g.vals.size()) {
        throw Error(errc::parse_error, name + ": declared n=" + doc["n"].dump() + " but found " +
                                           std::to_string(g.vals.size()) + " rows");
    }
    return finish(g, tolerance);
}

Pcm read_matrix_csv(std::istream& in, const std::string& name, double tolerance) {
    CellGrid g;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        g.rats.emplace_back();
        g.vals.emplace_back();
        std::stringstream row(line);
        std::string cellText;
        int col = 0;
        while (std::getline(row, cellText, ',')) {
            ++col;
            size_t a = cellText.find_first_not_of(" \t\r");
            size_t b = cellText.find_last_not_of(" \t\r");
            std::string where = name + ":" + std::to_string(lineno) + ": column " + std::to_string(col);
            if (a == std::string::npos) throw Error(errc::parse_error, where + ": empty cell");
            std::string t = cellText.substr(a, b - a + 1);
            if (auto r = Rational::parse(t)) {
                push_cell(g, *r);
                continue;
            }
            double v = 0.0;
            auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || p != t.data() + t.size()) {
                throw Error(errc::parse_error, where + ": \"" + t + "\" is not a number or fraction");
            }
            push_cell(g, v);
        }
    }
    if (g.vals.empty()) throw Error(errc::parse_error, name + ": no rows");
    return finish(g, tolerance);
}

Pcm read_matrix_file(const std::string& path, double tolerance) {
    std::ifstream in(path);
    if (!in) throw Error(errc::io_error, "cannot open " + path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        return read_matrix_csv(in, path, tolerance);
    }
    return read_matrix_json(in, path, tolerance);
}

void write_matrix_json(const Pcm& a, std::ostream& out) {
    json entries = json::array();
    for (int i = 0; i < a.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.n(); ++j) {
            if (a.exact()) {
                row.push_back(a.rat(i, j).str());
            } else {
                row.push_back(a.at(i, j));
            }
        }
        entries.push_back(std::move(row));
    }
    json doc;
    doc["format"] = "pcm-matrix-v1";
    doc["n"] = a.n();
    doc["entries"] = std::move(entries);
    out << doc.dump(2) << "\n";
}

void write_matrix_csv(const Pcm& a, std::ostream& out) {
    out << "# pcm-matrix-csv-v1\n";
    for (int i = 0; i < a.n(); ++i) {
        for (int j = 0; j < a.n(); ++j) {
            if (j) out << ",";
            if (a.exact()) {
                out << a.rat(i, j).str();
            } else {
                // json's dump gives the shortest decimal that round-trips the double.
                out << json(a.at(i, j)).dump();
            }
        }
        out << "\n";
    }
}

void write_matrix_file(const Pcm& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(errc::io_error, "cannot write " + path);
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        write_matrix_csv(a, out);
    } else {
        write_matrix_json(a, out);
    }
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a_hex(ss.str());
}

}  // namespace pcm
