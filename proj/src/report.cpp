#include "cva/report.hpp"

#include <sstream>

namespace cva {

Json RunConfig::to_json() const {
    Json j;
    j["command"] = command;
    j["n"] = n;
    j["seed"] = seed;
    j["trials"] = trials;
    j["format"] = format;
    j["order"] = order;
    j["threads"] = threads;
    j["cacheDir"] = cache_dir;
    j["budgetSeconds"] = budget_seconds;
    j["pi"] = pi ? Json(pi->str()) : Json(nullptr);
    j["orientation"] = orientation == Orientation::Standard ? "standard" : "flipped";
    j["diagConvention"] = diag_inverse ? "pi-inverse" : "pi";
    return j;
}

TermOrder RunConfig::term_order() const {
    if (order == "grevlex") return TermOrder::grevlex();
    if (order == "lex") return TermOrder::lex();
    throw UsageError("unknown order: " + order);
}

int Report::failures() const {
    int f = 0;
    for (const auto& c : checks)
        if (c.status == "FAIL") ++f;
    return f;
}

int Report::findings() const {
    int f = 0;
    for (const auto& c : checks)
        if (c.status == "REPORT" && c.payload.contains("matchesPaperGl3") &&
            c.payload["matchesPaperGl3"].is_boolean() && !c.payload["matchesPaperGl3"].get<bool>())
            ++f;
    return f;
}

Json Report::to_json() const {
    Json j;
    j["tool"] = "cva";
    j["version"] = "0.1.0";
    j["config"] = config.to_json();
    j["checks"] = Json::array();
    for (const auto& c : checks) {
        Json jc;
        jc["name"] = c.name;
        jc["status"] = c.status;
        jc["payload"] = c.payload;
        jc["paperExpectation"] = c.paper_expectation;
        jc["elapsedMs"] = config.redact_timings ? 0 : c.elapsed_ms;
        j["checks"].push_back(std::move(jc));
    }
    Json s;
    s["checks"] = checks.size();
    s["failures"] = failures();
    s["findings"] = findings();
    j["summary"] = std::move(s);
    return j;
}

namespace {

void render_value_lines(std::ostringstream& os, const std::string& prefix, const Json& v);

void render_rows_table(std::ostringstream& os, const Json& rows) {
    // Uniform array of objects: aligned columns.
    std::vector<std::string> cols;
    for (const auto& [k, v] : rows[0].items()) cols.push_back(k);
    std::vector<std::vector<std::string>> cells;
    cells.push_back(cols);
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (const auto& c : cols) {
            const Json& v = row.contains(c) ? row[c] : Json(nullptr);
            line.push_back(v.is_string() ? v.get<std::string>() : v.dump());
        }
        cells.push_back(std::move(line));
    }
    std::vector<size_t> width(cols.size(), 0);
    for (const auto& line : cells)
        for (size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    for (const auto& line : cells) {
        os << "  ";
        for (size_t i = 0; i < line.size(); ++i) {
            os << line[i];
            if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
        }
        os << "\n";
    }
}

void render_value_lines(std::ostringstream& os, const std::string& prefix, const Json& v) {
    if (v.is_object()) {
        for (const auto& [k, val] : v.items()) {
            if (val.is_array() && !val.empty() && val[0].is_object()) {
                os << prefix << k << ":\n";
                render_rows_table(os, val);
            } else if (val.is_object()) {
                os << prefix << k << ": " << val.dump() << "\n";
            } else {
                os << prefix << k << ": "
                   << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
            }
        }
    } else if (!v.is_null()) {
        os << prefix << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

} // namespace

std::string render_table(const Report& r) {
    std::ostringstream os;
    for (const auto& c : r.checks) {
        os << "[" << c.status << "] " << c.name << "\n";
        render_value_lines(os, "  ", c.payload);
        if (!c.paper_expectation.is_null()) {
            os << "  paper: " << c.paper_expectation.dump() << "\n";
        }
    }
    os << "summary: checks=" << r.checks.size() << " failures=" << r.failures()
       << " findings=" << r.findings() << "\n";
    return os.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    auto esc = [](std::string s) {
        bool quote = s.find_first_of(",\"\n") != std::string::npos;
        if (!quote) return s;
        std::string t = "\"";
        for (char ch : s) {
            if (ch == '"') t += "\"\"";
            else t += ch;
        }
        return t + "\"";
    };
    os << "check,status,field,value\n";
    for (const auto& c : r.checks) {
        if (c.payload.is_object()) {
            for (const auto& [k, v] : c.payload.items()) {
                if (v.is_array() && !v.empty() && v[0].is_object()) {
                    for (size_t i = 0; i < v.size(); ++i)
                        os << esc(c.name) << "," << c.status << "," << esc(k + "[" + std::to_string(i) + "]")
                           << "," << esc(v[i].dump()) << "\n";
                } else {
                    os << esc(c.name) << "," << c.status << "," << esc(k) << ","
                       << esc(v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
                }
            }
        } else {
            os << esc(c.name) << "," << c.status << ",payload," << esc(c.payload.dump()) << "\n";
        }
    }
    os << "summary,,checks," << r.checks.size() << "\n";
    os << "summary,,failures," << r.failures() << "\n";
    os << "summary,,findings," << r.findings() << "\n";
    return os.str();
}

std::string Report::render() const {
    if (config.format == "json") return to_json().dump(2) + "\n";
    if (config.format == "csv") return render_csv(*this);
    if (config.format == "table") return render_table(*this);
    throw UsageError("unknown format: " + config.format);
}

} // namespace cva
