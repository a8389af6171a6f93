#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "ugatom/atom.hpp"
#include "ugatom/cli.hpp"
#include "ugatom/physcon.hpp"

namespace ugatom::cli {

RunConfig default_config() {
    RunConfig cfg;
    cfg.constants_tag = kConstantsTag;
    cfg.quad = radial_quadrature_default();
    if (const char* env = std::getenv("UGATOM_QUAD_TOL")) {
        char* end = nullptr;
        const double tol = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(tol > 0.0) || !std::isfinite(tol)) {
            throw UsageError(std::string("UGATOM_QUAD_TOL must be a positive number, got '") + env + "'");
        }
        cfg.quad.rel_tol = tol;
        cfg.quad.abs_tol = std::min(cfg.quad.abs_tol, tol);
    }
    return cfg;
}

std::string format_number(double v) {
    if (!std::isfinite(v)) return "null";
    if (v == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump(const Json& j, std::ostringstream& os, int depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close(2 * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ",\n";
                first = false;
                os << pad << Json(it.key()).dump() << ": ";
                dump(it.value(), os, depth + 1);
            }
            os << "\n" << close << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // short arrays of scalars stay on one line
            bool scalar = true;
            for (const auto& v : j) scalar = scalar && !v.is_structured();
            if (scalar) {
                os << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) os << ", ";
                    dump(j[i], os, depth + 1);
                }
                os << "]";
                return;
            }
            os << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ",\n";
                os << pad;
                dump(j[i], os, depth + 1);
            }
            os << "\n" << close << "]";
            return;
        }
        case Json::value_t::number_float:
            os << format_number(j.get<double>());
            return;
        default:
            os << j.dump();
    }
}

std::string csv_cell(const Json& v) {
    if (v.is_number_float()) {
        const double d = v.get<double>();
        return std::isfinite(d) ? format_number(d) : "";
    }
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ';';
            s += csv_cell(v[i]);
        }
        return s;
    }
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    }
    if (v.is_null()) return "";
    return v.dump();
}

}  // namespace

std::string write_json(const Json& doc) {
    std::ostringstream os;
    dump(doc, os, 0);
    return os.str();
}

std::string write_csv(const std::vector<Json>& rows) {
    if (rows.empty()) return "";
    std::string out;
    bool first = true;
    for (auto it = rows.front().begin(); it != rows.front().end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += it.key();
    }
    out += '\n';
    for (const auto& row : rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += csv_cell(it.value());
        }
        out += '\n';
    }
    return out;
}

std::string render(const RunConfig& cfg, const std::vector<Json>& rows) {
    if (cfg.format == OutputFormat::csv) return write_csv(rows);
    Json doc;
    doc["meta"]["constants_tag"] = cfg.constants_tag;
    doc["meta"]["version"] = kVersion;
    doc["rows"] = Json::array();
    for (const auto& r : rows) doc["rows"].push_back(r);
    return write_json(doc) + "\n";
}

}  // namespace ugatom::cli
