#include <algorithm>
#include <charconv>
#include <future>
#include <istream>
#include <thread>

#include "ugatom/atom.hpp"
#include "ugatom/cli.hpp"
#include "ugatom/error.hpp"
#include "ugatom/physcon.hpp"
#include "ugatom/spectra.hpp"

namespace ugatom::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        out.push_back(trim(std::string_view(line).substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

template <class T>
bool parse_number(const std::string& s, T& v) {
    if (s.empty()) return false;
    const char* first = s.data();
    if (*first == '+') ++first;
    const auto res = std::from_chars(first, s.data() + s.size(), v);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

CatalogParse parse_catalog(std::istream& in) {
    CatalogParse out;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    bool with_z = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto fields = split_fields(t);
        if (!have_header) {
            have_header = true;
            if (fields.size() >= 3 && fields[0] == "name" && fields[1] == "mass_solar" && fields[2] == "radius_m" &&
                (fields.size() == 3 || (fields.size() == 4 && fields[3] == "z_atomic"))) {
                with_z = fields.size() == 4;
                out.header_ok = true;
                continue;
            }
            out.diagnostics.push_back("line " + std::to_string(line_no) +
                                      ": expected header name,mass_solar,radius_m[,z_atomic]");
            return out;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        const std::size_t expected = with_z ? 4 : 3;
        if (fields.size() != expected && !(with_z && fields.size() == 3)) {
            out.diagnostics.push_back(where + "expected " + std::to_string(expected) + " fields, got " +
                                      std::to_string(fields.size()));
            continue;
        }
        CatalogRow row;
        row.line = line_no;
        row.name = fields[0];
        if (row.name.empty()) {
            out.diagnostics.push_back(where + "empty name");
            continue;
        }
        if (!parse_number(fields[1], row.mass_solar) || !(row.mass_solar > 0.0)) {
            out.diagnostics.push_back(where + "mass_solar must be a positive number");
            continue;
        }
        if (!parse_number(fields[2], row.radius_m) || !(row.radius_m > 0.0)) {
            out.diagnostics.push_back(where + "radius_m must be a positive number");
            continue;
        }
        if (fields.size() == 4 && !fields[3].empty()) {
            if (!parse_number(fields[3], row.z_atomic) || row.z_atomic < 1) {
                out.diagnostics.push_back(where + "z_atomic must be a positive integer");
                continue;
            }
        }
        out.rows.push_back(std::move(row));
    }
    if (!have_header) out.header_ok = true;  // nothing at all: reported as empty by the caller
    return out;
}

namespace {

struct RowOutcome {
    Json row;
    std::string error;
};

RowOutcome evaluate(const CatalogRow& c) {
    RowOutcome o;
    try {
        const auto env = GravityEnvironment::make(c.mass_solar * kSolarMass, {0.0, 0.0, c.radius_m});
        const RedshiftReport rep = redshift_report(env);
        // Lyman alpha 2p3/2 -> 1s1/2 of the given nucleus
        const auto line = line_at_env(
            make_line(QuantumNumbers::make(0, -2, kHalf), QuantumNumbers::make(0, -1, kHalf), c.z_atomic), env);
        Json r;
        r["name"] = c.name;
        r["mass_solar"] = c.mass_solar;
        r["radius_m"] = c.radius_m;
        r["z_atomic"] = c.z_atomic;
        r["u"] = rep.u;
        r["z_ug_exact"] = rep.z_ug_exact;
        r["z_ug_series2"] = rep.z_ug_series2;
        r["z_gr_exact"] = rep.z_gr_exact;
        r["z_gr_series2"] = rep.z_gr_series2;
        r["delta_z"] = rep.delta_z;
        r["lyman_alpha_emitted_m"] = line.wavelength_e;
        r["lyman_alpha_received_m"] = line.wavelength_r;
        o.row = std::move(r);
    } catch (const Error& e) {
        o.error = "line " + std::to_string(c.line) + " (" + c.name + "): " + e.what();
    }
    return o;
}

}  // namespace

std::vector<Json> catalog_rows(const std::vector<CatalogRow>& rows, std::vector<std::string>& diagnostics) {
    std::vector<RowOutcome> results(rows.size());
    const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    const std::size_t chunk = (rows.size() + workers - 1) / workers;
    std::vector<std::future<void>> jobs;
    for (std::size_t start = 0; start < rows.size(); start += chunk) {
        const std::size_t stop = std::min(rows.size(), start + chunk);
        jobs.push_back(std::async(std::launch::async, [&, start, stop] {
            for (std::size_t i = start; i < stop; ++i) results[i] = evaluate(rows[i]);
        }));
    }
    for (auto& j : jobs) j.get();

    std::vector<Json> out;
    for (auto& r : results) {
        if (r.error.empty()) {
            out.push_back(std::move(r.row));
        } else {
            diagnostics.push_back(std::move(r.error));
        }
    }
    return out;
}

}  // namespace ugatom::cli
