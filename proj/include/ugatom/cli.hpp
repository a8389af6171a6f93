#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ugatom/gravity.hpp"
#include "ugatom/quadrature.hpp"

namespace ugatom::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 2, kInputData = 3, kNumeric = 4 };

enum class OutputFormat { json, csv };

struct RunConfig {
    std::string constants_tag;
    OutputFormat format = OutputFormat::json;
    QuadratureSpec quad;
    int verbosity = 0;
};

// Defaults plus the UGATOM_QUAD_TOL override. Throws UsageError on a bad value.
RunConfig default_config();

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

// %.17g; non-finite values become null in JSON and empty cells in CSV.
std::string format_number(double v);
// Indented JSON with fixed key order and 17 significant digits.
std::string write_json(const Json& doc);
// Header from the keys of the first row; arrays are joined with ';'.
std::string write_csv(const std::vector<Json>& rows);
// {"meta": {...}, "rows": [...]} or CSV, followed by a newline.
std::string render(const RunConfig& cfg, const std::vector<Json>& rows);

struct EnvParams {
    std::optional<double> compactness;
    std::optional<double> mass_kg;
    std::optional<double> mass_solar;
    std::optional<double> radius_m;
};

// The atom sits at (0, 0, radius). Without any mass input the environment is flat.
// need_radius: a compactness-only environment is rejected because a depends on radius.
GravityEnvironment build_env(const EnvParams& p, bool need_radius);

std::vector<Json> levels_rows(int Z, int n_max, const GravityEnvironment& env);
Json redshift_row(const GravityEnvironment& env);
std::vector<Json> split_rows(int Z, int n, const GravityEnvironment& env, const RunConfig& cfg);

struct CatalogRow {
    int line = 0;
    std::string name;
    double mass_solar = 0.0;
    double radius_m = 0.0;
    int z_atomic = 1;
};

struct CatalogParse {
    std::vector<CatalogRow> rows;
    std::vector<std::string> diagnostics;
    bool header_ok = false;
};

CatalogParse parse_catalog(std::istream& in);

// Rows evaluated concurrently; failures are reported in `diagnostics` and omitted.
std::vector<Json> catalog_rows(const std::vector<CatalogRow>& rows, std::vector<std::string>& diagnostics);

struct VerifyCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// inject_fault scales the expected closed-form energies by 1 + 1e-6.
std::vector<VerifyCheck> run_verify(const RunConfig& cfg, bool inject_fault);

// Full command-line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ugatom::cli
