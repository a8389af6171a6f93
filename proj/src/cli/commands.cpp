#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "ugatom/atom.hpp"
#include "ugatom/cli.hpp"
#include "ugatom/error.hpp"
#include "ugatom/perturbation.hpp"
#include "ugatom/physcon.hpp"
#include "ugatom/spectra.hpp"

namespace ugatom::cli {

GravityEnvironment build_env(const EnvParams& p, bool need_radius) {
    const int mass_inputs = int(p.compactness.has_value()) + int(p.mass_kg.has_value()) + int(p.mass_solar.has_value());
    if (mass_inputs > 1) throw UsageError("give only one of --compactness, --mass, --mass-solar");
    if (p.radius_m && !(*p.radius_m > 0.0)) throw DomainError("--radius must be positive");

    if (p.compactness) {
        if (!(*p.compactness >= 0.0)) throw DomainError("--compactness must be >= 0");
        if (need_radius && !p.radius_m && *p.compactness > 0.0) {
            throw UsageError("--compactness needs --radius here: the gradient depends on the distance");
        }
        return GravityEnvironment::from_compactness(*p.compactness, {0.0, 0.0, p.radius_m.value_or(1.0)});
    }
    std::optional<double> mass;
    if (p.mass_kg) mass = *p.mass_kg;
    if (p.mass_solar) mass = *p.mass_solar * kSolarMass;
    if (!mass) return GravityEnvironment::flat();
    if (*mass < 0.0) throw DomainError("mass must be >= 0");
    if (*mass == 0.0 && !p.radius_m) return GravityEnvironment::flat();
    if (!p.radius_m) throw UsageError("--radius is required with a nonzero mass");
    return GravityEnvironment::make(*mass, {0.0, 0.0, *p.radius_m});
}

std::vector<Json> levels_rows(int Z, int n_max, const GravityEnvironment& env) {
    if (Z < 1) throw DomainError("--z must be >= 1");
    if (n_max < 1 || n_max > 10) throw DomainError("--n-max must be in 1..10");
    const auto& k = env.constants();
    const double rest = k.electron_rest_energy();
    // E - m c^2 = C1 (E0 - m c^2) + (C1 - 1) m c^2 with C1 - 1 = -u C2
    const double c1_minus_1 = -env.compactness() * env.C2();

    struct Level {
        QuantumNumbers qn;
        int degeneracy;
        double e;
    };
    std::vector<Level> levels;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& g : manifold(n, Z, env)) {
            for (int sign : {-1, 1}) {
                const int kappa = sign * g.abs_kappa;
                auto it = std::find_if(g.states.begin(), g.states.end(),
                                       [&](const QuantumNumbers& q) { return q.kappa() == kappa; });
                if (it == g.states.end()) continue;
                levels.push_back({*it, 2 * g.abs_kappa, g.energy});
            }
        }
    }
    std::stable_sort(levels.begin(), levels.end(), [](const Level& a, const Level& b) { return a.e < b.e; });

    std::vector<Json> rows;
    for (const auto& lv : levels) {
        const double b0 = binding_energy_flat(lv.qn, Z, k);
        Json r;
        r["label"] = lv.qn.label();
        r["n"] = lv.qn.n();
        r["n_r"] = lv.qn.n_r();
        r["kappa"] = lv.qn.kappa();
        r["l"] = lv.qn.l_upper();
        r["j"] = lv.qn.j().str();
        r["degeneracy"] = lv.degeneracy;
        r["E0_eV"] = joule_to_ev(energy_flat(lv.qn, Z, k), k);
        r["E_eV"] = joule_to_ev(energy(lv.qn, Z, env), k);
        r["binding_eV"] = joule_to_ev(env.C1() * b0 + c1_minus_1 * rest, k);
        rows.push_back(std::move(r));
    }
    return rows;
}

Json redshift_row(const GravityEnvironment& env) {
    const RedshiftReport rep = redshift_report(env);
    Json r;
    r["u"] = rep.u;
    r["z_ug_exact"] = rep.z_ug_exact;
    r["z_ug_series2"] = rep.z_ug_series2;
    r["z_gr_exact"] = rep.z_gr_exact;
    r["z_gr_series2"] = rep.z_gr_series2;
    r["delta_z"] = rep.delta_z;
    return r;
}

std::vector<Json> split_rows(int Z, int n, const GravityEnvironment& env, const RunConfig& cfg) {
    if (Z < 1) throw DomainError("--z must be >= 1");
    if (n < 1 || n > 10) throw DomainError("--n must be in 1..10");
    const auto& k = env.constants();
    const auto blocks = split_manifold(n, Z, env, cfg.quad);
    std::vector<Json> rows;
    for (const auto& b : blocks) {
        std::string level;
        Json basis = Json::array();
        for (const auto& q : b.basis) {
            level += (level.empty() ? "" : "+") + q.label();
            basis.push_back(q.label() + "(m=" + q.m().str() + ")");
        }
        const double shift_ev = joule_to_ev(b.uniform_shift, k);
        if (cfg.format == OutputFormat::csv) {
            for (std::size_t i = 0; i < b.eigenvalues.size(); ++i) {
                Json mixing = Json::array();
                for (std::size_t a = 0; a < b.basis.size(); ++a) {
                    mixing.push_back(b.eigenvectors[a][i].real());
                    mixing.push_back(b.eigenvectors[a][i].imag());
                }
                Json r;
                r["level"] = level;
                r["m"] = b.m.str();
                r["index"] = i;
                r["uniform_shift_eV"] = shift_ev;
                r["shift_eV"] = joule_to_ev(b.eigenvalues[i] - b.uniform_shift, k);
                r["total_eV"] = joule_to_ev(b.unperturbed_energy + b.eigenvalues[i], k);
                r["mixing_re_im"] = mixing;
                r["exceeds_fine_structure_gap"] = b.exceeds_fine_structure_gap;
                rows.push_back(std::move(r));
            }
            continue;
        }
        Json shifts = Json::array();
        Json totals = Json::array();
        Json mixing = Json::array();
        for (std::size_t i = 0; i < b.eigenvalues.size(); ++i) {
            shifts.push_back(joule_to_ev(b.eigenvalues[i] - b.uniform_shift, k));
            totals.push_back(joule_to_ev(b.unperturbed_energy + b.eigenvalues[i], k));
            Json vec = Json::array();
            for (std::size_t a = 0; a < b.basis.size(); ++a) {
                vec.push_back(Json::array({b.eigenvectors[a][i].real(), b.eigenvectors[a][i].imag()}));
            }
            mixing.push_back(std::move(vec));
        }
        Json r;
        r["level"] = level;
        r["m"] = b.m.str();
        r["basis"] = basis;
        r["unperturbed_eV"] = joule_to_ev(b.unperturbed_energy, k);
        r["uniform_shift_eV"] = shift_ev;
        r["shift_eV"] = shifts;
        r["total_eV"] = totals;
        r["mixing_re_im"] = mixing;
        r["exceeds_fine_structure_gap"] = b.exceeds_fine_structure_gap;
        rows.push_back(std::move(r));
    }
    return rows;
}

namespace {

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void add_env_options(CLI::App* cmd, EnvParams& p) {
    auto* u = cmd->add_option("--compactness", p.compactness, "GM/(r c^2) at the atom");
    auto* m = cmd->add_option("--mass", p.mass_kg, "central mass in kg");
    auto* ms = cmd->add_option("--mass-solar", p.mass_solar, "central mass in solar masses");
    cmd->add_option("--radius", p.radius_m, "distance of the atom from the mass centre in m");
    u->excludes(m)->excludes(ms);
    m->excludes(ms);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hydrogen-like atoms in a static gravitational field", "ugatom"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    int verbosity = 0;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_flag("-v,--verbose", verbosity, "diagnostics on stderr");

    EnvParams levels_env;
    int levels_z = 1;
    int n_max = 2;
    auto* levels = app.add_subcommand("levels", "energy levels up to n-max");
    levels->add_option("--z", levels_z, "nuclear charge")->capture_default_str();
    levels->add_option("--n-max", n_max, "largest principal number (<= 10)")->capture_default_str();
    add_env_options(levels, levels_env);

    EnvParams redshift_env;
    auto* redshift = app.add_subcommand("redshift", "gravitational redshift in both theories");
    add_env_options(redshift, redshift_env);

    std::string catalog_path;
    auto* catalog = app.add_subcommand("catalog", "redshift for each row of a CSV catalog");
    catalog->add_option("path", catalog_path, "CSV with header name,mass_solar,radius_m[,z_atomic]")->required();

    EnvParams split_env;
    int split_z = 1;
    int split_n = 2;
    auto* split = app.add_subcommand("split", "first-order splitting of the n manifold by the field gradient");
    split->add_option("--z", split_z, "nuclear charge")->capture_default_str();
    split->add_option("--n", split_n, "principal number")->capture_default_str();
    add_env_options(split, split_env);

    bool verify_json = false;
    bool inject_fault = false;
    auto* verify = app.add_subcommand("verify", "run the internal consistency checks");
    verify->add_flag("--json", verify_json, "machine-readable check list");
    verify->add_flag("--inject-fault", inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        RunConfig cfg = default_config();
        cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
        cfg.verbosity = verbosity;
        int code = kOk;

        if (*levels) {
            out << render(cfg, levels_rows(levels_z, n_max, build_env(levels_env, false)));
        } else if (*redshift) {
            out << render(cfg, {redshift_row(build_env(redshift_env, false))});
        } else if (*split) {
            out << render(cfg, split_rows(split_z, split_n, build_env(split_env, true), cfg));
        } else if (*catalog) {
            std::ifstream in(catalog_path);
            if (!in) {
                err << "ugatom: cannot open catalog '" << catalog_path << "'\n";
                return kInputData;
            }
            CatalogParse parsed = parse_catalog(in);
            if (!parsed.header_ok) {
                for (const auto& d : parsed.diagnostics) err << "ugatom: " << d << "\n";
                return kInputData;
            }
            if (parsed.rows.empty() && parsed.diagnostics.empty()) {
                err << "ugatom: catalog is empty\n";
                return kInputData;
            }
            auto rows = catalog_rows(parsed.rows, parsed.diagnostics);
            for (const auto& d : parsed.diagnostics) err << "ugatom: " << d << "\n";
            if (rows.empty()) {
                err << "ugatom: no catalog row could be processed\n";
                return kInputData;
            }
            out << render(cfg, rows);
        } else if (*verify) {
            const auto checks = run_verify(cfg, inject_fault);
            bool all = true;
            for (const auto& c : checks) all = all && c.pass;
            if (verify_json) {
                std::vector<Json> rows;
                for (const auto& c : checks) {
                    Json r;
                    r["name"] = c.name;
                    r["residual"] = c.residual;
                    r["tolerance"] = c.tolerance;
                    r["pass"] = c.pass;
                    rows.push_back(std::move(r));
                }
                RunConfig jcfg = cfg;
                jcfg.format = OutputFormat::json;
                out << render(jcfg, rows);
            } else {
                std::size_t passed = 0;
                for (const auto& c : checks) {
                    passed += c.pass;
                    out << (c.pass ? "PASS " : "FAIL ") << c.name << " residual=" << short_number(c.residual)
                        << " tol=" << short_number(c.tolerance) << "\n";
                }
                out << passed << "/" << checks.size() << " checks passed\n";
            }
            if (!all) {
                for (const auto& c : checks) {
                    if (!c.pass) err << "ugatom: check failed: " << c.name << "\n";
                }
                code = kNumeric;
            }
        }
        if (verbosity > 0) {
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            err << "ugatom: done in " << secs << " s\n";
        }
        return code;
    } catch (const UsageError& e) {
        err << "ugatom: usage: " << e.what() << "\n";
        return kUsage;
    } catch (const SupercriticalChargeError& e) {
        err << "ugatom: " << e.what() << "\n";
        return kInputData;
    } catch (const DomainError& e) {
        err << "ugatom: invalid input: " << e.what() << "\n";
        return kInputData;
    } catch (const Error& e) {
        err << "ugatom: numeric failure: " << e.what() << "\n";
        return kNumeric;
    }
}

}  // namespace ugatom::cli
