#include <algorithm>
#include <cmath>
#include <future>
#include <random>

#include "ugatom/atom.hpp"
#include "ugatom/cli.hpp"
#include "ugatom/error.hpp"
#include "ugatom/perturbation.hpp"
#include "ugatom/shooting.hpp"
#include "ugatom/spectra.hpp"
#include "ugatom/tensor.hpp"

namespace ugatom::cli {

namespace {

VerifyCheck check(std::string name, double residual, double tol) {
    return {std::move(name), residual, tol, std::isfinite(residual) && residual <= tol};
}

std::vector<GravityEnvironment> random_envs(unsigned seed, int count, double u_max, double radius) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, u_max);
    std::vector<GravityEnvironment> envs;
    for (int i = 0; i < count; ++i) envs.push_back(GravityEnvironment::from_compactness(dist(rng), {0.0, 0.0, radius}));
    return envs;
}

// one representative state per (n_r, kappa) with n <= n_max
std::vector<QuantumNumbers> levels_up_to(int n_max) {
    std::vector<QuantumNumbers> out;
    for (int n = 1; n <= n_max; ++n) {
        for (int kappa = -n; kappa <= n; ++kappa) {
            const int n_r = n - std::abs(kappa);
            if (kappa == 0 || (kappa > 0 && n_r == 0)) continue;
            out.push_back(QuantumNumbers::make(n_r, kappa, kHalf));
        }
    }
    return out;
}

double oracle_matrix(double c1_fault) {
    std::vector<std::future<double>> jobs;
    for (int Z : {1, 20, 80}) {
        for (double u : {0.0, 0.01}) {
            jobs.push_back(std::async(std::launch::async, [=] {
                const auto env = GravityEnvironment::from_compactness(u, {0.0, 0.0, 1e7});
                double worst = 0.0;
                for (const auto& qn : levels_up_to(3)) {
                    const auto spec = make_ode_spec(Z, qn.kappa(), env);
                    const auto res = shoot(spec, qn.n_r(), closed_form_bracket(qn, Z, env));
                    const double expected = energy(qn, Z, env) * c1_fault;
                    const double binding = env.C1() * binding_energy_flat(qn, Z, env.constants());
                    worst = std::max(worst, std::abs(res.energy - expected) / std::abs(binding));
                }
                return worst;
            }));
        }
    }
    double worst = 0.0;
    for (auto& j : jobs) worst = std::max(worst, j.get());
    return worst;
}

}  // namespace

std::vector<VerifyCheck> run_verify(const RunConfig& cfg, bool inject_fault) {
    std::vector<VerifyCheck> out;
    const auto envs = random_envs(20240601u, 20, 0.4, 1e7);

    double dirac = 0.0;
    double maxwell_t = 0.0;
    double maxwell_s = 0.0;
    for (const auto& env : envs) {
        dirac = std::max(dirac, dirac_reduction_check(env));
        const auto m = maxwell_reduction_check(env, DerivativeMode::analytic);
        maxwell_t = std::max(maxwell_t, m.temporal_residual);
        maxwell_s = std::max(maxwell_s, m.spatial_residual);
    }
    out.push_back(check("dirac_reduction", dirac, 1e-13));
    out.push_back(check("maxwell_reduction_temporal", maxwell_t, 1e-12));
    out.push_back(check("maxwell_reduction_spatial", maxwell_s, 0.0));

    {
        const auto env = GravityEnvironment::from_compactness(0.3, {0.0, 0.0, 1e7});
        const double gm = env.constants().G * env.mass();
        double poisson = 0.0;
        double gauge = 0.0;
        for (const Vec3& r : {Vec3{1.2e7, 3e6, -2e6}, Vec3{0.0, 0.0, 1e7}, Vec3{-4e6, 8e6, 5e6}}) {
            const double d = norm(r);
            poisson = std::max(poisson, std::abs(poisson_residual(env, r, 1e-4 * d)) / (gm / (d * d * d)));
            const double c2 = env.constants().c * env.constants().c;
            gauge = std::max(gauge, harmonic_gauge_residual(env, r, 1e-4 * d) / (gm / (d * d * c2)));
        }
        out.push_back(check("poisson_residual", poisson, 1e-6));
        out.push_back(check("harmonic_gauge_residual", gauge, 1e-6));
    }

    {
        const auto env = GravityEnvironment::from_compactness(1e-3, {0.0, 0.0, 1e5});
        double worst = 0.0;
        const Vec3 r0 = env.r0();
        for (const Vec3& d : {Vec3{3e-11, 2e-11, -1e-11}, Vec3{0.0, 0.0, 5e-10}, Vec3{-2e-9, 1e-9, 4e-9}}) {
            worst = std::max(worst, potential_residual(env, 1, r0 + d, PotentialMode::gradient_exact).relative());
        }
        out.push_back(check("gradient_potential_residual", worst, 1e-10));
    }

    {
        double worst = 0.0;
        const auto levels = levels_up_to(3);
        for (const auto& env : random_envs(7u, 20, 0.3, 1e7)) {
            for (const auto& qn : levels) {
                const double ratio = energy(qn, 1, env) / energy_flat(qn, 1, env.constants());
                worst = std::max(worst, std::abs(ratio - env.C1()) / env.C1());
            }
        }
        out.push_back(check("energy_scaling_c1", worst, 1e-15));
    }

    out.push_back(check("oracle_vs_closed_form", oracle_matrix(inject_fault ? 1.0 + 1e-6 : 1.0), 1e-6));

    {
        double norm_err = 0.0;
        double ortho = 0.0;
        const auto levels = levels_up_to(3);
        for (int Z : {1, 80}) {
            for (double u : {0.0, 0.01}) {
                const auto env = GravityEnvironment::from_compactness(u, {0.0, 0.0, 1e7});
                std::vector<RadialSolution> sols;
                for (const auto& qn : levels) sols.emplace_back(qn, Z, env);
                for (std::size_t i = 0; i < sols.size(); ++i) {
                    norm_err = std::max(norm_err, std::abs(radial_norm(sols[i], cfg.quad) - 1.0));
                    for (std::size_t j = i + 1; j < sols.size(); ++j) {
                        // different kappa is orthogonal through the angular part
                        if (sols[i].qn().kappa() != sols[j].qn().kappa()) continue;
                        const double o =
                            radial_integral(sols[i], RadialComponent::f, sols[j], RadialComponent::f, 0, cfg.quad) +
                            radial_integral(sols[i], RadialComponent::g, sols[j], RadialComponent::g, 0, cfg.quad);
                        ortho = std::max(ortho, std::abs(o));
                    }
                }
            }
        }
        out.push_back(check("normalization", norm_err, 1e-8));
        out.push_back(check("orthogonality", ortho, 1e-8));
    }

    {
        const double u = 0.01;
        const double z = std::max(std::abs(redshift_ug(u).exact - u / (1.0 + u)),
                                  std::abs(redshift_gr(u).exact - u / (1.0 - 0.5 * u)));
        out.push_back(check("redshift_closed_form", z, 1e-15));
    }

    {
        const auto env = GravityEnvironment::from_compactness(1e-3, {0.0, 0.0, 1e5});
        double structure = 0.0;
        for (const auto& b : split_manifold(2, 1, env, cfg.quad)) {
            const double scale = std::abs(b.uniform_shift);
            for (std::size_t i = 0; i < b.matrix.size(); ++i) {
                structure = std::max(structure, std::abs(b.matrix[i][i] - b.uniform_shift) / scale);
            }
            if (b.eigenvalues.size() == 2) {
                structure = std::max(structure,
                                     std::abs(b.eigenvalues[0] + b.eigenvalues[1] - 2.0 * b.uniform_shift) / scale);
            }
        }
        out.push_back(check("perturbation_block_structure", structure, 1e-12));
    }
    return out;
}

}  // namespace ugatom::cli
