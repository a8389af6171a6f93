#include "ugatom/perturbation.hpp"

#include <cmath>
#include <algorithm>
#include <future>
#include <limits>
#include <numbers>

#include "ugatom/error.hpp"
#include "ugatom/specfun.hpp"

namespace ugatom {

namespace {

// <Y_{l,mu} | cos(theta) | Y_{lp,mu}>
double ylm_cos(int l, int lp, int mu) {
    if (std::abs(mu) > l || std::abs(mu) > lp) return 0.0;
    if (lp == l + 1) {
        return std::sqrt(double((l + 1) * (l + 1) - mu * mu) / double((2 * l + 1) * (2 * l + 3)));
    }
    if (lp == l - 1) {
        return std::sqrt(double(l * l - mu * mu) / double((2 * l - 1) * (2 * l + 1)));
    }
    return 0.0;
}

}  // namespace

double delta_potential_amplitude(const GravityEnvironment& env, int Z) {
    const auto& k = env.constants();
    return Z * k.e * env.a_norm() * env.C2() / (8.0 * std::numbers::pi * k.eps0);
}

double delta_potential(const GravityEnvironment& env, int Z, const Vec3& r_rel) {
    const double r = norm(r_rel);
    if (!(r > 0.0)) throw SingularPointError("delta_potential: angle undefined at the nucleus");
    const double an = env.a_norm();
    if (an == 0.0) return 0.0;
    const double cos_t = dot(env.a(), r_rel) / (an * r);
    return delta_potential_amplitude(env, Z) * (cos_t + 1.0);
}

double uniform_shift(const GravityEnvironment& env, int Z) {
    return -env.constants().e * delta_potential_amplitude(env, Z);
}

double angular_cos_element(HalfInt j, int l, HalfInt m, HalfInt jp, int lp, HalfInt mp) {
    if (m != mp) return 0.0;
    if (std::abs(l - lp) != 1) return 0.0;
    double sum = 0.0;
    for (HalfInt q : {kHalf, -kHalf}) {
        const HalfInt mu = m - q;
        const int imu = mu.twice() / 2;
        if (std::abs(imu) > l || std::abs(imu) > lp) continue;
        sum += clebsch_gordan(l, mu, q, j, m) * clebsch_gordan(lp, mu, q, jp, m) * ylm_cos(l, lp, imu);
    }
    return sum;
}

double cos_theta_element(const QuantumNumbers& qi, const QuantumNumbers& qj, int Z, const GravityEnvironment& env,
                         int power, const QuadratureSpec& spec) {
    const double ang_f = angular_cos_element(qi.j(), qi.l_upper(), qi.m(), qj.j(), qj.l_upper(), qj.m());
    const double ang_g = angular_cos_element(qi.j(), qi.l_lower(), qi.m(), qj.j(), qj.l_lower(), qj.m());
    if (ang_f == 0.0 && ang_g == 0.0) return 0.0;
    const RadialSolution a(qi, Z, env);
    const RadialSolution b(qj, Z, env);
    double out = 0.0;
    if (ang_f != 0.0) out += ang_f * radial_integral(a, RadialComponent::f, b, RadialComponent::f, power, spec);
    if (ang_g != 0.0) out += ang_g * radial_integral(a, RadialComponent::g, b, RadialComponent::g, power, spec);
    return out;
}

std::complex<double> matrix_element(const QuantumNumbers& qi, const QuantumNumbers& qj, int Z,
                                    const GravityEnvironment& env, const QuadratureSpec& spec) {
    const double shift = uniform_shift(env, Z);
    if (shift == 0.0) return 0.0;
    const double overlap = qi == qj ? 1.0 : 0.0;
    return shift * (overlap + cos_theta_element(qi, qj, Z, env, 0, spec));
}

double PerturbationBlock::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < matrix.size(); ++i) t += matrix[i][i].real();
    return t;
}

std::vector<PerturbationBlock> split_manifold(int n, int Z, const GravityEnvironment& env,
                                              const QuadratureSpec& spec) {
    const auto groups = manifold(n, Z, env);

    struct Job {
        std::size_t group;
        HalfInt m;
    };
    std::vector<Job> jobs;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::vector<HalfInt> ms;
        for (const auto& s : groups[g].states) {
            if (std::find(ms.begin(), ms.end(), s.m()) == ms.end()) ms.push_back(s.m());
        }
        std::sort(ms.begin(), ms.end());
        for (HalfInt m : ms) jobs.push_back({g, m});
    }

    const double shift = uniform_shift(env, Z);
    auto build = [&](const Job& job) {
        const EnergyGroup& group = groups[job.group];
        PerturbationBlock block;
        block.n_r = group.n_r;
        block.abs_kappa = group.abs_kappa;
        block.m = job.m;
        block.unperturbed_energy = group.energy;
        block.uniform_shift = shift;
        for (const auto& s : group.states) {
            if (s.m() == job.m) block.basis.push_back(s);
        }
        const std::size_t size = block.basis.size();
        block.matrix.assign(size, std::vector<std::complex<double>>(size));
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = i; j < size; ++j) {
                const auto v = matrix_element(block.basis[i], block.basis[j], Z, env, spec);
                block.matrix[i][j] = v;
                block.matrix[j][i] = std::conj(v);
            }
        }
        auto eig = jacobi_eigen(block.matrix);
        block.eigenvalues = std::move(eig.values);
        block.eigenvectors = std::move(eig.vectors);

        double gap = std::numeric_limits<double>::infinity();
        for (std::size_t g = 0; g < groups.size(); ++g) {
            if (g != job.group) gap = std::min(gap, std::abs(groups[g].energy - group.energy));
        }
        double spread = 0.0;
        for (double e : block.eigenvalues) spread = std::max(spread, std::abs(e - shift));
        block.exceeds_fine_structure_gap = 2.0 * spread > gap;
        return block;
    };

    std::vector<std::future<PerturbationBlock>> futures;
    futures.reserve(jobs.size());
    for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, build, job));
    std::vector<PerturbationBlock> out;
    out.reserve(jobs.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace ugatom
