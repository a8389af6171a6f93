#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ugatom/atom.hpp"
#include "ugatom/error.hpp"
#include "ugatom/quadrature.hpp"

using namespace ugatom;

namespace {

const auto k = codata_constants();
const HalfInt h32 = HalfInt::from_twice(3);

std::vector<QuantumNumbers> levels(int n_max) {
    std::vector<QuantumNumbers> out;
    for (int n = 1; n <= n_max; ++n)
        for (int kappa = -n; kappa <= n; ++kappa) {
            const int n_r = n - std::abs(kappa);
            if (kappa != 0 && !(kappa > 0 && n_r == 0)) out.push_back(QuantumNumbers::make(n_r, kappa, kHalf));
        }
    return out;
}

}  // namespace

TEST_SUITE("atom") {

TEST_CASE("quantum numbers") {
    const auto s = QuantumNumbers::make(0, -1, kHalf);
    CHECK(s.n() == 1);
    CHECK(s.j() == kHalf);
    CHECK(s.label() == "1s1/2");
    const auto d = QuantumNumbers::make(1, -2, -h32);
    CHECK(d.n() == 3);
    CHECK(d.j() == h32);
    CHECK(d.l_upper() == 1);
    CHECK(d.l_lower() == 2);
    const auto p = QuantumNumbers::make(1, 1, kHalf);
    CHECK(p.l_upper() == 1);
    CHECK(p.l_lower() == 0);
    CHECK(p.label() == "2p1/2");
    CHECK_THROWS_AS(QuantumNumbers::make(0, 1, kHalf), InvalidStateError);
    CHECK_THROWS_AS(QuantumNumbers::make(0, 0, kHalf), InvalidStateError);
    CHECK_THROWS_AS(QuantumNumbers::make(-1, -1, kHalf), InvalidStateError);
    CHECK_THROWS_AS(QuantumNumbers::make(0, -1, h32), InvalidStateError);
}

TEST_CASE("flat energies") {
    const auto s = QuantumNumbers::make(0, -1, kHalf);
    const double rest = k.electron_rest_energy();
    CHECK(energy_flat(s, 0) == rest);
    CHECK(energy_flat(s, 1) == doctest::Approx(rest * std::sqrt(1.0 - k.alpha_e * k.alpha_e)).epsilon(1e-15));
    // independent high-precision value of the 1s binding energy
    CHECK(joule_to_ev(binding_energy_flat(s, 1)) == doctest::Approx(-13.605874258).epsilon(1e-9));
    CHECK(energy_flat(QuantumNumbers::make(1, -1, kHalf), 1) == energy_flat(QuantumNumbers::make(1, 1, kHalf), 1));
    CHECK_THROWS_AS(energy_flat(s, 138), SupercriticalChargeError);
}

TEST_CASE("nonrelativistic limit") {
    const double rest = k.electron_rest_energy();
    for (const auto& q : levels(3)) {
        const double bohr = -k.alpha_e * k.alpha_e * rest / (2.0 * q.n() * q.n());
        CHECK(std::abs(binding_energy_flat(q, 1) / bohr - 1.0) <= 2e-4);
    }
}

TEST_CASE("gravitational scaling") {
    const auto flat = GravityEnvironment::make(0.0, {0, 0, 1e7});
    const auto env = GravityEnvironment::from_compactness(0.01, {0, 0, 1e7});
    for (const auto& q : levels(3)) {
        CHECK(energy(q, 1, flat) == energy_flat(q, 1));
        CHECK(energy(q, 7, env) / energy_flat(q, 7) == doctest::Approx(1.01 / 1.02).epsilon(1e-15));
    }
}

TEST_CASE("radial normalisation and ground-state ratio") {
    for (double u : {0.0, 0.01, 0.25}) {
        const auto env = GravityEnvironment::from_compactness(u, {0, 0, 1e7});
        for (int Z : {1, 47, 92}) {
            for (const auto& q : levels(3)) CHECK(std::abs(radial_norm(RadialSolution(q, Z, env)) - 1.0) <= 1e-10);
        }
    }
    const auto flat = GravityEnvironment::flat();
    const RadialSolution s(QuantumNumbers::make(0, -1, kHalf), 60, flat);
    const double g = s.gamma_aux();
    for (double r : {1e-14, 1e-12, 5e-12}) {
        const auto v = s.fg(r);
        CHECK(v.g / v.f == doctest::Approx(-std::sqrt((1.0 - g) / (1.0 + g))).epsilon(1e-13));
    }
}

TEST_CASE("hydrogen 1s against the Schrodinger function") {
    for (double u : {0.0, 0.02}) {
        const auto env = GravityEnvironment::from_compactness(u, {0, 0, 1e7});
        const double a0 = env.C2() / env.C1() * k.bohr_radius();
        const RadialSolution s(QuantumNumbers::make(0, -1, kHalf), 1, env);
        for (double x : {0.1, 1.0, 3.0, 8.0}) {
            const double r = x * a0;
            const double schr = 2.0 * std::pow(a0, -1.5) * std::exp(-r / a0);
            CHECK(std::abs(s.f(r) / schr - 1.0) <= 1e-3);
        }
    }
}

TEST_CASE("radial orthogonality within a kappa channel") {
    const auto env = GravityEnvironment::from_compactness(0.01, {0, 0, 1e7});
    for (int kappa : {-1, 1, -2}) {
        const int n0 = kappa > 0 ? 1 : 0;
        const RadialSolution a(QuantumNumbers::make(n0, kappa, kHalf), 5, env);
        const RadialSolution b(QuantumNumbers::make(n0 + 1, kappa, kHalf), 5, env);
        const double o = radial_integral(a, RadialComponent::f, b, RadialComponent::f) +
                         radial_integral(a, RadialComponent::g, b, RadialComponent::g);
        CHECK(std::abs(o) <= 1e-10);
    }
}

TEST_CASE("eigenstate structure") {
    const auto env = GravityEnvironment::from_compactness(0.01, {2e6, -1e6, 9e6});
    const auto s = QuantumNumbers::make(0, -1, kHalf);
    const DiracState psi(s, 1, env);
    const Vec3 p{3e-11, 1e-11, -2e-11};
    const auto a = psi(0.0, p);
    const auto b = psi(1.3e-16, p);
    CHECK(std::abs(a[1]) == 0.0);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(a[i]) == doctest::Approx(std::abs(b[i])).epsilon(1e-14));
    CHECK_THROWS_AS(psi(0.0, {0, 0, 0}), SingularPointError);
    const auto c = eigenstate_eval(s, 1, env, 0.0, p);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(c[i] - a[i]) == 0.0);
}

TEST_CASE("three-dimensional normalisation") {
    const auto env = GravityEnvironment::from_compactness(0.01, {0, 0, 1e7});
    for (const auto& q : {QuantumNumbers::make(0, -1, kHalf), QuantumNumbers::make(1, 1, -kHalf),
                          QuantumNumbers::make(0, -2, h32)}) {
        const DiracState psi(q, 3, env);
        const double lam = psi.radial().lambda();
        auto shell = [&](double r) {
            return r * r * integrate_sphere(
                               [&](double t, double p) {
                                   const auto v = psi.at_spherical(0.0, r, t, p);
                                   return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3]);
                               },
                               16, 8);
        };
        const auto rule = gauss_legendre(24);
        double total = 0.0;
        const double width = 1.0 / lam;
        for (int panel = 0; panel < 80; ++panel) {
            const double lo = panel * width, hi = lo + width;
            for (int i = 0; i < 24; ++i) {
                const double r = 0.5 * (lo + hi) + 0.5 * (hi - lo) * rule.nodes[i];
                total += 0.5 * (hi - lo) * rule.weights[i] * shell(r);
            }
        }
        CHECK(std::abs(total - 1.0) <= 1e-6);
    }
}

TEST_CASE("manifold grouping") {
    const auto flat = GravityEnvironment::flat();
    auto m1 = manifold(1, 1, flat);
    REQUIRE(m1.size() == 1);
    CHECK(m1[0].states.size() == 2);
    auto m2 = manifold(2, 1, flat);
    REQUIRE(m2.size() == 2);
    CHECK(m2[0].states.size() == 4);
    CHECK(m2[1].states.size() == 4);
    CHECK(m2[0].abs_kappa == 1);
    CHECK(m2[0].energy < m2[1].energy);
    CHECK(manifold(3, 1, flat).size() == 3);
    // high n at Z = 1: distinct j stay separate even though they are close
    CHECK(manifold(10, 1, flat).size() == 10);
    CHECK_THROWS_AS(manifold(0, 1, flat), DomainError);
}

}
