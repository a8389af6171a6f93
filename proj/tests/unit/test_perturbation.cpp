#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ugatom/error.hpp"
#include "ugatom/perturbation.hpp"
#include "ugatom/quadrature.hpp"

using namespace ugatom;

namespace {

const auto k = codata_constants();
const auto s2 = QuantumNumbers::make(1, -1, kHalf);
const auto p2 = QuantumNumbers::make(1, 1, kHalf);

// <psi_i | (-e) delta phi | psi_j> on a tensor grid in global coordinates: composite
// Gauss-Legendre in r, Gauss-Legendre x trapezoid on the sphere of the atom frame.
std::complex<double> grid_element(const QuantumNumbers& qi, const QuantumNumbers& qj, int Z,
                                  const GravityEnvironment& env) {
    const DiracState a(qi, Z, env), b(qj, Z, env);
    const AtomFrame f = atom_frame(env);
    const double width = 0.5 / std::min(a.radial().lambda(), b.radial().lambda());
    const auto rule = gauss_legendre(16);
    std::complex<double> total = 0.0;
    for (int panel = 0; panel < 160; ++panel) {
        const double lo = panel * width;
        for (int i = 0; i < 16; ++i) {
            const double r = lo + 0.5 * width * (1.0 + rule.nodes[i]);
            const auto shell = integrate_sphere(
                [&](double t, double p) {
                    const Vec3 local{r * std::sin(t) * std::cos(p), r * std::sin(t) * std::sin(p), r * std::cos(t)};
                    const Vec3 rel = local[0] * f.ex + local[1] * f.ey + local[2] * f.ez;
                    const auto u = a(0.0, rel), v = b(0.0, rel);
                    std::complex<double> s = 0.0;
                    for (int c = 0; c < 4; ++c) s += std::conj(u[c]) * v[c];
                    return -k.e * delta_potential(env, Z, rel) * s;
                },
                24, 12);
            total += 0.5 * width * rule.weights[i] * r * r * shell;
        }
    }
    return total;
}

}  // namespace

TEST_SUITE("perturbation") {

TEST_CASE("delta potential") {
    const auto flat = GravityEnvironment::flat();
    CHECK(delta_potential(flat, 1, {1e-10, 0, 0}) == 0.0);
    const auto env = GravityEnvironment::from_compactness(1e-3, {1e5, 0, 0});
    const Vec3 along = (1e-10 / env.a_norm()) * env.a();
    const double amp = 1.0 * k.e * env.a_norm() / (8.0 * std::numbers::pi * k.eps0 * (1.0 + 2e-3));
    CHECK(delta_potential(env, 1, along) == doctest::Approx(2.0 * amp).epsilon(1e-14));
    CHECK(std::abs(delta_potential(env, 1, -1.0 * along)) <= 1e-15 * amp);
    CHECK_THROWS_AS(delta_potential(env, 1, {0, 0, 0}), SingularPointError);
    CHECK(uniform_shift(env, 1) == doctest::Approx(-k.e * amp).epsilon(1e-14));
}

TEST_CASE("selection rules") {
    const auto env = GravityEnvironment::from_compactness(1e-3, {0, 0, 1e5});
    CHECK(cos_theta_element(s2, s2, 1, env) == 0.0);
    CHECK(cos_theta_element(s2, QuantumNumbers::make(1, 1, -kHalf), 1, env) == 0.0);
    CHECK(matrix_element(s2, s2, 1, env) == uniform_shift(env, 1));
    CHECK(matrix_element(s2, QuantumNumbers::make(1, -1, -kHalf), 1, env) == 0.0);
    // quadrature confirms the zeros between different m
    const auto cross = grid_element(s2, QuantumNumbers::make(1, 1, -kHalf), 1, env);
    CHECK(std::abs(cross) <= 1e-14 * std::abs(uniform_shift(env, 1)));
}

TEST_CASE("hermiticity") {
    const auto env = GravityEnvironment::from_compactness(1e-3, {3e4, -4e4, 1e4});
    const std::vector<QuantumNumbers> states = {s2, p2, QuantumNumbers::make(0, -2, kHalf),
                                                QuantumNumbers::make(1, -2, kHalf), QuantumNumbers::make(2, -1, kHalf)};
    for (const auto& a : states)
        for (const auto& b : states) {
            const auto ab = matrix_element(a, b, 1, env), ba = matrix_element(b, a, 1, env);
            CHECK(std::abs(ab - std::conj(ba)) <= 1e-12 * std::abs(uniform_shift(env, 1)));
        }
}

TEST_CASE("off-diagonal element against a 3D quadrature") {
    const auto env = GravityEnvironment::from_compactness(2e-3, {3e4, -4e4, 1e4});
    const auto lib = matrix_element(s2, p2, 1, env);
    const auto grid = grid_element(s2, p2, 1, env);
    CHECK(std::abs(lib - grid) <= 1e-6 * std::abs(lib));
    const auto diag = grid_element(p2, p2, 1, env);
    CHECK(std::abs(diag - uniform_shift(env, 1)) <= 1e-6 * std::abs(uniform_shift(env, 1)));
}

TEST_CASE("nonrelativistic Stark element") {
    for (double u : {0.0, 1e-2}) {
        const auto env = GravityEnvironment::from_compactness(u, {0, 0, 1e7});
        const double a0 = env.C2() / env.C1() * k.bohr_radius();
        // <2s|z|2p0> = -3 a0 and the 2p1/2, m = 1/2 spinor carries Y10 with weight -1/sqrt(3)
        const double nr = -3.0 * a0 * (-1.0 / std::sqrt(3.0));
        const double dirac = cos_theta_element(s2, p2, 1, env, 1);
        CHECK(std::abs(std::abs(dirac) / std::abs(nr) - 1.0) <= 1e-4);
    }
}

TEST_CASE("n = 1 and n = 2 block structure") {
    const auto env = GravityEnvironment::from_compactness(1e-3, {0, 0, 1e5});
    const double shift = uniform_shift(env, 1);
    const auto b1 = split_manifold(1, 1, env);
    REQUIRE(b1.size() == 2);
    for (const auto& b : b1) {
        REQUIRE(b.eigenvalues.size() == 1);
        CHECK(b.eigenvalues[0] == doctest::Approx(shift).epsilon(1e-12));
    }
    const auto b2 = split_manifold(2, 1, env);
    REQUIRE(b2.size() == 6);
    for (const auto& b : b2) {
        CHECK(b.uniform_shift == shift);
        double sum = 0.0;
        for (double e : b.eigenvalues) sum += e;
        CHECK(std::abs(sum - b.trace()) <= 1e-12 * std::abs(shift) * b.basis.size());
        CHECK(std::abs(b.trace() - shift * b.basis.size()) <= 1e-12 * std::abs(shift) * b.basis.size());
        CHECK_FALSE(b.exceeds_fine_structure_gap);
        if (b.basis.size() == 2) {
            const double v = std::abs(b.matrix[0][1]);
            CHECK(v > 0.0);
            CHECK(std::abs(b.eigenvalues[0] - (shift - v)) <= 1e-12 * std::abs(shift));
            CHECK(std::abs(b.eigenvalues[1] - (shift + v)) <= 1e-12 * std::abs(shift));
            for (int i = 0; i < 2; ++i) CHECK(std::abs(b.matrix[i][i] - shift) <= 1e-12 * std::abs(shift));
        }
    }
}

TEST_CASE("uniform shift common to n = 1 and n = 2") {
    const auto env = GravityEnvironment::from_compactness(1e-3, {0, 0, 1e5});
    const double shift = uniform_shift(env, 1);
    for (int n : {1, 2})
        for (const auto& b : split_manifold(n, 1, env))
            for (std::size_t i = 0; i < b.basis.size(); ++i)
                CHECK(std::abs(b.matrix[i][i].real() - shift) <= 1e-12 * std::abs(shift));
}

TEST_CASE("linearity in the gradient") {
    // u fixed: doubling both M and r0 halves a and leaves C1, C2 alone
    const auto e1 = GravityEnvironment::from_compactness(1e-3, {0, 0, 1e5});
    const auto e2 = GravityEnvironment::from_compactness(1e-3, {0, 0, 2e5});
    const auto v1 = matrix_element(s2, p2, 1, e1);
    const auto v2 = matrix_element(s2, p2, 1, e2);
    CHECK(std::abs(v1 / v2 - 2.0) <= 1e-6);
    // tiny u: doubling M doubles every off-diagonal element
    const double m = 1e22;
    const auto f1 = GravityEnvironment::make(m, {0, 0, 1e3});
    const auto f2 = GravityEnvironment::make(2.0 * m, {0, 0, 1e3});
    CHECK(std::abs(matrix_element(s2, p2, 1, f2) / matrix_element(s2, p2, 1, f1) - 2.0) <= 1e-6);
}

TEST_CASE("flat space gives no shifts") {
    for (const auto& b : split_manifold(2, 1, GravityEnvironment::flat())) {
        CHECK(b.uniform_shift == 0.0);
        for (double e : b.eigenvalues) CHECK(e == 0.0);
    }
}

TEST_CASE("gap warning") {
    // a huge gradient at Z = 1 makes the first-order shift exceed the fine-structure gap
    const auto env = GravityEnvironment::from_compactness(0.3, {0, 0, 1e-6});
    bool any = false;
    for (const auto& b : split_manifold(2, 1, env)) any = any || b.exceeds_fine_structure_gap;
    CHECK(any);
}

TEST_CASE("Jacobi eigen solver") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> d;
    for (int n : {1, 2, 3, 6}) {
        ComplexMatrix a(n, std::vector<std::complex<double>>(n));
        for (int i = 0; i < n; ++i) {
            a[i][i] = d(rng);
            for (int j = i + 1; j < n; ++j) {
                a[i][j] = {d(rng), d(rng)};
                a[j][i] = std::conj(a[i][j]);
            }
        }
        const auto eig = jacobi_eigen(a);
        for (int kk = 0; kk < n; ++kk) {
            for (int i = 0; i < n; ++i) {
                std::complex<double> av = 0.0;
                for (int j = 0; j < n; ++j) av += a[i][j] * eig.vectors[j][kk];
                CHECK(std::abs(av - eig.values[kk] * eig.vectors[i][kk]) <= 1e-12);
            }
            if (kk > 0) CHECK(eig.values[kk] >= eig.values[kk - 1]);
        }
    }
    ComplexMatrix bad = {{1.0, {0.0, 1.0}}, {{0.0, 1.0}, 1.0}};
    CHECK_THROWS_AS(jacobi_eigen(bad), DomainError);
}

}
