#include "ugatom/gravity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ugatom/error.hpp"
#include "ugatom/tensor.hpp"

namespace ugatom {

GravityEnvironment::GravityEnvironment(double mass, const Vec3& r0, double u, const PhysicalConstants& k)
    : mass_(mass), r0_(r0), distance_(norm(r0)), u_(u), k_(k) {
    const double c2 = k.c * k.c;
    phi0_ = -u * c2;
    // Phi0/c^2 = -u
    c1_ = (1.0 + u) / (1.0 + 2.0 * u);
    c2_ = 1.0 / (1.0 + 2.0 * u);
    const double scale = 2.0 * u / (distance_ * distance_ * (1.0 + 2.0 * u));
    a_ = scale * r0;
}

GravityEnvironment GravityEnvironment::make(double mass_kg, const Vec3& r0_m, const PhysicalConstants& k) {
    if (!(mass_kg >= 0.0)) throw DomainError("gravity environment: mass must be non-negative");
    const double d = norm(r0_m);
    if (!(d > 0.0)) throw DomainError("gravity environment: atom position must be away from the mass centre");
    const double u = k.G * mass_kg / (d * k.c * k.c);
    return GravityEnvironment(mass_kg, r0_m, u, k);
}

GravityEnvironment GravityEnvironment::from_compactness(double u, const Vec3& r0_m, const PhysicalConstants& k) {
    if (!(u >= 0.0) || !std::isfinite(u)) throw DomainError("gravity environment: compactness must be >= 0");
    const double d = norm(r0_m);
    if (!(d > 0.0)) throw DomainError("gravity environment: atom position must be away from the mass centre");
    const double mass = u * d * k.c * k.c / k.G;
    return GravityEnvironment(mass, r0_m, u, k);
}

GravityEnvironment GravityEnvironment::flat(const PhysicalConstants& k) {
    return GravityEnvironment(0.0, {0.0, 0.0, 1.0}, 0.0, k);
}

AtomFrame atom_frame(const GravityEnvironment& env) {
    const double an = env.a_norm();
    if (an == 0.0) return {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    const Vec3 ez = (1.0 / an) * env.a();
    // seed x with the global axis least aligned with ez
    Vec3 seed{0.0, 0.0, 0.0};
    int axis = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(ez[i]) < std::abs(ez[axis])) axis = i;
    }
    seed[axis] = 1.0;
    Vec3 ex = seed - dot(seed, ez) * ez;
    ex = (1.0 / norm(ex)) * ex;
    return {ex, cross(ez, ex), ez};
}

double potential_at(const GravityEnvironment& env, const Vec3& r) {
    const double d = norm(r);
    if (!(d > 0.0)) throw SingularPointError("potential_at: r = 0 is the point mass");
    return -env.constants().G * env.mass() / d;
}

GaugeField gauge_field_at(const GravityEnvironment& env, const Vec3& r) {
    const double h = potential_at(env, r) / (env.constants().c * env.constants().c);
    GaugeField out;
    for (int i = 0; i < 4; ++i) out.components[i][i] = h;
    return out;
}

double poisson_residual(const GravityEnvironment& env, const Vec3& r, double h) {
    const double centre = potential_at(env, r);
    double lap = 0.0;
    for (int i = 0; i < 3; ++i) {
        Vec3 up = r;
        Vec3 dn = r;
        up[i] += h;
        dn[i] -= h;
        lap += potential_at(env, up) - 2.0 * centre + potential_at(env, dn);
    }
    return lap / (h * h);
}

double harmonic_gauge_residual(const GravityEnvironment& env, const Vec3& r, double h) {
    // d_rho H_{mu nu}; the field is static so rho = 0 contributes nothing
    std::array<GaugeField, 4> grad{};
    for (int i = 0; i < 3; ++i) {
        Vec3 up = r;
        Vec3 dn = r;
        up[i] += h;
        dn[i] -= h;
        const GaugeField hu = gauge_field_at(env, up);
        const GaugeField hd = gauge_field_at(env, dn);
        for (int mu = 0; mu < 4; ++mu) {
            for (int nu = 0; nu < 4; ++nu) {
                grad[i + 1].components[mu][nu] = (hu.components[mu][nu] - hd.components[mu][nu]) / (2.0 * h);
            }
        }
    }
    double worst = 0.0;
    for (int sigma = 0; sigma < 4; ++sigma) {
        double sum = 0.0;
        for (int rho = 0; rho < 4; ++rho) {
            for (int mu = 0; mu < 4; ++mu) {
                for (int nu = 0; nu < 4; ++nu) {
                    sum += p4(mu, nu, rho, sigma) * grad[rho].components[mu][nu];
                }
            }
        }
        worst = std::max(worst, std::abs(sum));
    }
    return worst;
}

namespace {

struct Geometry {
    Vec3 d;
    double rho;
};

Geometry relative_position(const GravityEnvironment& env, const Vec3& r, const char* who) {
    const Vec3 d = r - env.r0();
    const double rho = norm(d);
    if (!(rho > 0.0)) throw SingularPointError(std::string(who) + ": r coincides with the nucleus");
    return {d, rho};
}

double coulomb_prefactor(const GravityEnvironment& env, int Z, PotentialMode mode) {
    if (Z < 1) throw DomainError("nucleus potential: Z must be >= 1");
    const auto& k = env.constants();
    const double flat = Z * k.e / (4.0 * std::numbers::pi * k.eps0);
    return mode == PotentialMode::flat ? flat : flat * env.C2();
}

}  // namespace

double nucleus_potential(const GravityEnvironment& env, int Z, const Vec3& r, PotentialMode mode) {
    const auto [d, rho] = relative_position(env, r, "nucleus_potential");
    const double K = coulomb_prefactor(env, Z, mode);
    const Vec3& a = env.a();
    switch (mode) {
        case PotentialMode::flat:
        case PotentialMode::uniform:
            return K / rho;
        case PotentialMode::gradient_linear:
            return K / rho + 0.5 * K * (dot(a, d) + env.a_norm() * rho) / rho;
        case PotentialMode::gradient_exact:
            return K * std::exp(0.5 * dot(a, d) + 0.5 * env.a_norm() * rho) / rho;
    }
    return 0.0;
}

Vec3 nucleus_potential_gradient(const GravityEnvironment& env, int Z, const Vec3& r, PotentialMode mode) {
    const auto [d, rho] = relative_position(env, r, "nucleus_potential_gradient");
    const double K = coulomb_prefactor(env, Z, mode);
    const Vec3& a = env.a();
    const double an = env.a_norm();
    const double rho3 = rho * rho * rho;
    const Vec3 grad_inv = (-1.0 / rho3) * d;  // grad(1/rho)
    switch (mode) {
        case PotentialMode::flat:
        case PotentialMode::uniform:
            return K * grad_inv;
        case PotentialMode::gradient_linear: {
            const Vec3 grad_adr = (1.0 / rho) * a - (dot(a, d) / rho3) * d;
            return K * grad_inv + (0.5 * K) * grad_adr;
        }
        case PotentialMode::gradient_exact: {
            const double s = 0.5 * dot(a, d) + 0.5 * an * rho;
            const Vec3 grad_s = 0.5 * a + (0.5 * an / rho) * d;
            const double es = K * std::exp(s);
            return es * ((1.0 / rho) * grad_s + grad_inv);
        }
    }
    return {};
}

PotentialResidual potential_residual(const GravityEnvironment& env, int Z, const Vec3& r, PotentialMode mode) {
    const auto [d, rho] = relative_position(env, r, "potential_residual");
    const double K = coulomb_prefactor(env, Z, mode);
    const Vec3& a = env.a();
    const double an = env.a_norm();
    const double rho3 = rho * rho * rho;
    const Vec3 grad = nucleus_potential_gradient(env, Z, r, mode);
    const double a_grad = dot(a, grad);
    const double a_grad_scale = an * norm(grad);

    switch (mode) {
        case PotentialMode::flat:
        case PotentialMode::uniform:
            // 1/rho is harmonic away from the source
            return {-a_grad, a_grad_scale};
        case PotentialMode::gradient_linear: {
            // lap = -K a.d / rho^3 cancels against a.grad except for the quadratic piece,
            // which is written out directly to keep it above roundoff
            const double lap = -K * dot(a, d) / rho3;
            const double ad = dot(a, d);
            const double rest = -0.5 * K * (an * an * rho * rho - ad * ad) / rho3;
            return {rest, std::abs(lap) + a_grad_scale};
        }
        case PotentialMode::gradient_exact: {
            // phi = K e^s g with g = 1/rho:
            // lap(phi) = K e^s [g (|grad s|^2 + lap s) + 2 grad s . grad g]
            const double g = 1.0 / rho;
            const double es = K * std::exp(0.5 * dot(a, d) + 0.5 * an * rho);
            const Vec3 grad_s = 0.5 * a + (0.5 * an / rho) * d;
            const Vec3 grad_g = (-1.0 / rho3) * d;
            const double lap_s = an / rho;
            const double t1 = g * dot(grad_s, grad_s);
            const double t2 = g * lap_s;
            const double t3 = 2.0 * dot(grad_s, grad_g);
            const double lap = es * (t1 + t2 + t3);
            const double scale = es * (std::abs(t1) + std::abs(t2) + std::abs(t3)) + a_grad_scale;
            return {lap - a_grad, scale};
        }
    }
    return {};
}

}  // namespace ugatom
