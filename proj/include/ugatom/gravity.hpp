#pragma once

#include <array>

#include "ugatom/physcon.hpp"
#include "ugatom/vec3.hpp"

namespace ugatom {

// Static gravitational surroundings of an atom at r0 relative to a point mass M.
// Immutable once built; all derived quantities are fixed at construction.
class GravityEnvironment {
public:
    // Throws DomainError if M < 0 or |r0| = 0.
    static GravityEnvironment make(double mass_kg, const Vec3& r0_m,
                                   const PhysicalConstants& k = codata_constants());

    // Mass chosen so that GM/(|r0| c^2) = u. Needs u >= 0 and |r0| > 0.
    static GravityEnvironment from_compactness(double u, const Vec3& r0_m,
                                               const PhysicalConstants& k = codata_constants());

    // Zero-potential environment (M = 0, r0 on the z axis).
    static GravityEnvironment flat(const PhysicalConstants& k = codata_constants());

    double mass() const { return mass_; }
    const Vec3& r0() const { return r0_; }
    double distance() const { return distance_; }
    double phi0() const { return phi0_; }
    double C1() const { return c1_; }
    double C2() const { return c2_; }
    // 2 grad(Phi)(r0) / (c^2 (1 - 2 Phi0/c^2)), in 1/m
    const Vec3& a() const { return a_; }
    double a_norm() const { return norm(a_); }
    // GM / (|r0| c^2)
    double compactness() const { return u_; }
    const PhysicalConstants& constants() const { return k_; }

private:
    GravityEnvironment(double mass, const Vec3& r0, double u, const PhysicalConstants& k);

    double mass_ = 0.0;
    Vec3 r0_{};
    double distance_ = 0.0;
    double u_ = 0.0;
    double phi0_ = 0.0;
    double c1_ = 1.0;
    double c2_ = 1.0;
    Vec3 a_{};
    PhysicalConstants k_;
};

// Orthonormal frame of the atom: e_z along a (global z when a = 0).
struct AtomFrame {
    Vec3 ex, ey, ez;
    Vec3 to_local(const Vec3& v) const { return {dot(ex, v), dot(ey, v), dot(ez, v)}; }
};
AtomFrame atom_frame(const GravityEnvironment& env);

// Newtonian potential -GM/|r| at r relative to the mass centre (m^2/s^2).
double potential_at(const GravityEnvironment& env, const Vec3& r);

// H_{mu nu}: diag(Phi/c^2, Phi/c^2, Phi/c^2, Phi/c^2).
struct GaugeField {
    std::array<std::array<double, 4>, 4> components{};
    double trace() const { return components[0][0] + components[1][1] + components[2][2] + components[3][3]; }
};
GaugeField gauge_field_at(const GravityEnvironment& env, const Vec3& r);

// Central-difference Laplacian of Phi at r with step h (should vanish off the mass).
double poisson_residual(const GravityEnvironment& env, const Vec3& r, double h);

// max over sigma of |P^{mu nu, rho sigma} d_rho H_{mu nu}| by central differences.
double harmonic_gauge_residual(const GravityEnvironment& env, const Vec3& r, double h);

enum class PotentialMode { flat, uniform, gradient_linear, gradient_exact };

// Electric potential of a point nucleus of charge Ze at env.r0(), evaluated at the
// global position r (volts). Throws SingularPointError when r = r0. Offsets from r0 are
// formed in double, so sub-nanometre displacements need |r0| well below 1e6 m.
double nucleus_potential(const GravityEnvironment& env, int Z, const Vec3& r, PotentialMode mode);

// Analytic value of lap(phi_e) - a . grad(phi_e) and the magnitude of the largest
// term that enters it, so value/scale is the relative residual.
struct PotentialResidual {
    double value = 0.0;
    double scale = 0.0;
    double relative() const { return scale > 0.0 ? std::abs(value) / scale : std::abs(value); }
};
PotentialResidual potential_residual(const GravityEnvironment& env, int Z, const Vec3& r,
                                     PotentialMode mode = PotentialMode::gradient_exact);

// Analytic gradient of nucleus_potential (V/m), used by tests and the tensor checks.
Vec3 nucleus_potential_gradient(const GravityEnvironment& env, int Z, const Vec3& r, PotentialMode mode);

}  // namespace ugatom
