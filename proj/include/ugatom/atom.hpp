#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "ugatom/gravity.hpp"
#include "ugatom/half_int.hpp"
#include "ugatom/quadrature.hpp"

namespace ugatom {

// Labels of a hydrogen-like Dirac eigenstate. kappa_r = +-(j + 1/2); kappa_r > 0
// pairs the upper component with l = j + 1/2, kappa_r < 0 with l = j - 1/2.
class QuantumNumbers {
public:
    // Throws InvalidStateError for kappa_r = 0, n_r < 0, n_r = 0 with kappa_r > 0,
    // or |m| > j.
    static QuantumNumbers make(int n_r, int kappa_r, HalfInt m);

    int n_r() const { return n_r_; }
    int kappa() const { return kappa_; }
    HalfInt m() const { return m_; }
    HalfInt j() const { return HalfInt::from_twice(2 * std::abs(kappa_) - 1); }
    int n() const { return n_r_ + std::abs(kappa_); }
    int l_upper() const { return kappa_ > 0 ? kappa_ : -kappa_ - 1; }
    int l_lower() const { return kappa_ > 0 ? kappa_ - 1 : -kappa_; }
    // (-1)^l of the upper component
    int parity() const { return l_upper() % 2 == 0 ? 1 : -1; }

    // Spectroscopic label without m, e.g. "2p1/2".
    std::string label() const;

    bool operator==(const QuantumNumbers&) const = default;

private:
    QuantumNumbers(int n_r, int kappa, HalfInt m) : n_r_(n_r), kappa_(kappa), m_(m) {}
    int n_r_;
    int kappa_;
    HalfInt m_;
};

// Same as QuantumNumbers::make.
QuantumNumbers qn_make(int n_r, int kappa_r, HalfInt m);

// Flat-space Dirac energy including rest mass (J).
// Throws SupercriticalChargeError when Z alpha_e >= |kappa_r|.
double energy_flat(const QuantumNumbers& qn, int Z, const PhysicalConstants& k = codata_constants());

// energy_flat - m_e c^2, evaluated without cancellation (J).
double binding_energy_flat(const QuantumNumbers& qn, int Z, const PhysicalConstants& k = codata_constants());

// C1 * energy_flat.
double energy(const QuantumNumbers& qn, int Z, const GravityEnvironment& env);

// Quadrature settings used for radial integrals unless a caller passes its own.
QuadratureSpec radial_quadrature_default();

// Closed-form radial data of one (n_r, kappa_r) level in a gravity environment.
class RadialSolution {
public:
    RadialSolution(const QuantumNumbers& qn, int Z, const GravityEnvironment& env);

    const QuantumNumbers& qn() const { return qn_; }
    int Z() const { return Z_; }
    double lambda() const { return lambda_; }     // 1/m
    double gamma_aux() const { return gamma_; }   // sqrt(kappa^2 - (Z alpha)^2)
    double E() const { return E_; }               // J
    double E0() const { return E0_; }             // J
    double C1() const { return C1_; }
    double C2() const { return C2_; }

    struct Values {
        double f;
        double g;
    };
    // Large and small radial amplitudes at r > 0 (m^-3/2).
    Values fg(double r) const;
    double f(double r) const { return fg(r).f; }
    double g(double r) const { return fg(r).g; }

private:
    QuantumNumbers qn_;
    int Z_;
    double gamma_ = 0.0;
    double E0_ = 0.0;
    double E_ = 0.0;
    double C1_ = 1.0;
    double C2_ = 1.0;
    double lambda_ = 0.0;
    double n_eff_ = 0.0;   // C1 Z alpha m c^2 / (C2 lambda hbar c)
    double norm_f_ = 0.0;
    double norm_g_ = 0.0;
};

// Convenience: RadialSolution(qn, Z, env).fg(r). Throws DomainError for r <= 0.
RadialSolution::Values radial_fg(const QuantumNumbers& qn, int Z, const GravityEnvironment& env, double r);

enum class RadialComponent { f, g };

// Integral of X_a(r) Y_b(r) r^(2+power) dr over (0, inf), in SI units (m^power).
double radial_integral(const RadialSolution& a, RadialComponent ca, const RadialSolution& b,
                       RadialComponent cb, int power = 0,
                       const QuadratureSpec& spec = radial_quadrature_default());

// Integral of (f^2 + g^2) r^2 dr; 1 for a normalised state.
double radial_norm(const RadialSolution& s, const QuadratureSpec& spec = radial_quadrature_default());

using Spinor4 = std::array<std::complex<double>, 4>;

// Full Dirac eigenstate psi(t, r') with r' = r - r0 expressed in global axes. Spherical
// angles are taken in the atom frame whose z axis follows env.a().
class DiracState {
public:
    DiracState(const QuantumNumbers& qn, int Z, const GravityEnvironment& env);

    const RadialSolution& radial() const { return radial_; }
    const QuantumNumbers& qn() const { return radial_.qn(); }

    // Evaluated at spherical coordinates of the atom frame.
    Spinor4 at_spherical(double t, double r, double theta, double phi) const;
    Spinor4 operator()(double t, const Vec3& r_rel) const;

private:
    RadialSolution radial_;
    AtomFrame frame_;
    double hbar_;
};

Spinor4 eigenstate_eval(const QuantumNumbers& qn, int Z, const GravityEnvironment& env, double t,
                        const Vec3& r_rel);

// States of principal number n sharing one energy level: equal n_r and |kappa_r|.
struct EnergyGroup {
    int n_r = 0;
    int abs_kappa = 0;
    double energy = 0.0;   // J, includes the C1 scaling
    std::vector<QuantumNumbers> states;
};

// All (n_r, kappa_r, m) with n_r + |kappa_r| = n, grouped by energy and sorted
// ascending. Throws SupercriticalChargeError if any level is supercritical.
std::vector<EnergyGroup> manifold(int n, int Z, const GravityEnvironment& env);

}  // namespace ugatom
