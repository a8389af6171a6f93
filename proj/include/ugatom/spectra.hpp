#pragma once

#include "ugatom/atom.hpp"
#include "ugatom/gravity.hpp"

namespace ugatom {

struct SpectralLine {
    QuantumNumbers upper;
    QuantumNumbers lower;
    int Z = 1;
    double omega_e = 0.0;        // rad/s, emitted at zero potential
    double omega_r = 0.0;        // rad/s, emitted at the environment, received at zero potential
    double wavelength_e = 0.0;   // m
    double wavelength_r = 0.0;   // m

    // (omega_e - omega_r) / omega_r
    double redshift() const { return (omega_e - omega_r) / omega_r; }
};

// (E0_upper - E0_lower) / hbar. Throws NonEmissiveError when E_upper <= E_lower.
double transition_omega(const QuantumNumbers& upper, const QuantumNumbers& lower, int Z,
                        const PhysicalConstants& k = codata_constants());

// Line with omega_e and wavelength_e filled; omega_r = omega_e (flat space).
SpectralLine make_line(const QuantumNumbers& upper, const QuantumNumbers& lower, int Z,
                       const PhysicalConstants& k = codata_constants());

// omega_r = C1 omega_e; wavelengths use the vacuum c at zero potential.
SpectralLine line_at_env(const SpectralLine& line, const GravityEnvironment& env);

struct RedshiftReport {
    double u = 0.0;
    double z_ug_exact = 0.0;
    double z_ug_series2 = 0.0;
    double z_gr_exact = 0.0;
    double z_gr_series2 = 0.0;
    double delta_z = 0.0;   // z_gr_exact - z_ug_exact
};

struct UgRedshift {
    double exact;
    double series2;
};
struct GrRedshift {
    double exact;
    double series2;
};

// z = 1/C1 - 1 = u/(1+u); series u - u^2. receiver_u is the compactness at the
// receiver (0 for a receiver at infinity); both ends then use the same C1 formula and
// the series is the joint second-order expansion in (u, receiver_u).
UgRedshift redshift_ug(const GravityEnvironment& env, double receiver_u = 0.0);
UgRedshift redshift_ug(double u, double receiver_u = 0.0);

// z = sqrt(g00(receiver)/g00(emitter)) - 1 with the isotropic Schwarzschild
// sqrt(g00) = (1 - u/2)/(1 + u/2); series u + u^2/2. Throws DomainError for u >= 2.
GrRedshift redshift_gr(const GravityEnvironment& env, double receiver_u = 0.0);
GrRedshift redshift_gr(double u, double receiver_u = 0.0);

RedshiftReport redshift_report(double u);
RedshiftReport redshift_report(const GravityEnvironment& env);

}  // namespace ugatom
