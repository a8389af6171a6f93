#pragma once

#include <complex>
#include <vector>

#include "ugatom/atom.hpp"
#include "ugatom/gravity.hpp"
#include "ugatom/jacobi.hpp"

namespace ugatom {

// Ze|a| / (8 pi eps0 (1 - 2 Phi0/c^2)) in volts.
double delta_potential_amplitude(const GravityEnvironment& env, int Z);

// Gradient-induced correction to the nuclear potential at r_rel = r - r0 (volts):
// amplitude * (cos(theta') + 1) with theta' measured from a.
// Throws SingularPointError at r_rel = 0.
double delta_potential(const GravityEnvironment& env, int Z, const Vec3& r_rel);

// Energy shift (-e) * amplitude common to every state (J).
double uniform_shift(const GravityEnvironment& env, int Z);

// <Omega_{j,l,m} | cos(theta) | Omega_{j',l',m'}> from Clebsch-Gordan algebra.
double angular_cos_element(HalfInt j, int l, HalfInt m, HalfInt jp, int lp, HalfInt mp);

// <psi_i | r^power cos(theta') | psi_j> over the full Dirac spinors (m^power).
double cos_theta_element(const QuantumNumbers& qi, const QuantumNumbers& qj, int Z, const GravityEnvironment& env,
                         int power = 0, const QuadratureSpec& spec = radial_quadrature_default());

// <psi_i | (-e) delta_potential | psi_j> (J). Real in this basis; returned as complex.
std::complex<double> matrix_element(const QuantumNumbers& qi, const QuantumNumbers& qj, int Z,
                                    const GravityEnvironment& env,
                                    const QuadratureSpec& spec = radial_quadrature_default());

struct PerturbationBlock {
    int n_r = 0;
    int abs_kappa = 0;
    HalfInt m;
    double unperturbed_energy = 0.0;     // J
    std::vector<QuantumNumbers> basis;
    ComplexMatrix matrix;                // J
    std::vector<double> eigenvalues;     // J, ascending, includes the uniform shift
    ComplexMatrix eigenvectors;          // column k belongs to eigenvalues[k]
    double uniform_shift = 0.0;          // J
    // max |eigenvalue - uniform_shift| exceeds half the distance to the nearest other level
    bool exceeds_fine_structure_gap = false;

    double trace() const;
};

// Degenerate first-order treatment of the n manifold: one block per energy group and m.
// Blocks are ordered by group energy, then m ascending.
std::vector<PerturbationBlock> split_manifold(int n, int Z, const GravityEnvironment& env,
                                              const QuadratureSpec& spec = radial_quadrature_default());

}  // namespace ugatom
