#pragma once

#include <utility>

#include "ugatom/atom.hpp"
#include "ugatom/gravity.hpp"

namespace ugatom {

// Radial Dirac problem with substituted constants m -> C1/C2^2 m_e, c -> C2 c.
struct RadialOdeSpec {
    int Z = 1;
    int kappa = -1;
    double mass_eff = 0.0;             // kg
    double c_eff = 0.0;                // m/s
    double potential_prefactor = 0.0;  // J m; V(r) = -prefactor / r
    double hbar = 0.0;
    double step = 0.01;                // RK4 step in t = ln x + beta x (x in reduced Compton lengths)
    double r_max = 0.0;                // m; 0 picks turning point + 45 / lambda

    // Throws DomainError on nonpositive mass_eff, c_eff, hbar, step or kappa = 0.
    void validate() const;
    double rest_energy() const { return mass_eff * c_eff * c_eff; }
};

RadialOdeSpec make_ode_spec(int Z, int kappa, const GravityEnvironment& env);

struct ShootResult {
    double energy = 0.0;    // J, includes rest energy
    double binding = 0.0;   // energy - mass_eff c_eff^2, J
    double residual = 0.0;  // sine of the angle between inner and outer (F, G) at the match point
    int nodes = 0;          // interior zeros of F = r f
    int iterations = 0;
};

// Nodes of F for a bound state: n_r for kappa < 0, n_r - 1 for kappa > 0.
int expected_upper_nodes(int n_r, int kappa);

// Energy bracket E +- 1% of the binding energy around the closed-form level.
std::pair<double, double> closed_form_bracket(const QuantumNumbers& qn, int Z, const GravityEnvironment& env);

// Bound-state energy inside the bracket (J). Throws NoSignChangeError when the match
// residual has the same sign at both ends, StiffnessError when integration breaks
// down, SupercriticalChargeError when Z alpha >= |kappa|, and NumericError when the
// converged solution does not have the expected node count for n_r.
ShootResult shoot(const RadialOdeSpec& spec, int n_r, std::pair<double, double> bracket);
double shoot_energy(const RadialOdeSpec& spec, int n_r, std::pair<double, double> bracket);

// Match residual at a fixed energy E, with the match point taken from `reference`.
double match_residual(const RadialOdeSpec& spec, double energy, double reference_energy);

}  // namespace ugatom
