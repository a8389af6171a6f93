#pragma once

#include <array>
#include <complex>

#include "ugatom/gravity.hpp"

namespace ugatom {

using Complex = std::complex<double>;
using Matrix4c = std::array<std::array<Complex, 4>, 4>;

Matrix4c identity4();
Matrix4c operator*(const Matrix4c& a, const Matrix4c& b);
Matrix4c operator+(const Matrix4c& a, const Matrix4c& b);
Matrix4c operator-(const Matrix4c& a, const Matrix4c& b);
Matrix4c operator*(Complex s, const Matrix4c& a);
double max_abs(const Matrix4c& a);

// Minkowski metric, signature (+,-,-,-). Numerically eta_{mu nu} = eta^{mu nu}.
struct Metric {
    std::array<std::array<double, 4>, 4> components{{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}};
    double operator()(int mu, int nu) const { return components[mu][nu]; }
};
inline constexpr Metric kMinkowski{};

// Dirac-representation gamma matrices gamma^mu (upper index).
struct GammaMatrices {
    std::array<Matrix4c, 4> upper;
    Matrix4c beta() const { return upper[0]; }
    Matrix4c alpha(int i) const { return upper[0] * upper[i]; }  // i in 1..3
    // gamma_mu = eta_{mu nu} gamma^nu
    Matrix4c lower(int mu) const;
};
GammaMatrices dirac_gammas();

// P^{mu nu, rho sigma} = (eta^{mu sigma} eta^{rho nu} + eta^{mu rho} eta^{nu sigma} - eta^{mu nu} eta^{rho sigma}) / 2
double p4(int mu, int nu, int rho, int sigma);

// Ten-term rank-6 coefficient of the four-potential equation.
double p6(int mu, int nu, int rho, int sigma, int eta, int lambda);

// Coefficient matrices of a first-order Dirac-type operator. Every symbol carries its
// physical scale so coefficients are dimensionless:
//   dt -> hbar d/dt,  dx,dy,dz -> hbar c d/dx^i,  mass -> m_e c^2,  potential -> e phi_e.
enum class OperatorSymbol { dt = 0, dx, dy, dz, mass, potential };
inline constexpr int kOperatorSymbolCount = 6;

struct OperatorCoefficients {
    std::array<Matrix4c, kOperatorSymbolCount> terms{};
    Matrix4c& operator[](OperatorSymbol s) { return terms[static_cast<int>(s)]; }
    const Matrix4c& operator[](OperatorSymbol s) const { return terms[static_cast<int>(s)]; }
};
double max_abs_difference(const OperatorCoefficients& a, const OperatorCoefficients& b);

// Gravity-coupled Dirac equation (left minus right side) with the gauge field held at
// Phi0 and A^mu = (phi_e/c, 0, 0, 0).
OperatorCoefficients dirac_ug_operator(const GravityEnvironment& env);

// Hamiltonian form: (1-Phi0/c^2) m c^2 beta + c alpha.p - (1-2Phi0/c^2) e phi_e
// - i hbar (1-2Phi0/c^2) d/dt.
OperatorCoefficients dirac_hamiltonian_operator(const GravityEnvironment& env);

// max |gamma^0 (dirac_ug_operator) + dirac_hamiltonian_operator| over all entries.
double dirac_reduction_check(const GravityEnvironment& env);

enum class DerivativeMode { analytic, finite_difference };

struct MaxwellReductionReport {
    // max |(-c) LHS^0 - (1-2Phi0/c^2) lap(phi)| / max |lap(phi)| over the sample grid
    double temporal_residual = 0.0;
    // max |c LHS^sigma|, sigma in {x,y,z} (V/m^2)
    double spatial_residual = 0.0;
    // max |2/c^2 grad(Phi)(r0) . grad(phi)| / max |(1-2Phi0/c^2) lap(phi)|: the term
    // dropped when Phi is replaced by Phi0
    double dropped_gradient_ratio = 0.0;
};

// Applies the four-potential field equation to a Gaussian test potential of width
// `width_m` centred at env.r0() and compares its time component with the scalar
// form (1-2Phi0/c^2) lap(phi_e).
MaxwellReductionReport maxwell_reduction_check(const GravityEnvironment& env,
                                               DerivativeMode mode = DerivativeMode::analytic,
                                               double width_m = 1e-10);

}  // namespace ugatom
