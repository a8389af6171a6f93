#include "ugatom/spectra.hpp"

#include <cmath>
#include <numbers>

#include "ugatom/error.hpp"

namespace ugatom {

double transition_omega(const QuantumNumbers& upper, const QuantumNumbers& lower, int Z,
                        const PhysicalConstants& k) {
    // binding energies avoid subtracting two numbers of size m_e c^2
    const double delta = binding_energy_flat(upper, Z, k) - binding_energy_flat(lower, Z, k);
    if (!(delta > 0.0)) {
        throw NonEmissiveError("transition " + upper.label() + " -> " + lower.label() +
                               " is not an emission line (E_upper <= E_lower)");
    }
    return delta / k.hbar;
}

SpectralLine make_line(const QuantumNumbers& upper, const QuantumNumbers& lower, int Z, const PhysicalConstants& k) {
    SpectralLine line{upper, lower, Z};
    line.omega_e = transition_omega(upper, lower, Z, k);
    line.omega_r = line.omega_e;
    line.wavelength_e = line.wavelength_r = 2.0 * std::numbers::pi * k.c / line.omega_e;
    return line;
}

SpectralLine line_at_env(const SpectralLine& line, const GravityEnvironment& env) {
    SpectralLine out = line;
    const double c = env.constants().c;
    out.omega_r = env.C1() * line.omega_e;
    out.wavelength_e = 2.0 * std::numbers::pi * c / out.omega_e;
    out.wavelength_r = 2.0 * std::numbers::pi * c / out.omega_r;
    return out;
}

namespace {

void check_compactness(double u, const char* who) {
    if (!(u >= 0.0) || !std::isfinite(u)) throw DomainError(std::string(who) + ": compactness must be >= 0");
}

// 1/C1 = (1 + 2u)/(1 + u)
double inverse_c1(double u) { return (1.0 + 2.0 * u) / (1.0 + u); }

double sqrt_g00(double u) { return (1.0 - 0.5 * u) / (1.0 + 0.5 * u); }

}  // namespace

UgRedshift redshift_ug(double u, double receiver_u) {
    check_compactness(u, "redshift_ug");
    check_compactness(receiver_u, "redshift_ug");
    if (receiver_u == 0.0) {
        // 1/C1 - 1 written as u/(1+u) to avoid cancellation for small u
        return {u / (1.0 + u), u - u * u};
    }
    // the receiver's own clock runs at C1(receiver)
    const double d = u - receiver_u;
    return {inverse_c1(u) / inverse_c1(receiver_u) - 1.0, d - 1.5 * (u * u - receiver_u * receiver_u) + 0.5 * d * d};
}

UgRedshift redshift_ug(const GravityEnvironment& env, double receiver_u) {
    return redshift_ug(env.compactness(), receiver_u);
}

GrRedshift redshift_gr(double u, double receiver_u) {
    check_compactness(u, "redshift_gr");
    check_compactness(receiver_u, "redshift_gr");
    if (u >= 2.0 || receiver_u >= 2.0) {
        throw DomainError("redshift_gr: u >= 2 reaches the isotropic-coordinate horizon");
    }
    if (receiver_u == 0.0) {
        // (1 + u/2)/(1 - u/2) - 1
        return {u / (1.0 - 0.5 * u), u + 0.5 * u * u};
    }
    const double d = u - receiver_u;
    return {sqrt_g00(receiver_u) / sqrt_g00(u) - 1.0, d + 0.5 * d * d};
}

GrRedshift redshift_gr(const GravityEnvironment& env, double receiver_u) {
    return redshift_gr(env.compactness(), receiver_u);
}

RedshiftReport redshift_report(double u) {
    const UgRedshift ug = redshift_ug(u);
    const GrRedshift gr = redshift_gr(u);
    return {u, ug.exact, ug.series2, gr.exact, gr.series2, gr.exact - ug.exact};
}

RedshiftReport redshift_report(const GravityEnvironment& env) { return redshift_report(env.compactness()); }

}  // namespace ugatom
