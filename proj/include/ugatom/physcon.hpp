#pragma once

#include <numbers>

namespace ugatom {

// SI constants. Values are CODATA 2018 (SI 2019 exact definitions for c, h, e).
struct PhysicalConstants {
    double c;               // m/s
    double G;               // m^3 kg^-1 s^-2
    double hbar;            // J s
    double e;               // C
    double eps0;            // F/m
    double mu0;             // H/m
    double m_e;             // kg
    double alpha_e;         // dimensionless
    double kappa_einstein;  // 8 pi G / c^4, s^2/(kg m)

    // m_e c^2 in joules.
    constexpr double electron_rest_energy() const { return m_e * c * c; }
    // hbar / (m_e c alpha_e)
    constexpr double bohr_radius() const { return hbar / (m_e * c * alpha_e); }
};

inline constexpr const char* kConstantsTag = "CODATA-2018";

// Solar mass used by catalog inputs (IAU nominal GM_sun / CODATA G).
inline constexpr double kSolarMass = 1.98841e30;

constexpr PhysicalConstants codata_constants() {
    constexpr double pi = std::numbers::pi;
    constexpr double c = 299792458.0;               // exact
    constexpr double h = 6.62607015e-34;            // exact
    constexpr double e = 1.602176634e-19;           // exact
    constexpr double mu0 = 1.25663706212e-6;        // CODATA 2018
    constexpr double G = 6.67430e-11;               // CODATA 2018
    constexpr double m_e = 9.1093837015e-31;        // CODATA 2018
    constexpr double hbar = h / (2.0 * pi);
    constexpr double eps0 = 1.0 / (mu0 * c * c);
    constexpr double alpha = e * e / (4.0 * pi * eps0 * hbar * c);
    return PhysicalConstants{
        .c = c,
        .G = G,
        .hbar = hbar,
        .e = e,
        .eps0 = eps0,
        .mu0 = mu0,
        .m_e = m_e,
        .alpha_e = alpha,
        .kappa_einstein = 8.0 * pi * G / (c * c * c * c),
    };
}

double joule_to_ev(double joules, const PhysicalConstants& k = codata_constants());
double ev_to_joule(double ev, const PhysicalConstants& k = codata_constants());

}  // namespace ugatom
