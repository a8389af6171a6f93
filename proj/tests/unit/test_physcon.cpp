#include <doctest.h>

#include <cmath>
#include <initializer_list>

#include "ugatom/physcon.hpp"

using namespace ugatom;

TEST_SUITE("physcon") {

TEST_CASE("defining constants") {
    constexpr auto k = codata_constants();
    CHECK(k.c == 299792458.0);
    CHECK(k.e == 1.602176634e-19);
    CHECK(std::abs(k.eps0 * k.mu0 * k.c * k.c - 1.0) <= 1e-15);
}

TEST_CASE("fine-structure constant") {
    constexpr auto k = codata_constants();
    const double alpha = k.e * k.e / (4.0 * std::numbers::pi * k.eps0 * k.hbar * k.c);
    CHECK(std::abs(k.alpha_e / alpha - 1.0) <= 1e-12);
    CHECK(k.alpha_e == doctest::Approx(7.2973525693e-3).epsilon(1e-10));
    CHECK(k.kappa_einstein == 8.0 * std::numbers::pi * k.G / (k.c * k.c * k.c * k.c));
}

TEST_CASE("all constants positive") {
    constexpr auto k = codata_constants();
    for (double v : {k.c, k.G, k.hbar, k.e, k.eps0, k.mu0, k.m_e, k.alpha_e, k.kappa_einstein}) CHECK(v > 0.0);
}

TEST_CASE("electronvolt conversion") {
    constexpr auto k = codata_constants();
    CHECK(joule_to_ev(0.0) == 0.0);
    CHECK(joule_to_ev(1.602176634e-19) == doctest::Approx(1.0).epsilon(1e-15));
    // m_e c^2 = 0.51099895000 MeV (CODATA 2018)
    CHECK(joule_to_ev(k.electron_rest_energy()) == doctest::Approx(510998.95).epsilon(1e-9));
    for (double ev : {1e-20, 13.6, 510998.95, 4.2e9}) {
        CHECK(std::abs(joule_to_ev(ev_to_joule(ev)) / ev - 1.0) <= 1e-15);
    }
}

}
