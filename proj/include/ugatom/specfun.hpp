#pragma once

#include <complex>

#include "ugatom/half_int.hpp"

namespace ugatom {

// Gamma function for 0 < x <= 170 (Lanczos, g = 7, nine coefficients).
// Throws DomainError for x <= 0 and OverflowError for x > 170.
double gamma_fn(double x);

// Terminating Kummer series 1F1(a; b; x) for a in {0, -1, -2, ...} and b > 0,
// evaluated by Horner's scheme on the finite polynomial.
double kummer_terminating(double a, double b, double x);

// Legendre polynomial P_l(x).
double legendre(int l, double x);

// Associated Legendre function P_{l,m}(x) with the Condon-Shortley phase and the
// (-1)^m (l-|m|)!/(l+|m|)! extension to m < 0.
double assoc_legendre(int l, int m, double x);

// Y_{l,m}(theta, phi) = sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!) P_{l,m}(cos theta) e^{i m phi}
std::complex<double> sph_harmonic(int l, int m, double theta, double phi);

// <l, ml; 1/2, q | j, m> for the coupling l (x) 1/2 (Condon-Shortley convention).
// Returns 0 when the projections do not satisfy m = ml + q or lie out of range.
// Throws DomainError unless q = +-1/2 and j = l +- 1/2 with j >= 1/2.
double clebsch_gordan(int l, HalfInt ml, HalfInt q, HalfInt j, HalfInt m);

// Two-component angular spinor Omega_{j,l,m}(theta, phi).
struct SpinorSphericalHarmonic {
    HalfInt j;
    int l = 0;
    HalfInt m;
    std::complex<double> upper;  // q = +1/2 component
    std::complex<double> lower;  // q = -1/2 component
};

SpinorSphericalHarmonic spinor_harmonic(HalfInt j, int l, HalfInt m, double theta, double phi);

}  // namespace ugatom
