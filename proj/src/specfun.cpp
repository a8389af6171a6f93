#include "ugatom/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ugatom/error.hpp"

namespace ugatom {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_gamma(double x) {
    if (x < 0.5) {
        // reflection keeps the series in its accurate range
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_gamma(1.0 - x));
    }
    const double z = x - 1.0;
    double sum = kLanczosCoef[0];
    for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
        sum += kLanczosCoef[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    // t^(z+1/2) split in two halves so that x near 170 does not overflow early
    const double half_pow = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half_pow * (half_pow * std::exp(-t)) * sum;
}

double factorial_ratio(int num, int den) {
    // num! / den!
    double r = 1.0;
    if (num >= den) {
        for (int k = den + 1; k <= num; ++k) r *= k;
    } else {
        for (int k = num + 1; k <= den; ++k) r /= k;
    }
    return r;
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_fn: argument must be positive, got " + std::to_string(x));
    if (x > 170.0) throw OverflowError("gamma_fn: argument above 170 overflows, got " + std::to_string(x));
    return lanczos_gamma(x);
}

double kummer_terminating(double a, double b, double x) {
    if (!(a <= 0.0) || std::floor(a) != a) {
        throw DomainError("kummer_terminating: first argument must be a non-positive integer");
    }
    if (!(b > 0.0)) throw DomainError("kummer_terminating: b must be positive");
    const int n = static_cast<int>(-a);
    double result = 1.0;
    for (int k = n - 1; k >= 0; --k) {
        result = 1.0 + (a + k) * x / ((b + k) * (k + 1)) * result;
    }
    return result;
}

double legendre(int l, double x) {
    if (l < 0) throw DomainError("legendre: negative degree");
    if (l == 0) return 1.0;
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= l; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double assoc_legendre(int l, int m, double x) {
    if (l < 0 || std::abs(m) > l) {
        throw DomainError("assoc_legendre: need |m| <= l, got l=" + std::to_string(l) + " m=" + std::to_string(m));
    }
    if (!(std::abs(x) <= 1.0)) throw DomainError("assoc_legendre: |x| must not exceed 1");
    if (m < 0) {
        const int k = -m;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        return sign * factorial_ratio(l - k, l + k) * assoc_legendre(l, k, x);
    }
    // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double pmm = 1.0;
    for (int k = 1; k <= m; ++k) pmm *= -(2 * k - 1) * s;
    if (l == m) return pmm;
    double pm1 = x * (2 * m + 1) * pmm;
    for (int k = m + 2; k <= l; ++k) {
        const double next = (x * (2 * k - 1) * pm1 - (k + m - 1) * pmm) / (k - m);
        pmm = pm1;
        pm1 = next;
    }
    return pm1;
}

std::complex<double> sph_harmonic(int l, int m, double theta, double phi) {
    if (l < 0 || std::abs(m) > l) {
        throw DomainError("sph_harmonic: need |m| <= l, got l=" + std::to_string(l) + " m=" + std::to_string(m));
    }
    const double norm = std::sqrt((2 * l + 1) / (4.0 * std::numbers::pi) * factorial_ratio(l - m, l + m));
    return norm * assoc_legendre(l, m, std::cos(theta)) * std::polar(1.0, m * phi);
}

double clebsch_gordan(int l, HalfInt ml, HalfInt q, HalfInt j, HalfInt m) {
    if (l < 0) throw DomainError("clebsch_gordan: negative l");
    if (q.abs() != kHalf) throw DomainError("clebsch_gordan: spin projection must be +-1/2");
    const bool stretched = j.twice() == 2 * l + 1;
    const bool antistretched = j.twice() == 2 * l - 1;
    if (!(stretched || antistretched) || j.twice() < 1) {
        throw DomainError("clebsch_gordan: j=" + j.str() + " is not l +- 1/2 for l=" + std::to_string(l));
    }
    if (!ml.is_integer() || ml + q != m) return 0.0;
    if (ml.abs().twice() > 2 * l || m.abs() > j) return 0.0;

    const double mv = m.value();
    const double denom = 2.0 * l + 1.0;
    const double plus = std::sqrt((l + mv + 0.5) / denom);
    const double minus = std::sqrt((l - mv + 0.5) / denom);
    const bool up = q.twice() > 0;
    if (stretched) return up ? plus : minus;
    return up ? -minus : plus;
}

SpinorSphericalHarmonic spinor_harmonic(HalfInt j, int l, HalfInt m, double theta, double phi) {
    if (l < 0 || (j.twice() != 2 * l + 1 && j.twice() != 2 * l - 1) || j.twice() < 1) {
        throw DomainError("spinor_harmonic: invalid (j, l) = (" + j.str() + ", " + std::to_string(l) + ")");
    }
    if (m.abs() > j || m.is_integer()) {
        throw DomainError("spinor_harmonic: invalid m=" + m.str() + " for j=" + j.str());
    }
    SpinorSphericalHarmonic out{.j = j, .l = l, .m = m, .upper = {}, .lower = {}};
    for (HalfInt q : {kHalf, -kHalf}) {
        const HalfInt ml = m - q;
        if (ml.abs().twice() > 2 * l) continue;
        const double cg = clebsch_gordan(l, ml, q, j, m);
        const std::complex<double> y = cg * sph_harmonic(l, ml.twice() / 2, theta, phi);
        if (q.twice() > 0) {
            out.upper = y;
        } else {
            out.lower = y;
        }
    }
    return out;
}

}  // namespace ugatom
