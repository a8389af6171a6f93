#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <type_traits>
#include <vector>

namespace ugatom {

struct QuadratureSpec {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
};

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int subdivisions = 0;
};

// Adaptive 15-point Gauss-Kronrod on [a, b]. Integrable endpoint singularities are
// fine since the rule never samples the endpoints. Throws QuadratureError when the
// tolerance cannot be met within spec.max_subdivisions.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

// Same on [a, inf) through x = a + t/(1-t).
QuadratureResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                       const QuadratureSpec& spec = {});

// n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

// Integral over the unit sphere: Gauss-Legendre in cos(theta) times the
// trapezoid rule in phi. f(theta, phi) may return double or std::complex<double>.
template <class F>
auto integrate_sphere(F&& f, int n_theta = 64, int n_phi = 128) {
    using R = std::decay_t<decltype(f(0.0, 0.0))>;
    const GaussRule rule = gauss_legendre(n_theta);
    const double dphi = 2.0 * std::numbers::pi / n_phi;
    R sum{};
    for (int i = 0; i < n_theta; ++i) {
        const double theta = std::acos(rule.nodes[i]);
        R ring{};
        for (int k = 0; k < n_phi; ++k) ring += f(theta, k * dphi);
        sum += rule.weights[i] * dphi * ring;
    }
    return sum;
}

}  // namespace ugatom
