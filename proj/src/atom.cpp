#include "ugatom/atom.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ugatom/error.hpp"
#include "ugatom/specfun.hpp"

namespace ugatom {

namespace {

// Dimensionless pieces of the level energy: q = (Z alpha)^2 / (n_r + gamma)^2 and
// epsilon = E0 / m c^2 = (1 + q)^(-1/2).
struct LevelParams {
    double gamma;
    double q;
    double eps;
    double one_minus_eps;
};

LevelParams level_params(int n_r, int kappa, int Z, const PhysicalConstants& k) {
    if (Z < 0) throw DomainError("atomic number must be non-negative");
    const double za = Z * k.alpha_e;
    if (za >= std::abs(kappa)) {
        throw SupercriticalChargeError("supercritical charge: Z alpha_e = " + std::to_string(za) +
                                       " >= |kappa_r| = " + std::to_string(std::abs(kappa)));
    }
    const double gamma = std::sqrt(static_cast<double>(kappa) * kappa - za * za);
    const double q = za * za / ((n_r + gamma) * (n_r + gamma));
    const double one_minus_eps = -std::expm1(-0.5 * std::log1p(q));
    return {gamma, q, 1.0 - one_minus_eps, one_minus_eps};
}

const char kOrbitalLetters[] = "spdfghiklmnoqrtuv";

}  // namespace

QuantumNumbers QuantumNumbers::make(int n_r, int kappa_r, HalfInt m) {
    if (kappa_r == 0) throw InvalidStateError("kappa_r must be non-zero");
    if (n_r < 0) throw InvalidStateError("n_r must be non-negative");
    if (kappa_r > 0 && n_r == 0) throw InvalidStateError("n_r must be >= 1 for kappa_r > 0");
    const HalfInt j = HalfInt::from_twice(2 * std::abs(kappa_r) - 1);
    if (m.is_integer() || m.abs() > j) {
        throw InvalidStateError("m = " + m.str() + " is not a projection of j = " + j.str());
    }
    return QuantumNumbers(n_r, kappa_r, m);
}

QuantumNumbers qn_make(int n_r, int kappa_r, HalfInt m) { return QuantumNumbers::make(n_r, kappa_r, m); }

std::string QuantumNumbers::label() const {
    const int l = l_upper();
    const char letter = l < static_cast<int>(sizeof(kOrbitalLetters) - 1) ? kOrbitalLetters[l] : '?';
    return std::to_string(n()) + letter + j().str();
}

double energy_flat(const QuantumNumbers& qn, int Z, const PhysicalConstants& k) {
    return k.electron_rest_energy() * level_params(qn.n_r(), qn.kappa(), Z, k).eps;
}

double binding_energy_flat(const QuantumNumbers& qn, int Z, const PhysicalConstants& k) {
    return -k.electron_rest_energy() * level_params(qn.n_r(), qn.kappa(), Z, k).one_minus_eps;
}

double energy(const QuantumNumbers& qn, int Z, const GravityEnvironment& env) {
    return env.C1() * energy_flat(qn, Z, env.constants());
}

QuadratureSpec radial_quadrature_default() { return {.abs_tol = 1e-13, .rel_tol = 1e-12, .max_subdivisions = 4000}; }

RadialSolution::RadialSolution(const QuantumNumbers& qn, int Z, const GravityEnvironment& env)
    : qn_(qn), Z_(Z), C1_(env.C1()), C2_(env.C2()) {
    const auto& k = env.constants();
    const LevelParams p = level_params(qn.n_r(), qn.kappa(), Z, k);
    const double mc2 = k.electron_rest_energy();
    const double hbar_c = k.hbar * k.c;
    gamma_ = p.gamma;
    E0_ = mc2 * p.eps;
    E_ = C1_ * E0_;
    // sqrt(C1^2 m^2 c^4 - E^2) = C1 m c^2 sqrt(1 - eps^2), 1 - eps^2 = q / (1 + q)
    lambda_ = C1_ * mc2 * std::sqrt(p.q / (1.0 + p.q)) / (C2_ * hbar_c);
    n_eff_ = C1_ * Z * k.alpha_e * mc2 / (C2_ * lambda_ * hbar_c);

    const int n_r = qn.n_r();
    const double two_gamma = 2.0 * gamma_;
    double n_r_fact = 1.0;
    for (int i = 2; i <= n_r; ++i) n_r_fact *= i;
    const double common = std::pow(2.0 * lambda_, 1.5) / gamma_fn(two_gamma + 1.0);
    const double shared = gamma_fn(two_gamma + n_r + 1.0) / (4.0 * n_eff_ * (n_eff_ - qn.kappa()) * n_r_fact);
    // (C1 m c^2 +- E) / (C1 m c^2) = 1 +- eps
    norm_f_ = common * std::sqrt((1.0 + p.eps) * shared);
    norm_g_ = common * std::sqrt(p.one_minus_eps * shared);
}

RadialSolution::Values RadialSolution::fg(double r) const {
    if (!(r > 0.0)) throw DomainError("radial functions need r > 0");
    const double s = 2.0 * lambda_ * r;
    const double b = 2.0 * gamma_ + 1.0;
    const int n_r = qn_.n_r();
    const double envelope = std::pow(s, gamma_ - 1.0) * std::exp(-0.5 * s);
    const double lead = (n_eff_ - qn_.kappa()) * kummer_terminating(-n_r, b, s);
    // the n_r F(1 - n_r; ...) term is absent for n_r = 0
    const double tail = n_r > 0 ? n_r * kummer_terminating(1 - n_r, b, s) : 0.0;
    return {norm_f_ * envelope * (lead - tail), -norm_g_ * envelope * (lead + tail)};
}

RadialSolution::Values radial_fg(const QuantumNumbers& qn, int Z, const GravityEnvironment& env, double r) {
    return RadialSolution(qn, Z, env).fg(r);
}

double radial_integral(const RadialSolution& a, RadialComponent ca, const RadialSolution& b, RadialComponent cb,
                       int power, const QuadratureSpec& spec) {
    // t = (lambda_a + lambda_b) r makes the integrand decay like e^{-t}
    const double scale = a.lambda() + b.lambda();
    const double t_max = 60.0 + 6.0 * (a.qn().n_r() + b.qn().n_r() + std::abs(power));
    const double scale3 = scale * scale * scale;
    auto integrand = [&](double t) {
        const double r = t / scale;
        const auto va = a.fg(r);
        const auto vb = b.fg(r);
        const double x = ca == RadialComponent::f ? va.f : va.g;
        const double y = cb == RadialComponent::f ? vb.f : vb.g;
        return x * y * std::pow(t, 2 + power) / scale3;
    };
    const double value = integrate(integrand, 0.0, t_max, spec).value;
    return value * std::pow(scale, -power);
}

double radial_norm(const RadialSolution& s, const QuadratureSpec& spec) {
    return radial_integral(s, RadialComponent::f, s, RadialComponent::f, 0, spec) +
           radial_integral(s, RadialComponent::g, s, RadialComponent::g, 0, spec);
}

DiracState::DiracState(const QuantumNumbers& qn, int Z, const GravityEnvironment& env)
    : radial_(qn, Z, env), frame_(atom_frame(env)), hbar_(env.constants().hbar) {}

Spinor4 DiracState::at_spherical(double t, double r, double theta, double phi) const {
    const QuantumNumbers& q = radial_.qn();
    const auto v = radial_.fg(r);
    const auto up = spinor_harmonic(q.j(), q.l_upper(), q.m(), theta, phi);
    const auto lo = spinor_harmonic(q.j(), q.l_lower(), q.m(), theta, phi);
    const std::complex<double> phase = std::polar(1.0, -radial_.E() * t / hbar_);
    const std::complex<double> i(0.0, 1.0);
    return {v.f * up.upper * phase, v.f * up.lower * phase, i * v.g * lo.upper * phase,
            i * v.g * lo.lower * phase};
}

Spinor4 DiracState::operator()(double t, const Vec3& r_rel) const {
    const Vec3 local = frame_.to_local(r_rel);
    const double r = norm(local);
    if (!(r > 0.0)) throw SingularPointError("eigenstate evaluated at the nucleus");
    const double theta = std::acos(std::clamp(local[2] / r, -1.0, 1.0));
    const double phi = std::atan2(local[1], local[0]);
    return at_spherical(t, r, theta, phi);
}

Spinor4 eigenstate_eval(const QuantumNumbers& qn, int Z, const GravityEnvironment& env, double t,
                        const Vec3& r_rel) {
    return DiracState(qn, Z, env)(t, r_rel);
}

std::vector<EnergyGroup> manifold(int n, int Z, const GravityEnvironment& env) {
    if (n < 1) throw DomainError("manifold: n must be >= 1");
    std::map<std::pair<int, int>, EnergyGroup> groups;
    for (int kappa = -n; kappa <= n; ++kappa) {
        if (kappa == 0) continue;
        const int n_r = n - std::abs(kappa);
        if (n_r < 0 || (kappa > 0 && n_r == 0)) continue;
        const int two_j = 2 * std::abs(kappa) - 1;
        auto& group = groups[{n_r, std::abs(kappa)}];
        group.n_r = n_r;
        group.abs_kappa = std::abs(kappa);
        for (int two_m = -two_j; two_m <= two_j; two_m += 2) {
            group.states.push_back(QuantumNumbers::make(n_r, kappa, HalfInt::from_twice(two_m)));
        }
        group.energy = energy(group.states.front(), Z, env);
    }
    std::vector<EnergyGroup> out;
    for (auto& [key, g] : groups) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const EnergyGroup& x, const EnergyGroup& y) { return x.energy < y.energy; });
    return out;
}

}  // namespace ugatom
