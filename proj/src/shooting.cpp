#include "ugatom/shooting.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "ugatom/error.hpp"

namespace ugatom {

void RadialOdeSpec::validate() const {
    if (!(mass_eff > 0.0) || !(c_eff > 0.0) || !(hbar > 0.0)) {
        throw DomainError("RadialOdeSpec: mass, speed and hbar must be positive");
    }
    if (!(step > 0.0)) throw DomainError("RadialOdeSpec: step must be positive");
    if (kappa == 0) throw DomainError("RadialOdeSpec: kappa must be nonzero");
    if (Z < 1) throw DomainError("RadialOdeSpec: Z must be >= 1");
}

RadialOdeSpec make_ode_spec(int Z, int kappa, const GravityEnvironment& env) {
    const auto& k = env.constants();
    RadialOdeSpec s;
    s.Z = Z;
    s.kappa = kappa;
    s.mass_eff = env.C1() / (env.C2() * env.C2()) * k.m_e;
    s.c_eff = env.C2() * k.c;
    s.potential_prefactor = env.C2() * Z * k.hbar * k.c * k.alpha_e;
    s.hbar = k.hbar;
    return s;
}

int expected_upper_nodes(int n_r, int kappa) { return kappa < 0 ? n_r : n_r - 1; }

std::pair<double, double> closed_form_bracket(const QuantumNumbers& qn, int Z, const GravityEnvironment& env) {
    const double e = energy(qn, Z, env);
    const double b = env.C1() * binding_energy_flat(qn, Z, env.constants());
    const double d = 0.01 * std::abs(b);
    return {e - d, e + d};
}

namespace {

// Everything in reduced units: x = r m c / hbar, energies in m c^2, w = 1 - E/(m c^2).
class Integrator {
public:
    Integrator(const RadialOdeSpec& spec, double w_ref) : kappa_(spec.kappa), step_(spec.step) {
        zeta_ = spec.potential_prefactor / (spec.hbar * spec.c_eff);
        if (zeta_ >= std::abs(kappa_)) throw SupercriticalChargeError("shoot: Z alpha >= |kappa|");
        gamma_ = std::sqrt(double(kappa_) * kappa_ - zeta_ * zeta_);
        if (!(w_ref > 0.0 && w_ref < 1.0)) throw DomainError("shoot: energy outside the bound range");
        const double lambda = std::sqrt(w_ref * (2.0 - w_ref));
        beta_ = lambda;
        const double x_match = zeta_ / w_ref;
        const double length = spec.hbar / (spec.mass_eff * spec.c_eff);
        double x_max = x_match + 45.0 / lambda;
        if (spec.r_max > 0.0) x_max = std::max(spec.r_max / length, x_match * 1.01);
        const double x_min = 1e-8 * std::min(1.0, zeta_);

        t_match_ = tau(x_match);
        const long n_out = static_cast<long>(std::ceil((t_match_ - tau(x_min)) / step_));
        const long n_in = static_cast<long>(std::ceil((tau(x_max) - t_match_) / step_));
        if (n_out + n_in > 20'000'000) throw StiffnessError("shoot: grid too large");
        out_x_ = half_grid(t_match_ - n_out * step_, n_out, +1.0);
        in_x_ = half_grid(t_match_ + n_in * step_, n_in, -1.0);
    }

    struct Match {
        double residual;
        std::vector<double> f_out;
        std::vector<double> f_in;
    };

    Match run(double w, bool keep_path) const {
        Match m{};
        // outward: two-term series at the origin
        const double x0 = out_x_.front();
        const double a0 = 1.0;
        const double b0 = (gamma_ + kappa_) * a0 / zeta_;
        const double det = 2.0 * gamma_ + 1.0;
        const double a1 = ((2.0 - w) * b0 * (gamma_ + 1.0 - kappa_) + zeta_ * w * a0) / det;
        const double b1 = ((gamma_ + 1.0 + kappa_) * w * a0 - zeta_ * (2.0 - w) * b0) / det;
        // the common x0^gamma factor is dropped; only ratios matter
        std::array<double, 2> yo{a0 + a1 * x0, b0 + b1 * x0};
        integrate(out_x_, yo, w, step_, keep_path ? &m.f_out : nullptr);

        // inward: exponential decay
        std::array<double, 2> yi{1.0, -std::sqrt(w / (2.0 - w))};
        integrate(in_x_, yi, w, -step_, keep_path ? &m.f_in : nullptr);

        const double no = std::hypot(yo[0], yo[1]);
        const double ni = std::hypot(yi[0], yi[1]);
        if (!std::isfinite(no) || !std::isfinite(ni) || no == 0.0 || ni == 0.0) {
            throw StiffnessError("shoot: solution lost finiteness");
        }
        m.residual = (yo[0] * yi[1] - yo[1] * yi[0]) / (no * ni);
        if (keep_path) {
            // put both halves on the same scale with the same sign at the match point
            const double ratio = yo[0] / yi[0];
            for (double& v : m.f_in) v *= ratio;
        }
        return m;
    }

private:
    double tau(double x) const { return std::log(x) + beta_ * x; }

    double invert(double t, double guess) const {
        double y = std::log(guess);
        for (int it = 0; it < 100; ++it) {
            const double ey = std::exp(y);
            const double g = y + beta_ * ey - t;
            const double dy = g / (1.0 + beta_ * ey);
            y -= dy;
            if (std::abs(dy) < 1e-15 * std::max(1.0, std::abs(y))) break;
        }
        return std::exp(y);
    }

    // x at t_start + direction * k * h / 2 for k = 0 .. 2 n
    std::vector<double> half_grid(double t_start, long n, double direction) const {
        std::vector<double> xs(2 * n + 1);
        double guess = std::exp(std::min(t_start, 0.0));
        guess = std::max(guess, 1e-300);
        // a decent first guess when beta x dominates
        if (t_start > 1.0) guess = std::max(guess, t_start / (beta_ + 1.0));
        for (long k = 0; k <= 2 * n; ++k) {
            const double t = t_start + direction * 0.5 * step_ * k;
            xs[k] = invert(t, guess);
            guess = xs[k];
        }
        return xs;
    }

    std::array<double, 2> rhs(double x, const std::array<double, 2>& y, double w) const {
        const double jac = 1.0 / (1.0 + beta_ * x);
        return {(-kappa_ * y[0] + ((2.0 - w) * x + zeta_) * y[1]) * jac,
                (kappa_ * y[1] + (w * x - zeta_) * y[0]) * jac};
    }

    void integrate(const std::vector<double>& xs, std::array<double, 2>& y, double w, double h,
                   std::vector<double>* path) const {
        const std::size_t steps = (xs.size() - 1) / 2;
        if (path) {
            path->clear();
            path->reserve(steps + 1);
            path->push_back(y[0]);
        }
        for (std::size_t i = 0; i < steps; ++i) {
            const double x0 = xs[2 * i];
            const double xm = xs[2 * i + 1];
            const double x1 = xs[2 * i + 2];
            const auto k1 = rhs(x0, y, w);
            const auto k2 = rhs(xm, {y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]}, w);
            const auto k3 = rhs(xm, {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]}, w);
            const auto k4 = rhs(x1, {y[0] + h * k3[0], y[1] + h * k3[1]}, w);
            y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
            y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
            // keep magnitudes in range
            const double mag = std::max(std::abs(y[0]), std::abs(y[1]));
            if (!std::isfinite(mag)) throw StiffnessError("shoot: overflow during integration");
            if (mag > 1e100 || (mag < 1e-100 && mag > 0.0)) {
                const double s = 1.0 / mag;
                y[0] *= s;
                y[1] *= s;
                if (path) {
                    for (double& v : *path) v *= s;
                }
            }
            if (path) path->push_back(y[0]);
        }
    }

    int kappa_;
    double step_;
    double zeta_ = 0.0;
    double gamma_ = 0.0;
    double beta_ = 0.0;
    double t_match_ = 0.0;
    std::vector<double> out_x_;
    std::vector<double> in_x_;
};

int count_sign_changes(const std::vector<double>& out, const std::vector<double>& in) {
    // in runs from large x toward the match point; walk x ascending
    std::vector<double> f(out);
    for (auto it = in.rbegin() + 1; it != in.rend(); ++it) f.push_back(*it);
    double peak = 0.0;
    for (double v : f) peak = std::max(peak, std::abs(v));
    const double floor = 1e-12 * peak;
    int nodes = 0;
    int last = 0;
    for (double v : f) {
        if (std::abs(v) <= floor) continue;
        const int s = v > 0.0 ? 1 : -1;
        if (last != 0 && s != last) ++nodes;
        last = s;
    }
    return nodes;
}

}  // namespace

ShootResult shoot(const RadialOdeSpec& spec, int n_r, std::pair<double, double> bracket) {
    spec.validate();
    const double rest = spec.rest_energy();
    // w = 1 - E / rest; E_lo has the larger w
    double w_hi = 1.0 - bracket.first / rest;
    double w_lo = 1.0 - bracket.second / rest;
    if (!(w_lo < w_hi)) throw DomainError("shoot: empty bracket");
    const Integrator integ(spec, 0.5 * (w_lo + w_hi));

    double r_lo = integ.run(w_lo, false).residual;
    double r_hi = integ.run(w_hi, false).residual;
    if (r_lo == 0.0) w_hi = w_lo, r_hi = 0.0;
    if (r_hi == 0.0) w_lo = w_hi, r_lo = 0.0;
    if (r_lo * r_hi > 0.0) throw NoSignChangeError("shoot: no sign change of the match residual in the bracket");

    // Illinois false position
    ShootResult res;
    double w = 0.5 * (w_lo + w_hi);
    double r = 0.0;
    int side = 0;
    for (int it = 0; it < 200; ++it) {
        res.iterations = it + 1;
        if (r_lo == 0.0 || r_hi == 0.0) {
            w = r_lo == 0.0 ? w_lo : w_hi;
            r = 0.0;
            break;
        }
        w = (w_lo * r_hi - w_hi * r_lo) / (r_hi - r_lo);
        if (!(w > w_lo && w < w_hi)) w = 0.5 * (w_lo + w_hi);
        r = integ.run(w, false).residual;
        if (std::abs(r) < 1e-14 || (w_hi - w_lo) < 4e-16 * w_hi) break;
        if (r * r_hi > 0.0) {
            w_hi = w;
            r_hi = r;
            if (side == +1) r_lo *= 0.5;
            side = +1;
        } else {
            w_lo = w;
            r_lo = r;
            if (side == -1) r_hi *= 0.5;
            side = -1;
        }
    }
    const auto path = integ.run(w, true);
    res.residual = path.residual;
    res.nodes = count_sign_changes(path.f_out, path.f_in);
    res.binding = -w * rest;
    res.energy = rest + res.binding;
    if (res.nodes != expected_upper_nodes(n_r, spec.kappa)) {
        throw NumericError("shoot: converged solution has " + std::to_string(res.nodes) + " nodes, expected " +
                           std::to_string(expected_upper_nodes(n_r, spec.kappa)));
    }
    return res;
}

double shoot_energy(const RadialOdeSpec& spec, int n_r, std::pair<double, double> bracket) {
    return shoot(spec, n_r, bracket).energy;
}

double match_residual(const RadialOdeSpec& spec, double energy_j, double reference_energy) {
    spec.validate();
    const double rest = spec.rest_energy();
    const Integrator integ(spec, 1.0 - reference_energy / rest);
    return integ.run(1.0 - energy_j / rest, false).residual;
}

}  // namespace ugatom
