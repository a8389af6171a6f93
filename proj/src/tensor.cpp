#include "ugatom/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace ugatom {

Matrix4c identity4() {
    Matrix4c m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
    return m;
}

Matrix4c operator*(const Matrix4c& a, const Matrix4c& b) {
    Matrix4c m{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j) m[i][j] += a[i][k] * b[k][j];
    return m;
}

Matrix4c operator+(const Matrix4c& a, const Matrix4c& b) {
    Matrix4c m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = a[i][j] + b[i][j];
    return m;
}

Matrix4c operator-(const Matrix4c& a, const Matrix4c& b) {
    Matrix4c m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = a[i][j] - b[i][j];
    return m;
}

Matrix4c operator*(Complex s, const Matrix4c& a) {
    Matrix4c m{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = s * a[i][j];
    return m;
}

double max_abs(const Matrix4c& a) {
    double worst = 0.0;
    for (const auto& row : a)
        for (const auto& v : row) worst = std::max(worst, std::abs(v));
    return worst;
}

Matrix4c GammaMatrices::lower(int mu) const { return Complex(kMinkowski(mu, mu)) * upper[mu]; }

GammaMatrices dirac_gammas() {
    using namespace std::complex_literals;
    // Pauli matrices
    const std::array<std::array<std::array<Complex, 2>, 2>, 3> sigma{{
        {{{0.0, 1.0}, {1.0, 0.0}}},
        {{{0.0, -1i}, {1i, 0.0}}},
        {{{1.0, 0.0}, {0.0, -1.0}}},
    }};
    GammaMatrices g{};
    g.upper[0] = identity4();
    g.upper[0][2][2] = g.upper[0][3][3] = -1.0;
    for (int k = 0; k < 3; ++k) {
        Matrix4c m{};
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                m[r][c + 2] = sigma[k][r][c];
                m[r + 2][c] = -sigma[k][r][c];
            }
        }
        g.upper[k + 1] = m;
    }
    return g;
}

double p4(int mu, int nu, int rho, int sigma) {
    const Metric& e = kMinkowski;
    return 0.5 * (e(mu, sigma) * e(rho, nu) + e(mu, rho) * e(nu, sigma) - e(mu, nu) * e(rho, sigma));
}

double p6(int mu, int nu, int rho, int sigma, int eta, int lambda) {
    const Metric& e = kMinkowski;
    return e(eta, sigma) * e(lambda, mu) * e(nu, rho)      //
           - e(eta, mu) * e(lambda, sigma) * e(nu, rho)    //
           - e(eta, rho) * e(lambda, mu) * e(nu, sigma)    //
           + e(eta, mu) * e(lambda, rho) * e(nu, sigma)    //
           - e(mu, sigma) * e(nu, lambda) * e(rho, eta)    //
           + e(mu, sigma) * e(nu, eta) * e(rho, lambda)    //
           + e(mu, rho) * e(nu, lambda) * e(sigma, eta)    //
           - e(mu, rho) * e(nu, eta) * e(sigma, lambda)    //
           - e(mu, nu) * e(eta, sigma) * e(lambda, rho)    //
           + e(mu, nu) * e(eta, rho) * e(lambda, sigma);
}

double max_abs_difference(const OperatorCoefficients& a, const OperatorCoefficients& b) {
    double worst = 0.0;
    for (int s = 0; s < kOperatorSymbolCount; ++s) worst = std::max(worst, max_abs(a.terms[s] - b.terms[s]));
    return worst;
}

namespace {

OperatorSymbol derivative_symbol(int rho) {
    switch (rho) {
        case 0: return OperatorSymbol::dt;
        case 1: return OperatorSymbol::dx;
        case 2: return OperatorSymbol::dy;
        default: return OperatorSymbol::dz;
    }
}

}  // namespace

OperatorCoefficients dirac_ug_operator(const GravityEnvironment& env) {
    using namespace std::complex_literals;
    const auto& k = env.constants();
    const GammaMatrices g = dirac_gammas();
    const Matrix4c id = identity4();
    const double h = env.phi0() / (k.c * k.c);

    std::array<std::array<double, 4>, 4> H{};
    for (int i = 0; i < 4; ++i) H[i][i] = h;
    // d_rho H_{mu nu} vanishes for Phi held at Phi0
    std::array<std::array<std::array<double, 4>, 4>, 4> dH{};
    // c A_rho / phi_e
    const std::array<double, 4> cA{1.0, 0.0, 0.0, 0.0};
    // hbar c / (m_e c^2): converts a d_rho H term into mass-symbol units (1/m * m)
    const double compton = k.hbar / (k.m_e * k.c);

    // Both d_0 = (1/c) d_t and d_i carry the factor hbar c in their symbol scale.
    OperatorCoefficients lhs{};
    for (int rho = 0; rho < 4; ++rho) lhs[derivative_symbol(rho)] = 1i * g.upper[rho];
    lhs[OperatorSymbol::mass] = -1.0 * id;

    OperatorCoefficients rhs{};
    for (int rho = 0; rho < 4; ++rho) {
        rhs[OperatorSymbol::potential] = rhs[OperatorSymbol::potential] + Complex(-cA[rho]) * g.upper[rho];
    }
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            for (int rho = 0; rho < 4; ++rho) {
                for (int sigma = 0; sigma < 4; ++sigma) {
                    const double p = p4(mu, nu, rho, sigma);
                    if (p == 0.0) continue;
                    const Matrix4c gs = g.lower(sigma);
                    const double w = p * H[mu][nu];
                    auto& d = rhs[derivative_symbol(rho)];
                    d = d + (1i * w) * gs;
                    auto& m = rhs[OperatorSymbol::mass];
                    m = m + Complex(-0.5 * kMinkowski(rho, sigma) * w) * id;
                    m = m + (0.5i * p * dH[rho][mu][nu] * compton) * gs;
                    auto& v = rhs[OperatorSymbol::potential];
                    v = v + Complex(w * cA[rho]) * gs;
                }
            }
        }
    }

    OperatorCoefficients out{};
    for (int s = 0; s < kOperatorSymbolCount; ++s) out.terms[s] = lhs.terms[s] - rhs.terms[s];
    return out;
}

OperatorCoefficients dirac_hamiltonian_operator(const GravityEnvironment& env) {
    using namespace std::complex_literals;
    const auto& k = env.constants();
    const GammaMatrices g = dirac_gammas();
    const Matrix4c id = identity4();
    const double h = env.phi0() / (k.c * k.c);

    OperatorCoefficients out{};
    out[OperatorSymbol::mass] = Complex(1.0 - h) * g.beta();
    // c alpha.p = -i alpha^i (hbar c d_i)
    for (int i = 1; i <= 3; ++i) out[derivative_symbol(i)] = -1i * g.alpha(i);
    out[OperatorSymbol::potential] = Complex(-(1.0 - 2.0 * h)) * id;
    out[OperatorSymbol::dt] = (-1i * (1.0 - 2.0 * h)) * id;
    return out;
}

double dirac_reduction_check(const GravityEnvironment& env) {
    const OperatorCoefficients ug = dirac_ug_operator(env);
    const OperatorCoefficients ham = dirac_hamiltonian_operator(env);
    const Matrix4c g0 = dirac_gammas().upper[0];
    double worst = 0.0;
    for (int s = 0; s < kOperatorSymbolCount; ++s) {
        worst = std::max(worst, max_abs(g0 * ug.terms[s] + ham.terms[s]));
    }
    return worst;
}

namespace {

struct Derivatives {
    Vec3 grad;
    std::array<std::array<double, 3>, 3> hess;
};

double gaussian(const Vec3& d, double w) { return std::exp(-dot(d, d) / (2.0 * w * w)); }

Derivatives gaussian_derivatives(const Vec3& d, double w, DerivativeMode mode) {
    Derivatives out{};
    if (mode == DerivativeMode::analytic) {
        const double f = gaussian(d, w);
        const double w2 = w * w;
        for (int i = 0; i < 3; ++i) {
            out.grad[i] = -f * d[i] / w2;
            for (int j = 0; j < 3; ++j) {
                out.hess[i][j] = f * (d[i] * d[j] / (w2 * w2) - (i == j ? 1.0 / w2 : 0.0));
            }
        }
        return out;
    }
    const double h = 1e-3 * w;
    auto at = [&](int i, double si, int j, double sj) {
        Vec3 p = d;
        p[i] += si * h;
        p[j] += sj * h;
        return gaussian(p, w);
    };
    for (int i = 0; i < 3; ++i) {
        out.grad[i] = (at(i, 1, i, 0) - at(i, -1, i, 0)) / (2.0 * h);
        for (int j = 0; j < 3; ++j) {
            if (i == j) {
                out.hess[i][i] = (at(i, 1, i, 0) - 2.0 * gaussian(d, w) + at(i, -1, i, 0)) / (h * h);
            } else {
                out.hess[i][j] = (at(i, 1, j, 1) - at(i, 1, j, -1) - at(i, -1, j, 1) + at(i, -1, j, -1)) /
                                 (4.0 * h * h);
            }
        }
    }
    return out;
}

}  // namespace

MaxwellReductionReport maxwell_reduction_check(const GravityEnvironment& env, DerivativeMode mode, double width_m) {
    const auto& k = env.constants();
    const double c2 = k.c * k.c;
    const double h = env.phi0() / c2;
    // grad(Phi) at r0 = GM r0 / |r0|^3
    const double d0 = env.distance();
    const Vec3 grad_phi_grav = (k.G * env.mass() / (d0 * d0 * d0)) * env.r0();

    double max_temporal = 0.0;
    double max_spatial = 0.0;
    double max_lap = 0.0;
    double max_scalar_lhs = 0.0;
    double max_dropped = 0.0;
    const std::array<double, 4> offsets{-1.5, -0.5, 0.5, 1.5};
    for (double ox : offsets) {
        for (double oy : offsets) {
            for (double oz : offsets) {
                const Vec3 d{ox * width_m, oy * width_m, oz * width_m};
                const Derivatives der = gaussian_derivatives(d, width_m, mode);
                const double lap = der.hess[0][0] + der.hess[1][1] + der.hess[2][2];

                // c * LHS^sigma; static field, so d_0 terms and the time part of d^2 drop
                std::array<double, 4> lhs{-lap, 0.0, 0.0, 0.0};
                for (int sigma = 0; sigma < 4; ++sigma) {
                    for (int mu = 0; mu < 4; ++mu) {
                        for (int rho = 1; rho < 4; ++rho) {
                            for (int eta = 1; eta < 4; ++eta) {
                                const double p = p6(mu, mu, rho, sigma, eta, 0);
                                if (p != 0.0) lhs[sigma] += p * h * der.hess[rho - 1][eta - 1];
                            }
                        }
                    }
                }
                const double scalar_lhs = (1.0 - 2.0 * h) * lap;
                max_temporal = std::max(max_temporal, std::abs(-lhs[0] - scalar_lhs));
                for (int sigma = 1; sigma < 4; ++sigma) max_spatial = std::max(max_spatial, std::abs(lhs[sigma]));
                max_lap = std::max(max_lap, std::abs(lap));
                max_scalar_lhs = std::max(max_scalar_lhs, std::abs(scalar_lhs));
                max_dropped = std::max(max_dropped, std::abs(2.0 / c2 * dot(grad_phi_grav, der.grad)));
            }
        }
    }
    MaxwellReductionReport out;
    out.temporal_residual = max_lap > 0.0 ? max_temporal / max_lap : max_temporal;
    out.spatial_residual = max_spatial;
    out.dropped_gradient_ratio = max_scalar_lhs > 0.0 ? max_dropped / max_scalar_lhs : 0.0;
    return out;
}

}  // namespace ugatom
