#include "ugatom/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ugatom/error.hpp"

namespace ugatom {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (i != j) sum += std::norm(a[i][j]);
    return std::sqrt(sum);
}

double frobenius(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& row : a)
        for (const auto& v : row) sum += std::norm(v);
    return std::sqrt(sum);
}

}  // namespace

HermitianEigen jacobi_eigen(const ComplexMatrix& input) {
    const std::size_t n = input.size();
    for (const auto& row : input) {
        if (row.size() != n) throw DomainError("jacobi_eigen: matrix is not square");
    }
    const double scale = frobenius(input);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (std::abs(input[i][j] - std::conj(input[j][i])) > 1e-12 * std::max(scale, 1e-300)) {
                throw DomainError("jacobi_eigen: matrix is not Hermitian");
            }
        }
    }

    ComplexMatrix a = input;
    ComplexMatrix v(n, std::vector<std::complex<double>>(n));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;

    constexpr int kMaxSweeps = 60;
    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= 1e-15 * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq_abs = std::abs(a[p][q]);
                if (apq_abs == 0.0) continue;
                // phase e^{-i phi} on column q makes the pivot real and positive
                const std::complex<double> phase = std::conj(a[p][q]) / apq_abs;
                const double app = a[p][p].real();
                const double aqq = a[q][q].real();
                const double tau = (aqq - app) / (2.0 * apq_abs);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // J = U R, U = diag(..1.., phase at q), R = [[c, s], [-s, c]] in the (p, q) plane
                const std::complex<double> jpp = c;
                const std::complex<double> jpq = s;
                const std::complex<double> jqp = -s * phase;
                const std::complex<double> jqq = c * phase;
                // A <- A J
                for (std::size_t k = 0; k < n; ++k) {
                    const auto akp = a[k][p];
                    const auto akq = a[k][q];
                    a[k][p] = akp * jpp + akq * jqp;
                    a[k][q] = akp * jpq + akq * jqq;
                }
                // A <- J^H A
                for (std::size_t k = 0; k < n; ++k) {
                    const auto apk = a[p][k];
                    const auto aqk = a[q][k];
                    a[p][k] = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a[q][k] = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a[p][q] = a[q][p] = 0.0;
                a[p][p] = a[p][p].real();
                a[q][q] = a[q][q].real();
                for (std::size_t k = 0; k < n; ++k) {
                    const auto vkp = v[k][p];
                    const auto vkq = v[k][q];
                    v[k][p] = vkp * jpp + vkq * jqp;
                    v[k][q] = vkp * jpq + vkq * jqq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps) throw NumericError("jacobi_eigen: no convergence");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a[x][x].real() < a[y][y].real(); });
    HermitianEigen out;
    out.values.resize(n);
    out.vectors.assign(n, std::vector<std::complex<double>>(n));
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a[order[k]][order[k]].real();
        for (std::size_t i = 0; i < n; ++i) out.vectors[i][k] = v[i][order[k]];
    }
    return out;
}

}  // namespace ugatom
