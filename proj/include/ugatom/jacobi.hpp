#pragma once

#include <complex>
#include <vector>

namespace ugatom {

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

struct HermitianEigen {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // vectors[i][k]: component i of eigenvector k
};

// Cyclic Jacobi diagonalisation of a Hermitian matrix. Throws DomainError if the
// input is not square or not Hermitian to 1e-12 relative, NumericError if the sweeps
// do not converge.
HermitianEigen jacobi_eigen(const ComplexMatrix& a);

}  // namespace ugatom
