// hermitian.hpp
// Eigenvalues of small complex Hermitian matrices by cyclic Jacobi.

#pragma once

#include <complex>
#include <vector>

namespace maxcon {

// Eigenvalues of a dim x dim Hermitian matrix (row-major), descending.
// Cyclic Jacobi sweeps; converges when the off-diagonal Frobenius mass
// drops below 1e-12. Intended for dim <= 32.
std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, int dim);

}  // namespace maxcon
