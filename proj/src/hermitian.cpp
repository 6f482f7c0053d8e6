#include "maxcon/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maxcon {

namespace {

double offdiag_mass(const std::vector<std::complex<double>>& a, int dim) {
  double sum = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) sum += std::norm(a[i * dim + j]);
  return std::sqrt(2.0 * sum);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, int dim) {
  using cd = std::complex<double>;
  if (dim < 1 || static_cast<int>(a.size()) != dim * dim)
    throw std::invalid_argument("hermitian_eigenvalues: bad dimension");

  constexpr double tol = 1e-12;
  constexpr int max_sweeps = 60;

  auto at = [&](int i, int j) -> cd& { return a[i * dim + j]; };

  for (int sweep = 0; sweep < max_sweeps && offdiag_mass(a, dim) >= tol; ++sweep) {
    for (int p = 0; p < dim; ++p) {
      for (int q = p + 1; q < dim; ++q) {
        const cd apq = at(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) {
          at(p, q) = at(q, p) = 0.0;
          continue;
        }
        // Factor out the phase so the (p,q) block becomes real, then apply
        // the usual symmetric Givens rotation. Combined unitary:
        //   U(p,p)=c  U(p,q)=-s  U(q,p)=s*conj(phi)  U(q,q)=c*conj(phi)
        // with apq = r*phi.
        const cd phi = apq / r;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        // Small root of t^2 - 2*theta*t - 1 = 0 for this Givens convention.
        const double theta = (aqq - app) / (2.0 * r);
        double t = -1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int i = 0; i < dim; ++i) {
          if (i == p || i == q) continue;
          const cd aip = at(i, p);
          const cd aiq = at(i, q);
          at(i, p) = c * aip + s * std::conj(phi) * aiq;
          at(i, q) = -s * aip + c * std::conj(phi) * aiq;
          at(p, i) = std::conj(at(i, p));
          at(q, i) = std::conj(at(i, q));
        }
        at(p, p) = c * c * app + 2.0 * c * s * r + s * s * aqq;
        at(q, q) = s * s * app - 2.0 * c * s * r + c * c * aqq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(dim);
  for (int i = 0; i < dim; ++i) eig[i] = at(i, i).real();
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

}  // namespace maxcon
