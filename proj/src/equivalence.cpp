// equivalence.cpp -- circulant-Hadamard and cyclic N-root reformulations of
// the CAZAC property.

#include "gaborforge/equivalence.hpp"

#include "internal.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace gf {

using detail::imod;
using detail::require;

CirculantMatrix circulant_from(const Sequence& phi) {
  require(phi.n >= 1 && static_cast<long>(phi.entries.size()) == phi.n,
          "sequence entries must have length N >= 1");
  return {phi.n, phi.entries};
}

cplx circulant_entry(const CirculantMatrix& h, long i, long j) {
  require(h.n >= 1 && static_cast<long>(h.first_row.size()) == h.n,
          "circulant first row must have length N >= 1");
  return h.first_row[static_cast<size_t>(imod(j - i, h.n))];
}

HadamardResult is_hadamard(const CirculantMatrix& h, double unit_tol,
                           double zero_tol) {
  require(h.n >= 1 && static_cast<long>(h.first_row.size()) == h.n,
          "circulant first row must have length N >= 1");
  const long n = h.n;
  Eigen::MatrixXcd m(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) m(i, j) = circulant_entry(h, i, j);

  HadamardResult res;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      res.max_unimodularity_deviation =
          std::max(res.max_unimodularity_deviation,
                   std::abs(std::abs(m(i, j)) - 1.0));

  const Eigen::MatrixXcd prod = m * m.adjoint();
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const cplx expected = i == j ? cplx(static_cast<double>(n), 0.0)
                                   : cplx(0.0, 0.0);
      res.max_orthogonality_residual = std::max(
          res.max_orthogonality_residual, std::abs(prod(i, j) - expected));
    }

  // rows of the product are N-term sums, so the zero test scales with N
  res.is_hadamard =
      res.max_unimodularity_deviation <= unit_tol &&
      res.max_orthogonality_residual <= zero_tol * static_cast<double>(n);
  return res;
}

CyclicRoot to_cyclic_root(const Sequence& phi) {
  require(phi.n >= 1 && static_cast<long>(phi.entries.size()) == phi.n,
          "sequence entries must have length N >= 1");
  for (const cplx& e : phi.entries)
    require(std::abs(e) > 0.0, "sequence entries must all be nonzero");
  CyclicRoot root;
  root.n = phi.n;
  root.z.resize(phi.entries.size());
  for (long k = 0; k < phi.n; ++k)
    root.z[static_cast<size_t>(k)] =
        phi.entries[static_cast<size_t>(imod(k + 1, phi.n))] /
        phi.entries[static_cast<size_t>(k)];
  return root;
}

Sequence from_cyclic_root(const CyclicRoot& root) {
  require(root.n >= 1 && static_cast<long>(root.z.size()) == root.n,
          "cyclic root must have length N >= 1");
  Sequence phi;
  phi.n = root.n;
  phi.family = Family::custom;
  phi.entries.resize(root.z.size());
  phi.entries[0] = 1.0;
  for (long k = 1; k < root.n; ++k)
    phi.entries[static_cast<size_t>(k)] =
        phi.entries[static_cast<size_t>(k - 1)] *
        root.z[static_cast<size_t>(k - 1)];
  return phi;
}

CyclicRootCheck verify_cyclic_root(const CyclicRoot& root, double zero_tol) {
  require(root.n >= 1 && static_cast<long>(root.z.size()) == root.n,
          "cyclic root must have length N >= 1");
  const long n = root.n;
  CyclicRootCheck check;
  check.residuals.reserve(static_cast<size_t>(n));
  // windowed products: sum_j z_j z_{j+1} ... z_{j+k-1} must vanish
  for (long k = 1; k < n; ++k) {
    cplx acc = 0.0;
    for (long j = 0; j < n; ++j) {
      cplx prod = 1.0;
      for (long t = 0; t < k; ++t)
        prod *= root.z[static_cast<size_t>(imod(j + t, n))];
      acc += prod;
    }
    check.residuals.push_back(std::abs(acc));
  }
  // the full product must close the cycle at 1
  cplx full = 1.0;
  for (const cplx& z : root.z) full *= z;
  check.residuals.push_back(std::abs(full - cplx(1.0, 0.0)));
  double worst = 0.0;
  for (double r : check.residuals) worst = std::max(worst, r);
  check.ok = worst <= zero_tol * static_cast<double>(n);
  return check;
}

}  // namespace gf
