// equivalence.hpp -- two classical reformulations of the CAZAC property:
//
//   * phi is CAZAC  <=>  the circulant matrix with first row phi is a
//     (complex) Hadamard matrix, i.e. unimodular entries and H H^* = N Id.
//   * phi is CAZAC  <=>  the consecutive-entry ratios z_k = phi[k+1]/phi[k]
//     solve the cyclic N-root system: every cyclic windowed product sum
//     sum_j z_j z_{j+1} ... z_{j+k-1} vanishes for k = 1..N-1 and the full
//     product z_0 z_1 ... z_{N-1} equals 1.
#pragma once

#include "gaborforge/types.hpp"

namespace gf {

// Circulant matrix stored by its first row; row i is the first row cyclically
// shifted i places to the right: entry(i, j) = first_row[(j - i) mod N].
struct CirculantMatrix {
  long n = 0;
  cvec first_row;
};

CirculantMatrix circulant_from(const Sequence& phi);
cplx circulant_entry(const CirculantMatrix& h, long i, long j);

struct HadamardResult {
  bool is_hadamard = false;
  double max_unimodularity_deviation = 0.0;  // max | |H_ij| - 1 |
  double max_orthogonality_residual = 0.0;   // max |(H H^* - N Id)_ij|
};

// Checks the two Hadamard conditions by materializing H and forming H H^*.
HadamardResult is_hadamard(const CirculantMatrix& h,
                           double unit_tol = tol::unit,
                           double zero_tol = tol::zero);

// The cyclic N-root candidate extracted from a nowhere-zero sequence:
//   z[k] = phi[(k+1) mod N] / phi[k].
struct CyclicRoot {
  long n = 0;
  cvec z;
};

CyclicRoot to_cyclic_root(const Sequence& phi);

// Rebuilds a sequence from a cyclic root: phi[0] = 1, phi[k] = phi[k-1]*z[k-1].
// Recovers the input of to_cyclic_root up to the global phase phi[0].
Sequence from_cyclic_root(const CyclicRoot& root);

struct CyclicRootCheck {
  bool ok = false;
  // residuals[k-1] for k = 1..N-1: |sum_j prod_{t<k} z[(j+t) mod N]|;
  // residuals[N-1]: |prod_j z[j] - 1|.
  std::vector<double> residuals;
};

// Verifies the cyclic N-root system directly on z.
CyclicRootCheck verify_cyclic_root(const CyclicRoot& root,
                                   double zero_tol = tol::zero);

}  // namespace gf
