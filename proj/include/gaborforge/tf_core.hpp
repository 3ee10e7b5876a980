// tf_core.hpp -- elementary time-frequency operations on length-N signals:
// cyclic translation, modulation, the discrete Fourier transform, the
// short-time Fourier transform, and the discrete periodic ambiguity function
// (DPAF).
//
// Conventions:
//   translate(x, k)[j] = x[j - k mod N]
//   modulate(x, l)[j]  = exp(2*pi*i*j*l/N) * x[j]
//   dft(x)[l]          = sum_j x[j] exp(-2*pi*i*j*l/N)      (no 1/N)
//   idft(X)[j]         = (1/N) sum_l X[l] exp(2*pi*i*j*l/N)
//   dpaf(x)[m][n]      = (1/N) sum_k x[k+m] conj(x[k]) exp(-2*pi*i*n*k/N)
#pragma once

#include "gaborforge/lattice.hpp"
#include "gaborforge/types.hpp"

namespace gf {

cvec translate(const cvec& x, long k);
cvec modulate(const cvec& x, long l);

// The composite shift modulate(translate(x, k), l), the building block of
// Gabor systems.
cvec tf_shift(const cvec& x, long k, long l);

cvec dft(const cvec& x);
cvec idft(const cvec& x);

// Short-time Fourier transform of phi against window psi:
//   values[m][n] = sum_k phi[k] conj(psi[k - m]) exp(-2*pi*i*n*k/N)
//                = <phi, tf_shift(psi, m, n)>.
struct STFTMatrix {
  long n = 0;
  std::vector<cvec> values;  // values[m][n], both indices 0..n-1
};

STFTMatrix stft(const cvec& phi, const cvec& psi);

// Inverts the STFT for a nonzero window:
//   phi[j] = (1/(N*||psi||^2)) sum_{m,n} values[m][n] tf_shift(psi, m, n)[j].
cvec istft(const STFTMatrix& v, const cvec& psi);

// Discrete periodic ambiguity function, normalized by 1/N.  Row m holds the
// spectrum of the lag-m correlation product k -> x[k+m] conj(x[k]).
struct DPAFMatrix {
  long n = 0;
  std::vector<cvec> values;  // values[m][n]
};

DPAFMatrix dpaf(const cvec& x);
DPAFMatrix dpaf(const Sequence& phi);

// Closed-form DPAF entry for the structured families (chu, p4, wiener,
// bjorck_saffari_sq, milewski, kronecker), evaluated without touching the
// sequence entries.  Errors for families with no implemented closed form.
cplx dpaf_closed(const Sequence& phi, long m, long n);

// Full closed-form table; shares per-family precomputation (e.g. the seed's
// own DPAF) across entries, so prefer this for whole-matrix sweeps.
DPAFMatrix dpaf_closed_matrix(const Sequence& phi);

// A nonzero DPAF value found where a sparsity hypothesis demands zero.
struct Witness {
  long m = 0;
  long n = 0;
  cplx value;
};

// Scans the points of `adjoint` other than (0,0) and reports every DPAF
// value with |value| > witness_tol (absolute).  Empty result means the DPAF
// is supported, within tolerance, on the complement plus the origin.
std::vector<Witness> check_sparse(const DPAFMatrix& a,
                                  const TFSubgroup& adjoint,
                                  double witness_tol = tol::zero);

}  // namespace gf
