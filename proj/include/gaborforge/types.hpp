// types.hpp -- shared scalar/vector types, sequence families, and the default
// numerical tolerances used across the gaborforge library.
//
// All signals are length-N complex vectors indexed mod N.  Inner products use
// the convention <x,y> = sum_k x[k] * conj(y[k]).
#pragma once

#include <complex>
#include <string>
#include <vector>

namespace gf {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Default tolerances.  "zero" thresholds on N-term sums are applied
// relatively, i.e. scaled by N (see call sites).
namespace tol {
inline constexpr double unit = 1e-9;  // |.|=1 amplitude checks
inline constexpr double zero = 1e-9;  // near-zero checks on sums, per term
inline constexpr double rank = 1e-8;  // eigenvalue cut for numerical rank, relative to the largest
inline constexpr double eig = 1e-8;   // relative spread for "all equal" eigenvalue tests
}  // namespace tol

enum class Family {
  chu,
  p4,
  wiener,
  bjorck,
  bjorck_saffari_sq,  // square-length lift of a shorter constant-amplitude zero-autocorrelation seed
  milewski,           // length M*N^2 interleaving of a length-M seed with a chirp
  kronecker,          // coordinatewise product of two coprime-length seeds
  custom,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// Construction data carried alongside generated sequences so that per-family
// closed-form ambiguity evaluation and serialization can recover how the
// sequence was built.  Only the fields relevant to `family` are meaningful.
struct SeqParams {
  long s = 0;        // wiener chirp multiplier
  long p = 0;        // bjorck prime length
  long inner_n = 0;  // seed-period N for bjorck_saffari_sq / milewski
  cvec c;            // bjorck_saffari_sq seed vector (length inner_n)
  std::vector<long> sigma;  // bjorck_saffari_sq permutation of {0..inner_n-1}
  cvec u;            // kronecker left factor
  cvec v;            // kronecker right factor / milewski seed (length M)
};

struct Sequence {
  long n = 0;  // period
  cvec entries;
  Family family = Family::custom;
  SeqParams params;
};

// Result of testing constant amplitude (CA) and zero autocorrelation (ZAC).
struct CazacReport {
  bool is_ca = false;
  bool is_zac = false;
  double max_amplitude_deviation = 0.0;      // max_k | |phi[k]| - 1 |
  double max_autocorrelation_magnitude = 0.0;  // max over shifts m != 0
};

}  // namespace gf
