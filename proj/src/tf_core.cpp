// tf_core.cpp -- translation/modulation, DFT, STFT, and the discrete
// periodic ambiguity function with per-family closed-form evaluation.

#include "gaborforge/tf_core.hpp"

#include "internal.hpp"

#include <algorithm>
#include <cmath>

namespace gf {

using detail::imod;
using detail::norm_sq;
using detail::require;
using detail::twiddle_table;
using detail::unit;

cvec translate(const cvec& x, long k) {
  const long n = static_cast<long>(x.size());
  require(n >= 1, "signal must be nonempty");
  cvec out(x.size());
  for (long j = 0; j < n; ++j)
    out[static_cast<size_t>(j)] = x[static_cast<size_t>(imod(j - k, n))];
  return out;
}

cvec modulate(const cvec& x, long l) {
  const long n = static_cast<long>(x.size());
  require(n >= 1, "signal must be nonempty");
  cvec out(x.size());
  for (long j = 0; j < n; ++j)
    out[static_cast<size_t>(j)] =
        unit(2.0 * M_PI * static_cast<double>(imod(j * l, n)) /
             static_cast<double>(n)) *
        x[static_cast<size_t>(j)];
  return out;
}

cvec tf_shift(const cvec& x, long k, long l) {
  return modulate(translate(x, k), l);
}

cvec dft(const cvec& x) {
  const long n = static_cast<long>(x.size());
  require(n >= 1, "signal must be nonempty");
  const cvec w = twiddle_table(n);
  cvec out(x.size());
  for (long l = 0; l < n; ++l) {
    cplx acc = 0.0;
    for (long j = 0; j < n; ++j)
      acc += x[static_cast<size_t>(j)] * w[static_cast<size_t>(imod(j * l, n))];
    out[static_cast<size_t>(l)] = acc;
  }
  return out;
}

cvec idft(const cvec& x) {
  const long n = static_cast<long>(x.size());
  require(n >= 1, "signal must be nonempty");
  const cvec w = twiddle_table(n);
  cvec out(x.size());
  for (long j = 0; j < n; ++j) {
    cplx acc = 0.0;
    for (long l = 0; l < n; ++l)
      acc += x[static_cast<size_t>(l)] *
             std::conj(w[static_cast<size_t>(imod(j * l, n))]);
    out[static_cast<size_t>(j)] = acc / static_cast<double>(n);
  }
  return out;
}

STFTMatrix stft(const cvec& phi, const cvec& psi) {
  const long n = static_cast<long>(phi.size());
  require(n >= 1, "signal must be nonempty");
  require(psi.size() == phi.size(), "window and signal lengths must match");
  STFTMatrix v;
  v.n = n;
  v.values.resize(static_cast<size_t>(n));
  cvec g(static_cast<size_t>(n));
  for (long m = 0; m < n; ++m) {
    // row m is the spectrum of phi against the m-translated window
    for (long k = 0; k < n; ++k)
      g[static_cast<size_t>(k)] =
          phi[static_cast<size_t>(k)] *
          std::conj(psi[static_cast<size_t>(imod(k - m, n))]);
    v.values[static_cast<size_t>(m)] = dft(g);
  }
  return v;
}

cvec istft(const STFTMatrix& v, const cvec& psi) {
  const long n = v.n;
  require(n >= 1 && static_cast<long>(v.values.size()) == n,
          "STFT table must be N x N");
  require(static_cast<long>(psi.size()) == n,
          "window and STFT dimensions must match");
  const double psi_energy = norm_sq(psi);
  require(psi_energy > 0.0, "window must be nonzero");
  cvec out(static_cast<size_t>(n), 0.0);
  for (long m = 0; m < n; ++m) {
    require(static_cast<long>(v.values[static_cast<size_t>(m)].size()) == n,
            "STFT table must be N x N");
    // sum_n values[m][n] e^{2 pi i n k / N} collapses to an inverse DFT row
    cvec row = idft(v.values[static_cast<size_t>(m)]);
    for (long k = 0; k < n; ++k)
      out[static_cast<size_t>(k)] +=
          row[static_cast<size_t>(k)] * static_cast<double>(n) *
          psi[static_cast<size_t>(imod(k - m, n))];
  }
  for (cplx& e : out) e /= static_cast<double>(n) * psi_energy;
  return out;
}

DPAFMatrix dpaf(const cvec& x) {
  const long n = static_cast<long>(x.size());
  require(n >= 1, "signal must be nonempty");
  DPAFMatrix a;
  a.n = n;
  a.values.resize(static_cast<size_t>(n));
  cvec r(static_cast<size_t>(n));
  for (long m = 0; m < n; ++m) {
    // lag product at shift m, then its spectrum
    for (long k = 0; k < n; ++k)
      r[static_cast<size_t>(k)] = x[static_cast<size_t>(imod(k + m, n))] *
                                  std::conj(x[static_cast<size_t>(k)]);
    a.values[static_cast<size_t>(m)] = dft(r);
    for (cplx& e : a.values[static_cast<size_t>(m)])
      e /= static_cast<double>(n);
  }
  return a;
}

DPAFMatrix dpaf(const Sequence& phi) {
  require(phi.n >= 1 && static_cast<long>(phi.entries.size()) == phi.n,
          "sequence entries must have length N >= 1");
  return dpaf(phi.entries);
}

namespace {

// Closed forms for the quadratic-chirp families.  All indices are reduced to
// representatives in [0, N); each value below is N-periodic at the stated
// parities, so the representative choice is immaterial.
cplx closed_chirp(const Sequence& phi, long m, long n) {
  const long nn = phi.n;
  m = imod(m, nn);
  n = imod(n, nn);
  const double nd = static_cast<double>(nn);
  const double md = static_cast<double>(m);
  switch (phi.family) {
    case Family::chu:
      // support on the diagonal n == m
      if (m != n) return 0.0;
      return unit(M_PI * (md * md - md) / nd);
    case Family::p4:
      if (m != n) return 0.0;
      return (m % 2 == 0 ? 1.0 : -1.0) * unit(M_PI * md * md / nd);
    case Family::wiener: {
      const long s = phi.params.s;
      if (nn % 2 == 1) {
        // support on the line n == 2 s m
        if (imod(2 * s * m - n, nn) != 0) return 0.0;
        return unit(2.0 * M_PI * static_cast<double>(s) * md * md / nd);
      }
      // support on the line n == s m
      if (imod(s * m - n, nn) != 0) return 0.0;
      return unit(M_PI * static_cast<double>(s) * md * md / nd);
    }
    default: break;
  }
  throw std::invalid_argument("closed_chirp called for a non-chirp family");
}

cplx closed_bjorck_saffari(const Sequence& phi, long m, long n) {
  const long nin = phi.params.inner_n;  // seed period; total length nin^2
  const long len = phi.n;
  m = imod(m, len);
  n = imod(n, len);
  const long s = m / nin, t = m % nin;
  const long k = n / nin, l = n % nin;
  const cvec& c = phi.params.c;
  const std::vector<long>& sigma = phi.params.sigma;
  cplx acc = 0.0;
  for (long h = 0; h < nin; ++h) {
    const long ht = h + t;
    const long carry = ht / nin;          // 0 or 1
    const long hw = ht % nin;             // wrapped seed index
    // the row sum collapses unless the permuted offsets cancel the
    // modulation l exactly
    if (imod(sigma[static_cast<size_t>(hw)] - sigma[static_cast<size_t>(h)] -
                 l,
             nin) != 0)
      continue;
    double theta =
        2.0 * M_PI * static_cast<double>(s + carry) *
            static_cast<double>(sigma[static_cast<size_t>(hw)]) /
            static_cast<double>(nin) -
        2.0 * M_PI * static_cast<double>(h * k) / static_cast<double>(nin) -
        2.0 * M_PI * static_cast<double>(h * l) / static_cast<double>(len);
    acc += c[static_cast<size_t>(hw)] * std::conj(c[static_cast<size_t>(h)]) *
           unit(theta);
  }
  return acc / static_cast<double>(nin);
}

cplx closed_milewski(const Sequence& phi, long m, long s,
                     const DPAFMatrix& seed_dpaf) {
  const long nin = phi.params.inner_n;                   // N
  const long mm = static_cast<long>(phi.params.v.size());  // M
  const long len = phi.n;                                // M N^2
  m = imod(m, len);
  s = imod(s, len);
  const long k = m / nin, l = m % nin;
  // the a-sum vanishes unless the frequency matches the shift mod N
  if (imod(s - l, nin) != 0) return 0.0;
  const long w = (s - l) / nin;  // exact by the selector above
  cplx acc = 0.0;
  for (long b = 0; b < nin; ++b) {
    const long carry = (b + l) / nin;  // 0 or 1
    const long bw = b + l - carry * nin;
    double theta = 2.0 * M_PI * static_cast<double>(k + carry) *
                       static_cast<double>(bw) /
                       static_cast<double>(mm * nin) -
                   2.0 * M_PI * static_cast<double>(b) *
                       static_cast<double>(s) / static_cast<double>(len);
    acc += unit(theta) *
           seed_dpaf.values[static_cast<size_t>(imod(k + carry, mm))]
                           [static_cast<size_t>(imod(w + carry, mm))];
  }
  return acc / static_cast<double>(nin);
}

cplx closed_kronecker(const Sequence& phi, long m, long l,
                      const DPAFMatrix& u_dpaf) {
  const long mu = static_cast<long>(phi.params.u.size());  // M
  const long nv = static_cast<long>(phi.params.v.size());  // N
  const long len = phi.n;                                  // M N
  m = imod(m, len);
  l = imod(l, len);
  const long r = m / nv, s = m % nv;
  const cvec& v = phi.params.v;
  cplx acc = 0.0;
  for (long k = 0; k < nv; ++k) {
    const long carry = (k + s) / nv;  // 0 or 1
    const long kw = (k + s) % nv;
    acc += v[static_cast<size_t>(kw)] * std::conj(v[static_cast<size_t>(k)]) *
           unit(-2.0 * M_PI * static_cast<double>(k) * static_cast<double>(l) /
                static_cast<double>(len)) *
           u_dpaf.values[static_cast<size_t>(imod(r + carry, mu))]
                        [static_cast<size_t>(imod(l, mu))];
  }
  return acc / static_cast<double>(nv);
}

void check_generated(const Sequence& phi) {
  require(phi.n >= 1 && static_cast<long>(phi.entries.size()) == phi.n,
          "sequence entries must have length N >= 1");
}

}  // namespace

cplx dpaf_closed(const Sequence& phi, long m, long n) {
  check_generated(phi);
  switch (phi.family) {
    case Family::chu:
    case Family::p4:
    case Family::wiener:
      return closed_chirp(phi, m, n);
    case Family::bjorck_saffari_sq:
      require(phi.params.inner_n >= 1 &&
                  phi.n == phi.params.inner_n * phi.params.inner_n,
              "bjorck_saffari_sq sequence is missing its construction data");
      return closed_bjorck_saffari(phi, m, n);
    case Family::milewski: {
      const long mm = static_cast<long>(phi.params.v.size());
      require(mm >= 1 && phi.params.inner_n >= 1 &&
                  phi.n == mm * phi.params.inner_n * phi.params.inner_n,
              "milewski sequence is missing its construction data");
      return closed_milewski(phi, m, n, dpaf(phi.params.v));
    }
    case Family::kronecker: {
      require(!phi.params.u.empty() && !phi.params.v.empty() &&
                  phi.n == static_cast<long>(phi.params.u.size() *
                                             phi.params.v.size()),
              "kronecker sequence is missing its construction data");
      return closed_kronecker(phi, m, n, dpaf(phi.params.u));
    }
    default:
      throw std::invalid_argument(
          "no closed-form ambiguity function for this family");
  }
}

DPAFMatrix dpaf_closed_matrix(const Sequence& phi) {
  check_generated(phi);
  const long n = phi.n;
  DPAFMatrix a;
  a.n = n;
  a.values.assign(static_cast<size_t>(n), cvec(static_cast<size_t>(n)));
  // seed DPAF shared across all entries where the closed form needs one
  DPAFMatrix seed;
  if (phi.family == Family::milewski)
    seed = dpaf(phi.params.v);
  else if (phi.family == Family::kronecker)
    seed = dpaf(phi.params.u);
  for (long m = 0; m < n; ++m)
    for (long f = 0; f < n; ++f) {
      cplx val;
      switch (phi.family) {
        case Family::chu:
        case Family::p4:
        case Family::wiener:
          val = closed_chirp(phi, m, f);
          break;
        case Family::bjorck_saffari_sq:
          val = closed_bjorck_saffari(phi, m, f);
          break;
        case Family::milewski:
          val = closed_milewski(phi, m, f, seed);
          break;
        case Family::kronecker:
          val = closed_kronecker(phi, m, f, seed);
          break;
        default:
          throw std::invalid_argument(
              "no closed-form ambiguity function for this family");
      }
      a.values[static_cast<size_t>(m)][static_cast<size_t>(f)] = val;
    }
  return a;
}

std::vector<Witness> check_sparse(const DPAFMatrix& a,
                                  const TFSubgroup& adjoint,
                                  double witness_tol) {
  require(a.n == adjoint.n, "DPAF and subgroup moduli must match");
  std::vector<Witness> out;
  for (const auto& [m, n] : adjoint.elements) {
    if (m == 0 && n == 0) continue;
    const cplx v = a.values[static_cast<size_t>(m)][static_cast<size_t>(n)];
    if (std::abs(v) > witness_tol) out.push_back({m, n, v});
  }
  return out;
}

}  // namespace gf
