// sequences.cpp -- CAZAC sequence generators and the CA/ZAC verifier.

#include "gaborforge/sequences.hpp"

#include "internal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gf {

using detail::imod;
using detail::require;
using detail::unit;

const char* family_name(Family f) {
  switch (f) {
    case Family::chu: return "chu";
    case Family::p4: return "p4";
    case Family::wiener: return "wiener";
    case Family::bjorck: return "bjorck";
    case Family::bjorck_saffari_sq: return "bjorck_saffari_sq";
    case Family::milewski: return "milewski";
    case Family::kronecker: return "kronecker";
    case Family::custom: return "custom";
  }
  return "custom";
}

Family family_from_name(const std::string& name) {
  if (name == "chu") return Family::chu;
  if (name == "p4") return Family::p4;
  if (name == "wiener") return Family::wiener;
  if (name == "bjorck") return Family::bjorck;
  if (name == "bjorck_saffari_sq") return Family::bjorck_saffari_sq;
  if (name == "milewski") return Family::milewski;
  if (name == "kronecker") return Family::kronecker;
  if (name == "custom") return Family::custom;
  throw std::invalid_argument("unknown sequence family: " + name);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

long modpow(long base, long exp, long mod) {
  long result = 1;
  base = imod(base, mod);
  while (exp > 0) {
    if (exp & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return result;
}

}  // namespace

int legendre_symbol(long k, long p) {
  require(p > 2 && is_prime(p), "legendre_symbol requires an odd prime p");
  k = imod(k, p);
  if (k == 0) return 0;
  // Euler's criterion: k^((p-1)/2) is +1 or p-1 mod p.
  long e = modpow(k, (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

Sequence gen_chu(long n) {
  require(n >= 1, "N must be positive");
  require(n % 2 == 1, "N must be odd");
  Sequence phi;
  phi.n = n;
  phi.family = Family::chu;
  phi.entries.resize(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    // phase pi*k*(k-1)/N; k*(k-1) is even, so this is a root of unity of order N
    double theta = M_PI * static_cast<double>(k) * static_cast<double>(k - 1) /
                   static_cast<double>(n);
    phi.entries[static_cast<size_t>(k)] = unit(theta);
  }
  return phi;
}

Sequence gen_p4(long n) {
  require(n >= 1, "N must be positive");
  Sequence phi;
  phi.n = n;
  phi.family = Family::p4;
  phi.entries.resize(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    double theta = M_PI * static_cast<double>(k) * static_cast<double>(k - n) /
                   static_cast<double>(n);
    phi.entries[static_cast<size_t>(k)] = unit(theta);
  }
  return phi;
}

Sequence gen_wiener(long n, long s) {
  require(n >= 1, "N must be positive");
  if (n % 2 == 1) {
    require(std::gcd(s, n) == 1, "s must be coprime to N for odd N");
  } else {
    require(std::gcd(s, 2 * n) == 1, "s must be coprime to 2N for even N");
  }
  Sequence phi;
  phi.n = n;
  phi.family = Family::wiener;
  phi.params.s = s;
  phi.entries.resize(static_cast<size_t>(n));
  for (long k = 0; k < n; ++k) {
    double ksq = static_cast<double>(k) * static_cast<double>(k);
    // odd N: full-turn chirp exp(2*pi*i*s*k^2/N); even N: half-turn chirp
    double theta = (n % 2 == 1)
                       ? 2.0 * M_PI * static_cast<double>(s) * ksq /
                             static_cast<double>(n)
                       : M_PI * static_cast<double>(s) * ksq /
                             static_cast<double>(n);
    phi.entries[static_cast<size_t>(k)] = unit(theta);
  }
  return phi;
}

Sequence gen_bjorck(long p) {
  require(p > 2 && is_prime(p), "p must be an odd prime");
  Sequence phi;
  phi.n = p;
  phi.family = Family::bjorck;
  phi.params.p = p;
  phi.entries.resize(static_cast<size_t>(p));
  if (p % 4 == 1) {
    double theta = std::acos(1.0 / (1.0 + std::sqrt(static_cast<double>(p))));
    for (long k = 0; k < p; ++k)
      phi.entries[static_cast<size_t>(k)] =
          unit(theta * static_cast<double>(legendre_symbol(k, p)));
  } else {
    // p = 3 mod 4: phase theta only on the non-residues
    double theta = std::acos((1.0 - static_cast<double>(p)) /
                             (1.0 + static_cast<double>(p)));
    for (long k = 0; k < p; ++k)
      phi.entries[static_cast<size_t>(k)] =
          legendre_symbol(k, p) == -1 ? unit(theta) : cplx(1.0, 0.0);
  }
  return phi;
}

Sequence gen_bjorck_saffari_sq(const cvec& c, const std::vector<long>& sigma) {
  long n = static_cast<long>(c.size());
  require(n >= 1, "seed vector c must be nonempty");
  require(static_cast<long>(sigma.size()) == n,
          "sigma must be a permutation of {0..N-1} with N = len(c)");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (long v : sigma) {
    require(v >= 0 && v < n && !seen[static_cast<size_t>(v)],
            "sigma must be a permutation of {0..N-1} with N = len(c)");
    seen[static_cast<size_t>(v)] = true;
  }
  Sequence phi;
  phi.n = n * n;
  phi.family = Family::bjorck_saffari_sq;
  phi.params.inner_n = n;
  phi.params.c = c;
  phi.params.sigma = sigma;
  phi.entries.resize(static_cast<size_t>(n * n));
  for (long r = 0; r < n; ++r)
    for (long h = 0; h < n; ++h) {
      double theta = 2.0 * M_PI * static_cast<double>(r) *
                     static_cast<double>(sigma[static_cast<size_t>(h)]) /
                     static_cast<double>(n);
      phi.entries[static_cast<size_t>(r * n + h)] =
          c[static_cast<size_t>(h)] * unit(theta);
    }
  return phi;
}

Sequence gen_milewski(const cvec& v, long n) {
  long m = static_cast<long>(v.size());
  require(m >= 1, "seed vector v must be nonempty");
  require(n >= 1, "N must be positive");
  Sequence phi;
  phi.n = m * n * n;
  phi.family = Family::milewski;
  phi.params.inner_n = n;
  phi.params.v = v;
  phi.entries.resize(static_cast<size_t>(m * n * n));
  // index j = a*N + b with a in Z/MN, b in Z/N
  for (long a = 0; a < m * n; ++a)
    for (long b = 0; b < n; ++b) {
      double theta = 2.0 * M_PI * static_cast<double>(a) *
                     static_cast<double>(b) / static_cast<double>(m * n);
      phi.entries[static_cast<size_t>(a * n + b)] =
          v[static_cast<size_t>(a % m)] * unit(theta);
    }
  return phi;
}

Sequence gen_kronecker(const cvec& u, const cvec& v) {
  long m = static_cast<long>(u.size());
  long n = static_cast<long>(v.size());
  require(m >= 1 && n >= 1, "seed vectors must be nonempty");
  require(std::gcd(m, n) == 1, "seed lengths must be coprime");
  Sequence phi;
  phi.n = m * n;
  phi.family = Family::kronecker;
  phi.params.u = u;
  phi.params.v = v;
  phi.entries.resize(static_cast<size_t>(m * n));
  for (long r = 0; r < m; ++r)
    for (long s = 0; s < n; ++s)
      phi.entries[static_cast<size_t>(r * n + s)] =
          u[static_cast<size_t>(r)] * v[static_cast<size_t>(s)];
  return phi;
}

CazacReport verify_cazac(const Sequence& phi, double unit_tol,
                         double zero_tol) {
  require(phi.n >= 1 && static_cast<long>(phi.entries.size()) == phi.n,
          "sequence entries must have length N >= 1");
  const long n = phi.n;
  CazacReport report;
  for (const cplx& e : phi.entries)
    report.max_amplitude_deviation =
        std::max(report.max_amplitude_deviation, std::abs(std::abs(e) - 1.0));
  report.is_ca = report.max_amplitude_deviation <= unit_tol;
  for (long m = 1; m < n; ++m) {
    cplx acc = 0.0;
    for (long k = 0; k < n; ++k)
      acc += phi.entries[static_cast<size_t>(imod(k + m, n))] *
             std::conj(phi.entries[static_cast<size_t>(k)]);
    report.max_autocorrelation_magnitude =
        std::max(report.max_autocorrelation_magnitude, std::abs(acc));
  }
  // the autocorrelation is an N-term sum of unimodular products, so the
  // zero test scales with N
  report.is_zac = report.max_autocorrelation_magnitude <=
                  zero_tol * static_cast<double>(n);
  return report;
}

Sequence normalize_rotation(const Sequence& phi) {
  require(!phi.entries.empty(), "sequence entries must have length N >= 1");
  cplx e0 = phi.entries[0];
  require(std::abs(e0) > 0.0, "entry 0 must be nonzero");
  Sequence out;
  out.n = phi.n;
  out.family = Family::custom;
  out.entries.resize(phi.entries.size());
  // dividing by entry 0 pins phi[0] = 1; for unimodular entries this is
  // rotation by the unimodular constant conj(e0)
  for (size_t k = 0; k < phi.entries.size(); ++k)
    out.entries[k] = phi.entries[k] / e0;
  return out;
}

}  // namespace gf
