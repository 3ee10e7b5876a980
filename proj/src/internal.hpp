// internal.hpp -- small helpers shared by the library's translation units.
#pragma once

#include "gaborforge/types.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gf::detail {

// Euclidean remainder: imod(x, n) in [0, n) for n > 0 and any x.
inline long imod(long x, long n) {
  long r = x % n;
  return r < 0 ? r + n : r;
}

// exp(i * theta)
inline cplx unit(double theta) { return std::polar(1.0, theta); }

// Table of exp(-2*pi*i*t/n) for t = 0..n-1; index with imod'ed products to
// avoid per-term trig in O(N^2)+ loops.
inline cvec twiddle_table(long n) {
  cvec w(static_cast<size_t>(n));
  for (long t = 0; t < n; ++t)
    w[static_cast<size_t>(t)] = unit(-2.0 * M_PI * static_cast<double>(t) /
                                     static_cast<double>(n));
  return w;
}

// <x, y> = sum_k x[k] * conj(y[k])
inline cplx inner(const cvec& x, const cvec& y) {
  cplx acc = 0.0;
  for (size_t k = 0; k < x.size(); ++k) acc += x[k] * std::conj(y[k]);
  return acc;
}

inline double norm_sq(const cvec& x) {
  double acc = 0.0;
  for (const cplx& v : x) acc += std::norm(v);
  return acc;
}

inline void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace gf::detail
