// sequences.hpp -- generators for constant-amplitude zero-autocorrelation
// (CAZAC) sequences and the verifier that certifies the two properties.
//
// Families: quadratic chirps (Chu, P4, Wiener), the Bjorck sequences built
// from Legendre symbols, square-length Bjorck-Saffari lifts, Milewski
// interleavings, and Kronecker products of coprime-length seeds.
//
// Precondition violations throw std::invalid_argument with a message naming
// the violated requirement.
#pragma once

#include "gaborforge/types.hpp"

namespace gf {

// Chu sequence of odd length N: entries[k] = exp(i*pi*k*(k-1)/N).
Sequence gen_chu(long n);

// P4 (odd-perfect) polyphase sequence, any length N >= 1:
// entries[k] = exp(i*pi*k*(k-N)/N).
Sequence gen_p4(long n);

// Wiener chirp of length N with multiplier s.
//  N odd:  entries[k] = exp(2*pi*i*s*k^2/N),  gcd(s, N) = 1.
//  N even: entries[k] = exp(pi*i*s*k^2/N),    gcd(s, 2N) = 1.
Sequence gen_wiener(long n, long s);

// Bjorck sequence of odd prime length p, built from Legendre symbols:
//  p = 1 mod 4: entries[k] = exp(i*theta*legendre(k,p)),
//               theta = arccos(1/(1+sqrt(p)));
//  p = 3 mod 4: entries[k] = exp(i*theta*[legendre(k,p) == -1]),
//               theta = arccos((1-p)/(1+p)).
Sequence gen_bjorck(long p);

// Legendre symbol (k/p) in {-1,0,+1} for odd prime p, via Euler's criterion.
int legendre_symbol(long k, long p);

// Deterministic primality test (trial division; inputs here are small).
bool is_prime(long n);

// Square-length lift: given a length-N unimodular seed c and a permutation
// sigma of {0..N-1}, produce the length-N^2 sequence
//   phi[r*N + h] = c[h] * exp(2*pi*i*r*sigma(h)/N),  0 <= r,h < N.
// The result is CAZAC whenever c is CAZAC.
Sequence gen_bjorck_saffari_sq(const cvec& c, const std::vector<long>& sigma);

// Milewski interleaving: given a length-M unimodular CAZAC seed v and N >= 1,
// produce the length M*N^2 sequence
//   phi[a*N + b] = v[a mod M] * exp(2*pi*i*a*b/(M*N)),
// with 0 <= a < M*N and 0 <= b < N.
Sequence gen_milewski(const cvec& v, long n);

// Kronecker product: given seeds u (length M) and v (length N) with
// gcd(M, N) = 1, produce the length M*N sequence
//   phi[r*N + s] = u[r] * v[s],  0 <= r < M, 0 <= s < N.
// Indexing is well defined on Z/MN because r*N+s runs over all residues.
Sequence gen_kronecker(const cvec& u, const cvec& v);

// Checks constant amplitude (each | |phi[k]| - 1 | <= unit_tol) and zero
// autocorrelation (each |sum_k phi[k+m] conj(phi[k])| <= zero_tol * N for
// m != 0), and reports the extreme deviations.
CazacReport verify_cazac(const Sequence& phi,
                         double unit_tol = tol::unit,
                         double zero_tol = tol::zero);

// Divides the sequence by entry 0 so the leading entry becomes 1; for
// constant-amplitude inputs this is rotation by a unimodular constant.  The
// result is tagged Family::custom since closed forms keyed to the original
// construction no longer apply verbatim.  Errors if entry 0 is 0.
Sequence normalize_rotation(const Sequence& phi);

}  // namespace gf
