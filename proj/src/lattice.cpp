// lattice.cpp -- time-frequency subgroups of Z/N x Z/N and adjoints.

#include "gaborforge/lattice.hpp"

#include "internal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gf {

using detail::imod;
using detail::require;

namespace {

void sort_canonical(std::vector<std::pair<long, long>>& elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

}  // namespace

TFSubgroup subgroup_from_generators(
    long n, const std::vector<std::pair<long, long>>& generators) {
  require(n >= 1, "modulus N must be positive");
  std::set<std::pair<long, long>> closure;
  closure.insert({0, 0});
  // close under addition of generators; the group is finite so this settles
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& g : generators) {
      std::vector<std::pair<long, long>> fresh;
      for (const auto& e : closure) {
        std::pair<long, long> sum{imod(e.first + g.first, n),
                                  imod(e.second + g.second, n)};
        if (!closure.count(sum)) fresh.push_back(sum);
      }
      if (!fresh.empty()) {
        grew = true;
        closure.insert(fresh.begin(), fresh.end());
      }
    }
  }
  TFSubgroup lambda;
  lambda.n = n;
  lambda.elements.assign(closure.begin(), closure.end());
  sort_canonical(lambda.elements);
  if (generators.size() == 1) {
    lambda.structure = SubgroupStructure::cyclic;
    lambda.generator = {imod(generators[0].first, n),
                        imod(generators[0].second, n)};
  } else {
    lambda.structure = SubgroupStructure::explicit_list;
  }
  return lambda;
}

TFSubgroup product_subgroup(long n, long a, long b, long nprime) {
  require(a >= 1 && b >= 1 && nprime >= 1, "factors must be positive");
  require(n == a * b * nprime, "N must equal a*b*nprime");
  require(std::gcd(a, b) == 1, "a and b must be coprime");
  TFSubgroup lambda;
  lambda.n = n;
  lambda.structure = SubgroupStructure::product;
  lambda.a = a;
  lambda.b = b;
  lambda.nprime = nprime;
  // K = <a> has n/a = b*nprime elements, L = <b> has a*nprime
  lambda.elements.reserve(static_cast<size_t>((n / a) * (n / b)));
  for (long k = 0; k < n; k += a)
    for (long l = 0; l < n; l += b) lambda.elements.push_back({k, l});
  sort_canonical(lambda.elements);
  return lambda;
}

TFSubgroup explicit_subgroup(long n,
                             std::vector<std::pair<long, long>> elements) {
  require(n >= 1, "modulus N must be positive");
  TFSubgroup lambda;
  lambda.n = n;
  lambda.structure = SubgroupStructure::explicit_list;
  for (auto& e : elements) {
    e.first = imod(e.first, n);
    e.second = imod(e.second, n);
  }
  sort_canonical(elements);
  lambda.elements = std::move(elements);
  require(is_subgroup(lambda),
          "element list must be closed under addition mod N");
  return lambda;
}

bool subgroup_contains(const TFSubgroup& lambda, long k, long l) {
  std::pair<long, long> key{imod(k, lambda.n), imod(l, lambda.n)};
  return std::binary_search(lambda.elements.begin(), lambda.elements.end(),
                            key);
}

bool is_subgroup(const TFSubgroup& lambda) {
  const long n = lambda.n;
  if (n < 1 || lambda.elements.empty()) return false;
  for (const auto& e : lambda.elements)
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
      return false;
  if (!std::is_sorted(lambda.elements.begin(), lambda.elements.end()))
    return false;
  if (n > 4096) {
    // bitmap would need n^2 bytes; fall back to searching the sorted list
    for (const auto& x : lambda.elements)
      for (const auto& y : lambda.elements)
        if (!subgroup_contains(lambda, x.first + y.first, x.second + y.second))
          return false;
    return subgroup_contains(lambda, 0, 0);
  }
  // the pairwise closure scan is quadratic in |Lambda|, so membership goes
  // through a flat bitmap instead of repeated binary searches
  std::vector<char> member(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (const auto& e : lambda.elements)
    member[static_cast<size_t>(e.first * n + e.second)] = 1;
  for (const auto& x : lambda.elements)
    for (const auto& y : lambda.elements) {
      long k = x.first + y.first;
      if (k >= n) k -= n;
      long l = y.second + x.second;
      if (l >= n) l -= n;
      if (!member[static_cast<size_t>(k * n + l)]) return false;
    }
  // closure under addition in a finite set forces (0,0) and inverses
  return member[0] != 0;
}

TFSubgroup adjoint_bruteforce(const TFSubgroup& lambda) {
  require(is_subgroup(lambda), "adjoint requires a valid subgroup");
  const long n = lambda.n;
  TFSubgroup adj;
  adj.n = n;
  adj.structure = SubgroupStructure::explicit_list;
  for (long m = 0; m < n; ++m)
    for (long nn = 0; nn < n; ++nn) {
      bool commutes = true;
      for (const auto& [k, l] : lambda.elements) {
        // (m,n) commutes with (k,l) iff l*m == k*n mod N
        if (imod(l * m - k * nn, n) != 0) {
          commutes = false;
          break;
        }
      }
      if (commutes) adj.elements.push_back({m, nn});
    }
  sort_canonical(adj.elements);
  return adj;
}

TFSubgroup adjoint_product_closed(long n, long a, long b, long nprime) {
  require(a >= 1 && b >= 1 && nprime >= 1, "factors must be positive");
  require(n == a * b * nprime, "N must equal a*b*nprime");
  require(std::gcd(a, b) == 1, "a and b must be coprime");
  // (<a> x <b>)° = <nprime*a> x <nprime*b>: b translations, a modulations.
  // The step sizes nprime*a and nprime*b share the factor nprime, so the
  // result does not carry coprime product metadata of its own.
  TFSubgroup adj;
  adj.n = n;
  adj.structure = SubgroupStructure::explicit_list;
  for (long k = 0; k < n; k += nprime * a)
    for (long l = 0; l < n; l += nprime * b) adj.elements.push_back({k, l});
  sort_canonical(adj.elements);
  return adj;
}

}  // namespace gf
