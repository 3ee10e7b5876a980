// lattice.hpp -- subgroups of the time-frequency plane Z/N x Z/N and their
// adjoints.
//
// A subgroup Lambda collects (time shift k, frequency shift l) pairs.  Its
// adjoint is
//   Lambda° = { (m, n) : l*m == k*n (mod N) for every (k, l) in Lambda },
// the set of time-frequency shifts commuting with all of Lambda's shifts.
#pragma once

#include "gaborforge/types.hpp"

#include <utility>

namespace gf {

enum class SubgroupStructure { product, cyclic, explicit_list };

struct TFSubgroup {
  long n = 0;  // ambient modulus: subgroup of Z/n x Z/n
  // Element list, always sorted lexicographically (time first).
  std::vector<std::pair<long, long>> elements;
  SubgroupStructure structure = SubgroupStructure::explicit_list;
  // Product metadata, valid when structure == product: the subgroup is
  // K x L with K = <a> and L = <b> in Z/n, n = a*b*nprime, gcd(a,b) = 1.
  long a = 0, b = 0, nprime = 0;
  // Generator, valid when structure == cyclic.
  std::pair<long, long> generator{0, 0};
};

// Smallest subgroup of Z/n x Z/n containing the given generators.
TFSubgroup subgroup_from_generators(
    long n, const std::vector<std::pair<long, long>>& generators);

// The product subgroup <a> x <b> of Z/n x Z/n for n = a*b*nprime with
// gcd(a, b) = 1.  <a> has b*nprime elements and <b> has a*nprime.
TFSubgroup product_subgroup(long n, long a, long b, long nprime);

// Subgroup with an explicitly supplied element list (validated for closure).
TFSubgroup explicit_subgroup(long n,
                             std::vector<std::pair<long, long>> elements);

// Adjoint by exhaustive scan of all N^2 candidate pairs.
TFSubgroup adjoint_bruteforce(const TFSubgroup& lambda);

// Adjoint of a product subgroup <a> x <b> in closed form:
//   (<a> x <b>)° = <nprime*a> x <nprime*b>,
// which has a*b elements.  Requires n = a*b*nprime, gcd(a, b) = 1.
TFSubgroup adjoint_product_closed(long n, long a, long b, long nprime);

// True when the element list is nonempty, in range, and closed under the
// group operation (hence contains (0,0) and inverses; the set is finite).
bool is_subgroup(const TFSubgroup& lambda);

// Membership test against the sorted element list.
bool subgroup_contains(const TFSubgroup& lambda, long k, long l);

}  // namespace gf
