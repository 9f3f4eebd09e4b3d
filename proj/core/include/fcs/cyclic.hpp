#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcs/cayley.hpp"
#include "fcs/poset.hpp"

namespace fcs {

// Exponents k act on cyclic semigroups as x -> x^k; k and k' induce the same
// map on C_{m,n} iff they agree below m and modulo n above. Canonical window:
// [1, m+n-1], with values >= m reduced into [m, m+n-1].
std::uint64_t canonical_exponent(std::uint64_t k, const CyclicType& target);

// Smallest exponent whose power is the idempotent of C_{m,n}.
std::uint64_t idempotent_exponent(const CyclicType& t);

// Whether x -> x^k defines a morphism C_{m,n} -> C_{m',n'} sending generator
// to the k-th power of the target generator: k >= 1, m' <= k*m, n' | k*n.
bool is_morphism_exponent(const CyclicType& src, const CyclicType& dst, std::uint64_t k);

// All morphism exponents in canonical form, ascending. Never empty: the
// constant-to-idempotent map always qualifies.
struct ExqSet {
  CyclicType source;
  CyclicType target;
  std::vector<std::uint64_t> ks;
};

ExqSet exq(const CyclicType& src, const CyclicType& dst);

// Composition along source -> middle -> target: canonical products k1*k2.
ExqSet compose_exq(const ExqSet& first, const ExqSet& second);

// Semilattice diagram of cyclic semigroups: a finite meet-semilattice with a
// cyclic type per node and a morphism exponent per covering edge.
struct Frame {
  std::vector<std::string> names;
  std::vector<CyclicType> types;
  Poset order;                                     // full order relation
  std::map<std::pair<int, int>, std::uint64_t> cover_exponent; // (upper, lower)
};

// Checks poset axioms, meet-closure, and that every cover exponent is a
// canonical morphism exponent for its edge types.
void validate_frame(const Frame& f);

struct StrongSemilattice {
  CayleySemigroup sgr;
  std::vector<int> node_of;           // element -> frame node
  std::vector<std::uint64_t> exp_of;  // element -> generator exponent
  std::vector<int> generator_of_node; // node -> element id of its generator
};

// Builds the strong semilattice of cyclic semigroups over the frame. The
// composed exponent between comparable nodes must not depend on the chain;
// a disagreement raises DomainError naming the two nodes and exponents.
StrongSemilattice build_strong_semilattice(const Frame& f);

// Composed canonical exponent from node hi down to node lo, with the chain
// independence check.
std::uint64_t path_exponent(const Frame& f, int hi, int lo);

struct StrongCount {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> intersection; // composed exponent set at the bottom
};

// Number of strong semilattices over the diamond top > {left, right} >
// bottom with the given types: sum over the intersection of the two composed
// exponent sets of the product of path multiplicities.
StrongCount count_strong_semilattices(const CyclicType& top, const CyclicType& left,
                                      const CyclicType& right, const CyclicType& bottom);

struct StrongDecision {
  bool is_strong = false;
  std::string witness; // empty when strong
};

// Decision procedure for "is this semigroup the strong semilattice of these
// components": components must be cyclic; each covering pair yields its
// exponent from a*b = b^(k+1); k >= 1 needs m' <= m*k, k = 0 needs m' = 1
// (constant-to-idempotent); composed exponents must agree across chains; and
// the full multiplication table must match the strong product.
StrongDecision is_strong_decomposition(const CayleySemigroup& s,
                                       const std::vector<std::vector<int>>& components);

// Text format:
//   type: alpha 2 4
//   edge: alpha > beta k=3
Frame parse_frame(std::istream& in);
Frame parse_frame_file(const std::string& path);

} // namespace fcs
