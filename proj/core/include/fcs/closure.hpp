#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fcs/cayley.hpp"

namespace fcs {

// Subsets of a ground set of at most 31 named elements, as bitmasks with
// bit i = i-th ground element in declaration order.
using SubsetMask = std::uint32_t;

struct Implication {
  SubsetMask premise = 0; // non-empty
  SubsetMask conclusion = 0;
};

struct ImplicationSystem {
  std::vector<std::string> ground;
  std::vector<Implication> implications;
};

void validate_implication_system(const ImplicationSystem& sys);

std::string format_subset(const ImplicationSystem& sys, SubsetMask set);

// Least superset of `set` closed under all implications.
SubsetMask sigma_closure(const ImplicationSystem& sys, SubsetMask set);

// One row per ground element: 0 = out, 1 = in, 2 = don't care. A row stands
// for the 2^{#2s} subsets obtained by resolving every 2 freely.
struct Row012 {
  std::vector<std::int8_t> sym;
  std::string str() const;
  std::uint64_t count() const;
  bool contains(SubsetMask set) const;
  std::vector<SubsetMask> expand() const;
};

struct ClosureCover {
  std::vector<Row012> rows; // pairwise disjoint, sorted by digit string
  std::uint64_t count = 0;  // number of closed sets
};

// Partitions the family of closed sets into disjoint 012-rows by depth-first
// branching with implication propagation.
ClosureCover closure_cover(const ImplicationSystem& sys);

// Join-semilattice relation u = v over generator supports; the uniform
// translation emits supp(u) -> supp(v) and supp(v) -> supp(u).
std::vector<Implication> semilattice_relations_to_implications(
    const std::vector<std::pair<SubsetMask, SubsetMask>>& relations);

// Relatively free semilattice on the generators subject to join relations:
// the non-empty closed sets under union-then-close, named by their least
// generating subsets.
struct RfslSemilattice {
  CayleySemigroup sgr;
  std::vector<SubsetMask> closed_set_of; // element -> closed set
  std::vector<int> generator_ids;        // ground element -> semigroup element
  std::vector<std::string> ground;
};

RfslSemilattice rfsl(const std::vector<std::string>& generators,
                     const std::vector<std::pair<SubsetMask, SubsetMask>>& relations);

// f(y) = { i : y_i * y = y_i }, an injective map into (P({0..n-1}), ∩) for
// any semilattice: products turn into intersections.
struct PowersetEmbedding {
  int ground_size = 0;
  std::vector<std::uint64_t> image; // element -> bitmask over elements
};

PowersetEmbedding embed_into_powerset(const CayleySemigroup& s);

// Largest T among the candidates with product x: all candidates that absorb
// x, validated to multiply back to x.
std::vector<int> largest_fiber(const CayleySemigroup& s, int x, const std::vector<int>& candidates);
// Candidates default to every element of the semilattice.
std::vector<int> largest_fiber(const CayleySemigroup& s, int x);
// Candidates are the generator elements of the presented semilattice.
std::vector<int> largest_fiber(const RfslSemilattice& y, int x);

// Text format:
//   base: a b c d e
//   imp: b c -> e
//   rel: b | c = a | b
struct ImplicationInput {
  std::vector<std::string> ground;
  std::vector<Implication> implications;
  std::vector<std::pair<SubsetMask, SubsetMask>> relations;
};

ImplicationInput parse_implications(std::istream& in);
ImplicationInput parse_implications_file(const std::string& path);

} // namespace fcs
