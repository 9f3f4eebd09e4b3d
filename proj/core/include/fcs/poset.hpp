#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fcs/error.hpp"

namespace fcs {

// Finite partial order on {0..n-1} stored as a full relation matrix.
struct Poset {
  int n = 0;
  std::vector<char> rel; // rel[i*n+j] != 0 means i <= j

  bool leq(int i, int j) const { return rel[std::size_t(i) * n + j] != 0; }
  void set(int i, int j, bool v = true) { rel[std::size_t(i) * n + j] = v ? 1 : 0; }

  static Poset discrete(int n) {
    Poset p;
    p.n = n;
    p.rel.assign(std::size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) p.set(i, i);
    return p;
  }
};

// Reflexivity, antisymmetry, transitivity; witness in the message otherwise.
void validate_poset(const Poset& p);

// In-place reflexive-transitive closure of an arbitrary relation.
void transitive_close(Poset& p);

// Covering pairs (i, j) with i < j and nothing strictly between.
std::vector<std::pair<int, int>> cover_pairs(const Poset& p);

struct MeetTable {
  bool total = false;                     // every pair has a meet
  std::vector<int> meet;                  // n*n, valid when total
  std::pair<int, int> failing{-1, -1};    // a pair without a meet otherwise
};

// Greatest lower bounds, if they all exist (meet-semilattice check).
MeetTable meets(const Poset& p);

// All maximal chains from `top` down to `bottom` along covering edges;
// requires bottom <= top. Each chain starts at top and ends at bottom.
std::vector<std::vector<int>> descending_chains(const Poset& p, int top, int bottom);

} // namespace fcs
