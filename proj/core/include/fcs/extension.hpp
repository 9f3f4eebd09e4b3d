#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcs/cayley.hpp"

namespace fcs {

// Extension data for gluing a cyclic semigroup C_{m,n} on top of an ideal
// copy of C_{m',n'}: the generator product a*b is declared to be b^(k+1).
struct Quintuple {
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  std::uint64_t mp = 1;
  std::uint64_t np = 1;
  std::uint64_t k = 0; // 0 <= k <= m'+n'-1
};

void validate_quintuple(const Quintuple& q);

// The declared products extend to a well-defined commutative semigroup iff
// k = 0 (trivial action) or both m'-1 <= m*k and n' | n*k hold.
bool is_realizable(const Quintuple& q);

// Strong variant: x -> x^k is itself a morphism C_{m,n} -> C_{m',n'},
// i.e. k >= 1, m' <= m*k and n' | n*k. The resulting table is the strong
// semilattice of the two chains.
bool is_strongly_realizable(const Quintuple& q);

struct Realization {
  CayleySemigroup sgr;
  int a_id = 0; // generator of the top chain
  int b_id = 0; // generator of the ideal chain
};

// Builds the table on a^1..a^(m+n-1), b^1..b^(m'+n'-1) with
// a^i * b^j = b^(i*k+j) (exponents canonical). Raises DomainError naming the
// violated condition and the ill-defined pair of products when the quintuple
// is not realizable.
Realization realize(const Quintuple& q);

struct KClassification {
  std::uint64_t k = 0;
  bool realizable = false;
  bool trivial = false; // k = 0
  bool strong = false;
  // Smallest realizable k' < k producing the identical table, if any.
  std::optional<std::uint64_t> duplicate_of;
};

// Classification of every k in [0, m'+n'-1] for fixed chain types.
std::vector<KClassification> classify_extensions(std::uint64_t m, std::uint64_t n,
                                                 std::uint64_t mp, std::uint64_t np);

} // namespace fcs
