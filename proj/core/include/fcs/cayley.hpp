#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fcs/poset.hpp"
#include "fcs/rewriting.hpp"
#include "fcs/word.hpp"

namespace fcs {

// Finite commutative semigroup given by its multiplication table.
// Construct through from_table (or the builders below); construction always
// validates commutativity and associativity in full.
struct CayleySemigroup {
  int n = 0;
  std::vector<int> tab; // row-major n*n, entries in [0, n)
  std::vector<std::string> names;

  int at(int i, int j) const { return tab[std::size_t(i) * n + j]; }
  const std::string& name(int i) const { return names[std::size_t(i)]; }
};

CayleySemigroup from_table(int n, std::vector<int> tab,
                           std::vector<std::string> names = {});

// Index m >= 1 and period n >= 1 of a cyclic semigroup C_{m,n}; its order is
// m + n - 1.
struct CyclicType {
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  bool operator==(const CyclicType& o) const { return m == o.m && n == o.n; }
  std::uint64_t order() const { return std::uint64_t(m) + n - 1; }
};

// The multiplication table of C_{m,n} on elements a, a^2, ... (id = exp - 1).
CayleySemigroup cyclic_semigroup(const CyclicType& t, const std::string& gen = "a");

struct ElementBudget {
  std::size_t max_elements = 4096;
};

// Semigroup presented by a rule system: completes it, takes the (finite)
// normal forms as elements in military order, multiplies via reduce.
struct PresentedSemigroup {
  CayleySemigroup sgr;
  RuleSystem completed;
  std::vector<Word> forms; // forms[i] is element i
};

PresentedSemigroup from_presentation(const RuleSystem& rs,
                                     const CompletionBudget& cb = {},
                                     const ElementBudget& eb = {});

CayleySemigroup direct_product(const CayleySemigroup& a, const CayleySemigroup& b,
                               const ElementBudget& eb = {});

// Sub-structure with its ambient element ids (sorted ascending).
struct Subsemigroup {
  CayleySemigroup sgr;
  std::vector<int> elements; // sgr id i corresponds to ambient id elements[i]
};

Subsemigroup subsemigroup_generated(const CayleySemigroup& s, const std::vector<int>& gens);

std::vector<int> idempotents(const CayleySemigroup& s);

struct CyclicData {
  CyclicType type;
  int power_idempotent = -1; // the unique idempotent power of x
  std::uint64_t order = 0;   // m + n - 1
};

// Index and period of the monogenic subsemigroup generated by x.
CyclicData cyclic_type(const CayleySemigroup& s, int x);

std::optional<int> zero_of(const CayleySemigroup& s);
std::optional<int> identity_of(const CayleySemigroup& s);

// Kernel: the least ideal, computed as e'S for e' the product of all
// idempotents. Always a group.
Subsemigroup kernel(const CayleySemigroup& s);

struct IdealCheck {
  bool ok = false;
  // Witness when not an ideal: element i of the candidate and s in S with
  // i*s outside the candidate.
  std::optional<std::pair<int, int>> witness;
};

IdealCheck is_ideal(const CayleySemigroup& s, const std::vector<int>& subset);

// Rees quotient S/I: I collapses to a zero, the rest keeps its identity.
struct ReesQuotient {
  CayleySemigroup sgr;
  int zero_id = 0;
  std::vector<int> image; // ambient id -> quotient id
};

ReesQuotient rees_quotient(const CayleySemigroup& s, const std::vector<int>& ideal);

bool is_nil(const CayleySemigroup& s);         // has a zero and no other idempotent
bool is_group(const CayleySemigroup& s);
bool is_semilattice(const CayleySemigroup& s); // every element idempotent
bool is_archimedean(const CayleySemigroup& s); // exactly one idempotent
bool is_cancellative(const CayleySemigroup& s);

// Elements with an inverse against the identity; DomainError without one.
std::vector<int> units(const CayleySemigroup& s);

// Divisibility preorder: a <=_J b iff a == b or a = b*c for some c.
bool j_leq(const CayleySemigroup& s, int a, int b);
std::vector<std::vector<int>> j_classes(const CayleySemigroup& s);

struct JPoset {
  std::vector<std::vector<int>> classes;
  Poset order; // on class indices
};

JPoset j_poset(const CayleySemigroup& s);

struct CongruencePartition {
  std::vector<int> block_of;            // element -> block index
  std::vector<std::vector<int>> blocks; // sorted ids, blocks sorted by least id
};

// Validates the substitution property (ab ~ a'b' whenever a ~ a', b ~ b');
// throws DomainError with a witness otherwise. Returns the quotient table.
CayleySemigroup quotient(const CayleySemigroup& s, const CongruencePartition& part);

// Least congruence identifying the given pairs: closure under products plus
// symmetry and transitivity.
CongruencePartition smallest_congruence(const CayleySemigroup& s,
                                        const std::vector<std::pair<int, int>>& pairs);

enum class SearchStatus { Found, None, Unknown };

struct RetractSearch {
  SearchStatus status = SearchStatus::None;
  std::vector<int> retract; // sorted ids, valid when Found
};

// Searches for a transversal of the J-classes that is closed under
// multiplication. Exhaustive backtracking in id order; gives Unknown when
// the node budget runs out before the search space is exhausted.
RetractSearch j_retract_search(const CayleySemigroup& s, std::uint64_t budget = 1'000'000);

// Table isomorphism via refinement-pruned backtracking.
bool is_isomorphic(const CayleySemigroup& a, const CayleySemigroup& b);

// Text format: first line n, then n rows of n ids, then optionally
//   names: x y z ...
CayleySemigroup parse_cayley(std::istream& in);
CayleySemigroup parse_cayley_file(const std::string& path);
std::string format_cayley(const CayleySemigroup& s);

} // namespace fcs
