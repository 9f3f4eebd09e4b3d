#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fcs/abelian.hpp"
#include "fcs/cayley.hpp"
#include "fcs/poset.hpp"

namespace fcs {

// Partition of a finite commutative semigroup by power idempotents: x and y
// share a component iff some powers of x and y meet in the same idempotent.
struct ArchimedeanComponents {
  std::vector<int> idempotent_of;        // element -> its power idempotent
  std::vector<int> idempotents;          // sorted distinct idempotents
  std::vector<std::vector<int>> members; // parallel to idempotents, sorted
};

ArchimedeanComponents archimedean_components(const CayleySemigroup& s);

// The idempotents under e <= f iff e*f = e; products of idempotents are
// idempotent, so this is always a meet-semilattice with e∧f = e*f.
struct IdempotentSemilattice {
  std::vector<int> idempotents;            // sorted ambient ids
  Poset order;                             // on idempotent indices
  MeetTable meet;                          // total by construction
  std::vector<std::pair<int, int>> covers; // (lower, upper) index pairs
};

IdempotentSemilattice idempotent_semilattice(const CayleySemigroup& s);

// Kernel of the component A_e: the members fixed by e. Always an abelian
// group with identity e.
std::vector<int> component_kernel(const CayleySemigroup& s, int e,
                                  const std::vector<int>& component);

// Divisibility poset of the nil quotient A_e / K(A_e): local id 0 is the
// collapsed kernel, local id i+1 is ambient[i]; x <= y iff x = y or x is a
// proper multiple of y.
struct NilPoset {
  std::vector<int> ambient;
  Poset order;
  std::vector<std::pair<int, int>> covers; // (lower, upper) local ids, sorted
};

NilPoset nil_poset(const CayleySemigroup& s, int e, const std::vector<int>& component);

struct ComponentReport {
  int idempotent = -1;
  std::vector<int> members;
  std::vector<int> kernel;
  AbelianType kernel_type;
  NilPoset nil;
};

// The five-step picture: components, their semilattice, each component's
// kernel with its group type, and each nil quotient's divisibility poset.
struct StructureReport {
  ArchimedeanComponents components;
  IdempotentSemilattice semilattice;
  std::vector<ComponentReport> reports; // ordered like components.idempotents
};

StructureReport structure_report(const CayleySemigroup& s);

// DOT rendering: one digraph for the idempotent semilattice followed by one
// per nontrivial nil poset, using display names.
std::string structure_dot(const CayleySemigroup& s, const StructureReport& r);

std::string format_structure_report(const CayleySemigroup& s, const StructureReport& r);

} // namespace fcs
