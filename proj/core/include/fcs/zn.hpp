#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fcs/abelian.hpp"
#include "fcs/cayley.hpp"

namespace fcs {

// (Z_n, *) as a table; element id == residue.
CayleySemigroup zn_semigroup(std::uint64_t n, const ElementBudget& eb = {});

std::optional<std::uint64_t> inverse_mod(std::uint64_t x, std::uint64_t n);

std::vector<std::uint64_t> units_zn(std::uint64_t n);
std::uint64_t phi(std::uint64_t n);

// Invariant factor type of the unit group of Z_n, assembled from the unit
// groups of its prime power parts: cyclic C_((p-1)p^(g-1)) for odd p,
// trivial for 2, C_2 for 4, C_2 x C_2^(g-2) for 2^g with g >= 3.
AbelianType unit_group_type(std::uint64_t n);

// Chinese remainder data for n: prime power moduli q_i sorted ascending by
// value, with the idempotent basis e_i (e_i = 1 mod q_i, 0 mod the others).
struct CrtContext {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> moduli;  // prime powers q_i
  std::vector<std::uint64_t> primes;  // the prime of each q_i
  std::vector<std::uint64_t> basis;   // e_i
};

CrtContext crt_context(std::uint64_t n);
std::vector<std::uint64_t> crt_decompose(const CrtContext& c, std::uint64_t x);
std::uint64_t crt_recompose(const CrtContext& c, const std::vector<std::uint64_t>& parts);

// All multiplicative idempotents of Z_n: one per 0/1 pattern over the prime
// power moduli, listed in lexicographic pattern order (first modulus most
// significant, 0 before 1).
std::vector<std::uint64_t> idempotents_zn(std::uint64_t n);

// One maximal archimedean component of (Z_n, *), described arithmetically.
struct ZnComponent {
  std::uint64_t idempotent = 0;
  std::vector<int> pattern;           // 0/1 per modulus: 1 = unit part
  std::uint64_t size = 0;
  AbelianType kernel_type;            // product of unit groups of the 1-parts
  std::uint64_t kernel_size = 1;
  std::vector<std::uint64_t> elements;        // filled when materialized
  std::vector<std::uint64_t> kernel_elements; // filled when materialized
};

struct ZnComponentReport {
  std::uint64_t n = 0;
  CrtContext crt;
  std::vector<ZnComponent> components; // lexicographic pattern order
  bool materialized = false;
};

// Pure arithmetic decomposition of (Z_n, *): components, sizes, kernels.
// Element lists are materialized only when n <= materialize_budget.
ZnComponentReport zn_component_report(std::uint64_t n,
                                      std::uint64_t materialize_budget = 100000);

} // namespace fcs
