#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "fcs/error.hpp"

namespace fcs {

// Finite abelian group as its invariant factor decomposition: factors are
// >= 2, ascending, each dividing the next. The trivial group is the empty
// list.
struct AbelianType {
  std::vector<std::uint64_t> factors;

  std::uint64_t order() const;
  bool operator==(const AbelianType& o) const { return factors == o.factors; }
  bool operator!=(const AbelianType& o) const { return factors != o.factors; }
};

// Throws DomainError unless the divisibility chain holds.
void validate_abelian_type(const AbelianType& t);

std::string format_abelian_type(const AbelianType& t);

// Builds the invariant factor type of a product of cyclic groups of the
// given orders (order 1 entries allowed and ignored).
AbelianType abelian_type_from_cyclic_orders(const std::vector<std::uint64_t>& orders);

// Multiset of element orders -> group type. Works per prime from the counts
// t_k = #{x : x^(p^k) = 1}; every t_k must be a power of p and the whole
// profile must be realizable, otherwise DomainError("not an Abelian group
// order profile"). Two independent computations (difference counting and
// second differences) must agree; the second is exposed for oracle tests.
AbelianType order_statistics_type(const std::map<std::uint64_t, std::uint64_t>& order_counts);
AbelianType order_statistics_type_second_difference(
    const std::map<std::uint64_t, std::uint64_t>& order_counts);

// Multiset of element orders of a given type, for round trips.
std::map<std::uint64_t, std::uint64_t> order_profile(const AbelianType& t);

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a; // row-major

  std::int64_t& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
  static IntMatrix zero(int r, int c);
  static IntMatrix identity(int n);
  bool operator==(const IntMatrix& o) const;
};

IntMatrix matmul(const IntMatrix& x, const IntMatrix& y);

struct SmithResult {
  IntMatrix d; // diagonal, d_i >= 0, d_i | d_{i+1}
  IntMatrix c; // unimodular row transform
  IntMatrix b; // unimodular column transform; c * a * b == d
};

// Smith normal form over the integers with checked 64-bit arithmetic;
// throws OverflowError if any intermediate value leaves the range.
SmithResult smith_normal_form(const IntMatrix& a);

// Determinant by fraction-free elimination; used to confirm unimodularity.
std::int64_t determinant(const IntMatrix& m);

// Abelian group presented by relation rows over `cols` generators.
struct RfagType {
  bool finite = false;
  AbelianType type;          // valid when finite
  std::uint32_t free_rank = 0; // nonzero when infinite
};

RfagType rfag_type(const IntMatrix& relations);

// Shortest and longest cyclic decompositions of a finite abelian group:
// t_min = number of invariant factors, t_max = number of prime power
// factors counted with multiplicity. Rows list the prime power pieces of
// each invariant factor, largest factor first.
struct TminTmax {
  std::uint32_t t_min = 0;
  std::uint32_t t_max = 0;
  std::vector<std::uint64_t> invariant_factors_desc;
  std::vector<std::vector<std::uint64_t>> rows; // prime powers per factor
};

TminTmax tmin_tmax(const AbelianType& t);

// Number of abelian groups of order p^n: the partition count p(n).
std::uint64_t count_abelian_groups_of_order(std::uint64_t p, std::uint32_t n);
std::uint64_t partition_count(std::uint32_t n);

// Text format: "rows cols" header line, then rows of integers.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix_file(const std::string& path);

} // namespace fcs
