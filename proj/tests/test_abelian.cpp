#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "fcs/abelian.hpp"
#include "helpers.hpp"

using namespace fcs;

namespace {

// gcd of all k x k minors, the classical characterization of d_1 * ... * d_k
std::int64_t minor_gcd(const IntMatrix& m, int k) {
  // enumerate k-subsets of rows and columns
  std::vector<int> ri(std::size_t(k), 0), ci(std::size_t(k), 0);
  std::iota(ri.begin(), ri.end(), 0);
  std::int64_t g = 0;
  auto det_sub = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
    IntMatrix sub = IntMatrix::zero(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(rs[std::size_t(i)], cs[std::size_t(j)]);
    return determinant(sub);
  };
  auto next_subset = [](std::vector<int>& v, int n) {
    int k2 = int(v.size());
    int i = k2 - 1;
    while (i >= 0 && v[std::size_t(i)] == n - k2 + i) --i;
    if (i < 0) return false;
    ++v[std::size_t(i)];
    for (int j = i + 1; j < k2; ++j) v[std::size_t(j)] = v[std::size_t(j - 1)] + 1;
    return true;
  };
  std::vector<int> rs = ri;
  do {
    std::vector<int> cs(std::size_t(k), 0);
    std::iota(cs.begin(), cs.end(), 0);
    do {
      g = std::gcd(g, det_sub(rs, cs));
    } while (next_subset(cs, m.cols));
  } while (next_subset(rs, m.rows));
  return g < 0 ? -g : g;
}

bool unimodular(const IntMatrix& m) {
  std::int64_t d = determinant(m);
  return d == 1 || d == -1;
}

// all abelian types with order <= bound, by recursive divisibility chains
void enumerate_types(std::uint64_t bound, std::vector<std::uint64_t>& stack,
                     std::uint64_t prod, std::vector<AbelianType>& out) {
  out.push_back(AbelianType{stack});
  std::uint64_t lo = stack.empty() ? 2 : stack.back();
  for (std::uint64_t f = lo; prod * f <= bound; ++f) {
    if (!stack.empty() && f % stack.back() != 0) continue;
    stack.push_back(f);
    enumerate_types(bound, stack, prod * f, out);
    stack.pop_back();
  }
}

} // namespace

TEST_CASE("abelian type validation and formatting") {
  CHECK(format_abelian_type(AbelianType{{2, 4, 12}}) == "C_2 x C_4 x C_12");
  CHECK(format_abelian_type(AbelianType{}) == "C_1");
  CHECK(AbelianType{{2, 4, 12}}.order() == 96);
  CHECK(AbelianType{}.order() == 1);
  CHECK_NOTHROW(validate_abelian_type(AbelianType{{2, 2, 6, 6}}));
  CHECK_THROWS_AS(validate_abelian_type(AbelianType{{4, 2}}), DomainError);
  CHECK_THROWS_AS(validate_abelian_type(AbelianType{{2, 3}}), DomainError);
  CHECK_THROWS_AS(validate_abelian_type(AbelianType{{1, 2}}), DomainError);
}

TEST_CASE("invariant factors from cyclic orders") {
  CHECK(abelian_type_from_cyclic_orders({6, 2, 2, 6}) == AbelianType{{2, 2, 6, 6}});
  CHECK(abelian_type_from_cyclic_orders({5, 7}) == AbelianType{{35}});
  CHECK(abelian_type_from_cyclic_orders({1, 1}) == AbelianType{});
  CHECK(abelian_type_from_cyclic_orders({12, 18}) == AbelianType{{6, 36}});
  CHECK(abelian_type_from_cyclic_orders({2, 4, 8}) == AbelianType{{2, 4, 8}});
}

TEST_CASE("order statistics recover the group type") {
  // p = 2, exponent profile t = (8, 14, 19, 21, 22): group of order 2^22
  // with lambda = (5, 4, 3, 3, 3, 2, 1, 1)
  AbelianType want{{2, 2, 4, 8, 8, 8, 16, 32}};
  std::map<std::uint64_t, std::uint64_t> counts = order_profile(want);
  // t_k counts solutions of x^(2^k) = 1, i.e. elements of order dividing 2^k;
  // the profile here is 2^(8, 14, 19, 21, 22)
  std::vector<std::uint64_t> t;
  for (std::uint64_t k = 1, pk = 2; k <= 5; ++k, pk *= 2) {
    std::uint64_t cum = 0;
    for (const auto& [ord, cnt] : counts)
      if (pk % ord == 0) cum += cnt;
    t.push_back(cum);
  }
  CHECK(t == std::vector<std::uint64_t>{1u << 8, 1u << 14, 1u << 19, 1u << 21, 1u << 22});
  // number of direct factors C_8 = s_3 = 2*19 - 21 - 14
  CHECK(2 * 19 - 21 - 14 == 3);
  CHECK(std::count(want.factors.begin(), want.factors.end(), 8) == 3);

  CHECK(order_statistics_type(counts) == want);
  CHECK(order_statistics_type_second_difference(counts) == want);
}

TEST_CASE("order statistics round-trips every type of order <= 500") {
  std::vector<AbelianType> all;
  std::vector<std::uint64_t> stack;
  enumerate_types(500, stack, 1, all);
  CHECK(all.size() > 700); // sanity on the enumeration itself
  for (const AbelianType& ty : all) {
    std::map<std::uint64_t, std::uint64_t> prof = order_profile(ty);
    std::uint64_t total = 0;
    for (const auto& [ord, cnt] : prof) total += cnt;
    REQUIRE(total == ty.order());
    CHECK(order_statistics_type(prof) == ty);
    CHECK(order_statistics_type_second_difference(prof) == ty);
  }
}

TEST_CASE("order statistics reject impossible profiles") {
  // three involutions cannot happen in a group of order 4... they can (Klein);
  // but two cannot: {1: 1, 2: 2, 4: 1} has t_1 = 3, not a power of 2
  std::map<std::uint64_t, std::uint64_t> bad = {{1, 1}, {2, 2}, {4, 1}};
  CHECK_THROWS_AS(order_statistics_type(bad), DomainError);
  std::map<std::uint64_t, std::uint64_t> no_identity = {{2, 1}};
  CHECK_THROWS_AS(order_statistics_type(no_identity), DomainError);
  // profile of a non-abelian group: quaternion Q_8 has 1 element of order 2
  std::map<std::uint64_t, std::uint64_t> q8 = {{1, 1}, {2, 1}, {4, 6}};
  CHECK_THROWS_AS(order_statistics_type(q8), DomainError);
}

TEST_CASE("smith normal form of the worked 3 x 3 matrix") {
  IntMatrix a = IntMatrix::zero(3, 3);
  std::vector<std::int64_t> entries = {60, -112, 94, 56, -108, 92, 84, -160, 136};
  a.a = entries;
  SmithResult r = smith_normal_form(a);
  CHECK(r.d.at(0, 0) == 2);
  CHECK(r.d.at(1, 1) == 4);
  CHECK(r.d.at(2, 2) == 12);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(r.d.at(i, j) == 0);
  CHECK(unimodular(r.c));
  CHECK(unimodular(r.b));
  CHECK(matmul(matmul(r.c, a), r.b) == r.d);
}

TEST_CASE("smith normal form agrees with the minor-gcd characterization") {
  std::mt19937 rng(4001);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<std::int64_t> val(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    int r = dim(rng), c = dim(rng);
    IntMatrix m = IntMatrix::zero(r, c);
    for (auto& x : m.a) x = val(rng);
    SmithResult s = smith_normal_form(m);
    CHECK(unimodular(s.c));
    CHECK(unimodular(s.b));
    CHECK(matmul(matmul(s.c, m), s.b) == s.d);
    int k = std::min(r, c);
    std::int64_t prev = 1;
    std::int64_t running = 1;
    for (int i = 0; i < k; ++i) {
      std::int64_t di = s.d.at(i, i);
      CHECK(di >= 0);
      if (di != 0) {
        CHECK(prev != 0);
        if (prev != 0) CHECK(di % prev == 0);
      }
      // d_1 * ... * d_i equals the gcd of all i x i minors
      running *= di;
      CHECK(running == minor_gcd(m, i + 1));
      prev = di;
    }
  }
}

TEST_CASE("determinant matches permutation expansion on small matrices") {
  std::mt19937 rng(4002);
  std::uniform_int_distribution<std::int64_t> val(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + int(rng() % 4);
    IntMatrix m = IntMatrix::zero(n, n);
    for (auto& x : m.a) x = val(rng);
    std::vector<int> perm(std::size_t(n), 0);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t want = 0;
    do {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[std::size_t(i)] > perm[std::size_t(j)]) ++inv;
      std::int64_t term = (inv % 2 == 0) ? 1 : -1;
      for (int i = 0; i < n; ++i) term *= m.at(i, perm[std::size_t(i)]);
      want += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(determinant(m) == want);
  }
}

TEST_CASE("relation matrices classify their abelian groups") {
  IntMatrix a = IntMatrix::zero(3, 3);
  a.a = {60, -112, 94, 56, -108, 92, 84, -160, 136};
  RfagType t = rfag_type(a);
  REQUIRE(t.finite);
  CHECK(t.type == AbelianType{{2, 4, 12}});

  // one relation on two generators leaves a free factor
  IntMatrix b = IntMatrix::zero(1, 2);
  b.a = {2, 0};
  RfagType u = rfag_type(b);
  CHECK_FALSE(u.finite);
  CHECK(u.free_rank == 1);

  // zero relation rows change nothing
  IntMatrix c = IntMatrix::zero(2, 1);
  c.a = {3, 0};
  RfagType v = rfag_type(c);
  REQUIRE(v.finite);
  CHECK(v.type == AbelianType{{3}});

  // unit diagonal collapses to the trivial group
  RfagType w = rfag_type(IntMatrix::identity(4));
  REQUIRE(w.finite);
  CHECK(w.type == AbelianType{});
}

TEST_CASE("shortest and longest cyclic decompositions") {
  TminTmax g = tmin_tmax(AbelianType{{2, 12, 12, 120, 46200, 5821200}});
  CHECK(g.t_min == 6);
  CHECK(g.t_max == 18);
  CHECK(g.invariant_factors_desc ==
        std::vector<std::uint64_t>{5821200, 46200, 120, 12, 12, 2});
  REQUIRE(g.rows.size() == 6);
  // each row lists the prime power pieces of its invariant factor
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    std::uint64_t prod = 1;
    for (std::uint64_t q : g.rows[i]) prod *= q;
    CHECK(prod == g.invariant_factors_desc[i]);
  }
  std::size_t pieces = 0;
  for (const auto& row : g.rows) pieces += row.size();
  CHECK(pieces == g.t_max);

  TminTmax tr = tmin_tmax(AbelianType{});
  CHECK(tr.t_min == 0);
  CHECK(tr.t_max == 0);
}

TEST_CASE("counting abelian groups by partitions") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(15) == 176);
  CHECK(count_abelian_groups_of_order(2, 15) == 176);
  CHECK(count_abelian_groups_of_order(97, 3) == 3);
  CHECK_THROWS_AS(count_abelian_groups_of_order(6, 2), DomainError); // not prime
}

TEST_CASE("matrix parsing") {
  std::istringstream in("2 3\n1 -2 3\n4 5 -6\n");
  IntMatrix m = parse_matrix(in);
  REQUIRE(m.rows == 2);
  REQUIRE(m.cols == 3);
  CHECK(m.at(0, 1) == -2);
  CHECK(m.at(1, 2) == -6);

  std::istringstream bad("2 2\n1 2\n3\n");
  CHECK_THROWS_AS(parse_matrix(bad), ParseError);
  std::istringstream bad2("0 2\n");
  CHECK_THROWS_AS(parse_matrix(bad2), ParseError);
  CHECK_THROWS_AS(parse_matrix_file("/nonexistent/m.mat"), ParseError);
}
