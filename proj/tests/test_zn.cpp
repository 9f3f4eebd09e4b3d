#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fcs/structure.hpp"
#include "fcs/zn.hpp"
#include "helpers.hpp"

using namespace fcs;

namespace {

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// element orders in the unit group of Z_n, straight from the table
std::map<std::uint64_t, std::uint64_t> unit_order_counts(std::uint64_t n) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t u : units_zn(n)) {
    std::uint64_t x = u % n, ord = 1;
    while (x != 1 % n) {
      x = (x * u) % n;
      ++ord;
    }
    ++counts[ord];
  }
  return counts;
}

} // namespace

TEST_CASE("modular inverse") {
  CHECK(inverse_mod(30, 49) == 18);
  CHECK_THROWS_AS(inverse_mod(1, 1), DomainError); // modulus must be >= 2
  CHECK_FALSE(inverse_mod(6, 9).has_value());
  for (std::uint64_t n = 2; n <= 120; ++n)
    for (std::uint64_t x = 0; x < n; ++x) {
      auto inv = inverse_mod(x, n);
      if (gcd64(x, n) == 1) {
        REQUIRE(inv.has_value());
        CHECK((x * *inv) % n == 1);
      } else {
        CHECK_FALSE(inv.has_value());
      }
    }
}

TEST_CASE("unit lists and phi") {
  CHECK(phi(1) == 1);
  CHECK(phi(18) == 6);
  CHECK(phi(504) == 144);
  CHECK(units_zn(18) == std::vector<std::uint64_t>{1, 5, 7, 11, 13, 17});
  for (std::uint64_t n = 2; n <= 200; ++n) CHECK(units_zn(n).size() == phi(n));
  CHECK_THROWS_AS(units_zn(1), DomainError);
}

TEST_CASE("unit group types match the multiplication table") {
  CHECK(unit_group_type(18) == AbelianType{{6}});
  CHECK(unit_group_type(504) == AbelianType{{2, 2, 6, 6}});
  CHECK(unit_group_type(8) == AbelianType{{2, 2}});
  CHECK(unit_group_type(16) == AbelianType{{2, 4}});
  CHECK(unit_group_type(2) == AbelianType{});
  // oracle: recover the type from the multiset of element orders
  for (std::uint64_t n = 2; n <= 200; ++n) {
    CHECK(order_statistics_type(unit_order_counts(n)) == unit_group_type(n));
  }
}

TEST_CASE("crt context for 60 and 504") {
  CrtContext c60 = crt_context(60);
  CHECK(c60.moduli == std::vector<std::uint64_t>{3, 4, 5});
  CHECK(c60.primes == std::vector<std::uint64_t>{3, 2, 5});
  CHECK(c60.basis == std::vector<std::uint64_t>{40, 45, 36});

  CrtContext c504 = crt_context(504);
  CHECK(c504.moduli == std::vector<std::uint64_t>{7, 8, 9});
  CHECK(c504.basis == std::vector<std::uint64_t>{288, 441, 280});

  // basis elements are orthogonal idempotents summing to 1
  for (const CrtContext& c : {c60, c504}) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < c.basis.size(); ++i) {
      std::uint64_t e = c.basis[i];
      CHECK((e * e) % c.n == e);
      sum = (sum + e) % c.n;
      for (std::size_t j = i + 1; j < c.basis.size(); ++j)
        CHECK((e * c.basis[j]) % c.n == 0);
      CHECK(e % c.moduli[i] == 1);
    }
    CHECK(sum == 1 % c.n);
  }
}

TEST_CASE("crt decompose and recompose are mutually inverse") {
  for (std::uint64_t n : {2, 12, 60, 360, 504, 97}) {
    CrtContext c = crt_context(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      std::vector<std::uint64_t> parts = crt_decompose(c, x);
      REQUIRE(parts.size() == c.moduli.size());
      for (std::size_t i = 0; i < parts.size(); ++i) CHECK(parts[i] == x % c.moduli[i]);
      CHECK(crt_recompose(c, parts) == x);
    }
  }
  CrtContext c = crt_context(60);
  CHECK_THROWS_AS(crt_recompose(c, {1, 2}), DomainError); // wrong arity
}

TEST_CASE("idempotents of Z_n in pattern order") {
  // Z_18: moduli (2, 9); patterns 00, 01, 10, 11 give 0, 10, 9, 1
  CHECK(idempotents_zn(18) == std::vector<std::uint64_t>{0, 10, 9, 1});
  // against the table definition for every n up to 200
  for (std::uint64_t n = 2; n <= 200; ++n) {
    std::set<std::uint64_t> want;
    for (std::uint64_t x = 0; x < n; ++x)
      if ((x * x) % n == x) want.insert(x);
    std::vector<std::uint64_t> got = idempotents_zn(n);
    CHECK(got.size() == want.size());
    std::set<std::uint64_t> got_set(got.begin(), got.end());
    CHECK(got_set == want);
  }
}

TEST_CASE("component report for Z_504") {
  ZnComponentReport rep = zn_component_report(504);
  REQUIRE(rep.components.size() == 8);
  CHECK(rep.materialized);
  // pattern order 000, 001, 010, 011, 100, 101, 110, 111 over moduli (7, 8, 9)
  std::vector<std::uint64_t> sizes;
  for (const ZnComponent& c : rep.components) sizes.push_back(c.size);
  CHECK(sizes == std::vector<std::uint64_t>{12, 24, 12, 24, 72, 144, 72, 144});
  std::uint64_t total = 0;
  for (std::uint64_t s : sizes) total += s;
  CHECK(total == 504);

  // the all-ones pattern is the unit group
  const ZnComponent& top = rep.components.back();
  CHECK(top.idempotent == 1);
  CHECK(top.pattern == std::vector<int>{1, 1, 1});
  CHECK(top.kernel_type == AbelianType{{2, 2, 6, 6}});
  CHECK(top.kernel_size == 144);
  CHECK(top.size == top.kernel_size); // a group is its own kernel

  // the all-zeros pattern holds the nilpotent part over 0
  const ZnComponent& bot = rep.components.front();
  CHECK(bot.idempotent == 0);
  CHECK(bot.kernel_type == AbelianType{});
  CHECK(bot.kernel_size == 1);

  // every element belongs to the component of its idempotent power
  CayleySemigroup s = zn_semigroup(504);
  for (const ZnComponent& c : rep.components) {
    REQUIRE(c.elements.size() == c.size);
    for (std::uint64_t x : c.elements) {
      CyclicData cd = cyclic_type(s, int(x));
      CHECK(std::uint64_t(cd.power_idempotent) == c.idempotent);
    }
    // kernel elements: exactly those x in the component with x = x * e
    for (std::uint64_t x : c.kernel_elements) {
      CHECK((x * c.idempotent) % 504 == x);
    }
    REQUIRE(c.kernel_elements.size() == c.kernel_size);
  }
}

TEST_CASE("component of 441 in Z_504") {
  // 441 = 0 mod 7, 1 mod 8, 0 mod 9: pattern 010
  ZnComponentReport rep = zn_component_report(504);
  const ZnComponent* comp = nullptr;
  for (const ZnComponent& c : rep.components)
    if (c.idempotent == 441) comp = &c;
  REQUIRE(comp != nullptr);
  CHECK(comp->pattern == std::vector<int>{0, 1, 0});
  CHECK(comp->size == 12);
  std::vector<std::uint64_t> expect_members = {21,  63,  105, 147, 189, 231,
                                               273, 315, 357, 399, 441, 483};
  CHECK(comp->elements == expect_members);
  CHECK(comp->kernel_elements == std::vector<std::uint64_t>{63, 189, 315, 441});
  CHECK(comp->kernel_type == AbelianType{{2, 2}});
  CHECK(comp->kernel_size == 4);
}

TEST_CASE("arithmetic component data matches the table for every n up to 60") {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    CayleySemigroup s = zn_semigroup(n);
    ArchimedeanComponents ac = archimedean_components(s);
    ZnComponentReport rep = zn_component_report(n);
    REQUIRE(rep.components.size() == ac.idempotents.size());
    for (const ZnComponent& c : rep.components) {
      auto it = std::find(ac.idempotents.begin(), ac.idempotents.end(), int(c.idempotent));
      REQUIRE(it != ac.idempotents.end());
      std::size_t idx = std::size_t(it - ac.idempotents.begin());
      const std::vector<int>& want = ac.members[idx];
      std::vector<std::uint64_t> want64(want.begin(), want.end());
      CHECK(c.elements == want64);
      std::vector<int> k = component_kernel(s, int(c.idempotent), want);
      std::vector<std::uint64_t> kw(k.begin(), k.end());
      CHECK(c.kernel_elements == kw);
      // kernel type against group structure read off the table
      std::map<std::uint64_t, std::uint64_t> counts =
          t::group_order_counts(s, int(c.idempotent), k);
      CHECK(order_statistics_type(counts) == c.kernel_type);
    }
  }
}

TEST_CASE("materialization budget switches element lists off") {
  ZnComponentReport rep = zn_component_report(504, 100);
  CHECK_FALSE(rep.materialized);
  for (const ZnComponent& c : rep.components) {
    CHECK(c.elements.empty());
    CHECK(c.kernel_elements.empty());
    CHECK(c.size > 0); // arithmetic facts still present
  }
}

TEST_CASE("zn_semigroup guards its budget") {
  CHECK_THROWS_AS(zn_semigroup(5000, ElementBudget{4096}), BudgetError);
  CHECK_THROWS_AS(zn_semigroup(0), DomainError);
}
