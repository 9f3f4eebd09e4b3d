// Release gate: one timed check per shipped guarantee. Each criterion prints
// a single PASS/FAIL line; the exit status is the number of failures, so the
// binary doubles as a ctest entry.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fcs/abelian.hpp"
#include "fcs/cayley.hpp"
#include "fcs/closure.hpp"
#include "fcs/cyclic.hpp"
#include "fcs/error.hpp"
#include "fcs/extension.hpp"
#include "fcs/rewriting.hpp"
#include "fcs/structure.hpp"
#include "fcs/word.hpp"
#include "fcs/zn.hpp"

#include "helpers.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::string data(const std::string& name) {
  return std::string(FCS_DATA_DIR) + "/" + name;
}

void require(bool ok, const std::string& reason) {
  if (!ok) throw std::runtime_error(reason);
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// 1. Completion goldens: the four bundled presentations reduce to their known
//    normal form lists, each within one second.

void run_timed(const std::string& what, const std::function<void()>& body) {
  auto t0 = Clock::now();
  body();
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  require(secs < 1.0, what + " took " + std::to_string(secs) + " s (limit 1 s)");
}

void criterion_completion_goldens() {
  run_timed("three-generator chain presentation", [] {
    fcs::PresentedSemigroup ps =
        fcs::from_presentation(fcs::orient(fcs::parse_presentation_file(data("rf1.pres"))));
    require(ps.sgr.n == 11, "expected 11 normal forms, got " + std::to_string(ps.sgr.n));
    std::vector<std::string> want = {"a",     "b",     "c",     "a b",   "a c",  "b^2",
                                     "b c",   "a b^2", "a b c", "b^2 c", "a b^2 c"};
    require(ps.sgr.names == want, "normal forms differ: got " + join(ps.sgr.names));
  });

  run_timed("two-generator power presentation", [] {
    fcs::RuleSystem raw = fcs::orient(fcs::parse_presentation_file(data("rf2.pres")));
    fcs::RuleSystem done = fcs::complete(raw);
    std::set<std::string> got;
    for (const fcs::Rule& r : done.rules) got.insert(fcs::format_rule(r, done.gens));
    require(got.count("a b^2 -> a") == 1, "completion must add the rule a b^2 -> a");
    std::set<std::string> want = {"a^3 -> b^2", "a b^2 -> a", "b^4 -> b^2"};
    require(got == want, "completed rule set differs from the golden one");
    fcs::NormalForms nf = fcs::enumerate_normal_forms(done);
    require(nf.finite && nf.cardinality == 7, "expected 7 normal forms");
    std::vector<std::string> names;
    for (const fcs::Word& w : nf.forms) names.push_back(fcs::format_word(w, done.gens));
    std::vector<std::string> forms = {"a", "b", "a^2", "a b", "b^2", "a^2 b", "b^3"};
    require(names == forms, "normal forms differ: got " + join(names));
  });

  run_timed("four-generator nil presentation", [] {
    fcs::PresentedSemigroup ps =
        fcs::from_presentation(fcs::orient(fcs::parse_presentation_file(data("rf3.pres"))));
    require(ps.sgr.n == 40, "expected 40 elements, got " + std::to_string(ps.sgr.n));
    require(fcs::is_nil(ps.sgr), "the 40-element quotient must be nil");
  });

  run_timed("semilattice presentation", [] {
    fcs::PresentedSemigroup ps =
        fcs::from_presentation(fcs::orient(fcs::parse_presentation_file(data("rf4.pres"))));
    require(ps.sgr.n == 7, "expected 7 elements, got " + std::to_string(ps.sgr.n));
    require(fcs::is_semilattice(ps.sgr), "every element must be idempotent");
    std::vector<std::string> want = {"a", "b", "c", "d", "a b", "a d", "c d"};
    require(ps.sgr.names == want, "elements differ: got " + join(ps.sgr.names));
  });
}

// ---------------------------------------------------------------------------
// 2. Congruence oracle: for at least 500 random presentations the word
//    classes at length <= 6 (computed without completion) biject with the
//    normal forms of the completed system.

void criterion_congruence_oracle() {
  std::mt19937 rng(7001);
  int accepted = 0;
  int attempts = 0;
  std::uint64_t mismatches = 0;
  std::string first_bad;
  while (accepted < 500 && attempts < 4000) {
    ++attempts;
    fcs::Presentation p = t::random_presentation(rng);
    fcs::RuleSystem rs;
    try {
      rs = fcs::orient(p);
    } catch (const fcs::DomainError&) {
      continue; // degenerate draw (equal sides or duplicate relation)
    }
    fcs::RuleSystem done;
    try {
      done = fcs::complete(rs);
    } catch (const fcs::BudgetError&) {
      continue;
    }
    fcs::ThueClasses tc = fcs::thue_oracle(done, 6);
    ++accepted;

    std::uint64_t all_words = 0;
    for (std::uint64_t len = 1; len <= 6; ++len)
      all_words += fcs::count_words_of_length(len, done.k());

    bool bad = false;
    std::uint64_t covered = 0;
    for (const std::vector<fcs::Word>& cls : tc.classes) {
      covered += cls.size();
      const fcs::Word* rep = nullptr;
      int irreducible = 0;
      for (const fcs::Word& w : cls) {
        if (!fcs::is_reducible(w, done)) {
          ++irreducible;
          rep = &w;
        }
      }
      if (irreducible != 1) {
        bad = true;
        break;
      }
      for (const fcs::Word& w : cls) {
        if (fcs::reduce(w, done) != *rep) {
          bad = true;
          break;
        }
      }
      if (bad) break;
    }
    // The classes partition every word of length <= 6, so one irreducible
    // member per class pins the bijection once the totals agree.
    if (!bad && covered != all_words) bad = true;
    if (bad) {
      ++mismatches;
      if (first_bad.empty()) first_bad = fcs::format_rule_system(rs);
    }
  }
  require(accepted >= 500,
          "only " + std::to_string(accepted) + " of 500 random presentations completed");
  require(mismatches == 0, "class/normal-form mismatches on " + std::to_string(mismatches) +
                               " presentations; first offender:\n" + first_bad);
}

// ---------------------------------------------------------------------------
// 3. Morphism exponents between cyclic semigroups: golden sets, composition,
//    and the diamond count.

void criterion_cyclic_morphisms() {
  using V = std::vector<std::uint64_t>;
  auto expect = [](const fcs::ExqSet& got, const V& want, const std::string& what) {
    require(got.ks == want, what + " = {" + join(got.ks) + "}, want {" + join(want) + "}");
  };
  expect(fcs::exq({2, 10}, {13, 6}), V{9, 12, 15, 18}, "Exq(C(2,10) -> C(13,6))");
  expect(fcs::exq({2, 4}, {4, 1}), V{2, 3, 4}, "Exq(C(2,4) -> C(4,1))");
  expect(fcs::exq({4, 1}, {5, 3}), V{3, 6}, "Exq(C(4,1) -> C(5,3))");
  expect(fcs::exq({2, 4}, {1, 6}), V{3, 6}, "Exq(C(2,4) -> C(1,6))");
  expect(fcs::exq({1, 6}, {5, 3}), V{5, 6, 7}, "Exq(C(1,6) -> C(5,3))");
  expect(fcs::exq({2, 4}, {5, 3}), V{3, 6}, "Exq(C(2,4) -> C(5,3))");

  expect(fcs::compose_exq(fcs::exq({2, 4}, {4, 1}), fcs::exq({4, 1}, {5, 3})), V{6},
         "composition through C(4,1)");
  expect(fcs::compose_exq(fcs::exq({2, 4}, {1, 6}), fcs::exq({1, 6}, {5, 3})), V{6},
         "composition through C(1,6)");

  fcs::StrongCount sc = fcs::count_strong_semilattices({2, 4}, {4, 1}, {1, 6}, {5, 3});
  require(sc.count == 36, "diamond count = " + std::to_string(sc.count) + ", want 36");
  require(sc.intersection == V{6}, "diamond bottom exponents = {" + join(sc.intersection) + "}");
}

// ---------------------------------------------------------------------------
// 4. Ideal extensions: over every parameter choice up to 6 the builder
//    succeeds exactly when the arithmetic conditions hold, every built table
//    is a commutative semigroup partitioned into the two generator chains
//    with the declared types and generator product, and realizability plus
//    the index non-divisibility forces strong realizability.

std::string quintuple_tag(const fcs::Quintuple& q) {
  std::ostringstream os;
  os << "(" << q.m << "," << q.n << "," << q.mp << "," << q.np << ";" << q.k << ")";
  return os.str();
}

void criterion_ideal_extensions() {
  std::uint64_t built = 0;
  for (std::uint64_t m = 1; m <= 6; ++m)
    for (std::uint64_t n = 1; n <= 6; ++n)
      for (std::uint64_t mp = 1; mp <= 6; ++mp)
        for (std::uint64_t np = 1; np <= 6; ++np)
          for (std::uint64_t k = 0; k <= mp + np - 1; ++k) {
            fcs::Quintuple q{m, n, mp, np, k};
            std::string tag = quintuple_tag(q);
            bool index_ok = mp - 1 <= m * k;
            bool period_ok = (n * k) % np == 0;
            bool expected = k == 0 || (index_ok && period_ok);
            require(fcs::is_realizable(q) == expected, "is_realizable disagrees at " + tag);
            bool strong_expected = k >= 1 && mp <= m * k && period_ok;
            require(fcs::is_strongly_realizable(q) == strong_expected,
                    "is_strongly_realizable disagrees at " + tag);
            if (expected && k >= 1 && (mp - 1) % m != 0)
              require(strong_expected, "realizable with m not dividing m'-1 must be strong: " + tag);

            bool ok = true;
            fcs::Realization r;
            try {
              r = fcs::realize(q);
            } catch (const fcs::DomainError&) {
              ok = false;
            }
            require(ok == expected, "realize disagrees with the arithmetic conditions at " + tag);
            if (!ok) continue;
            ++built;

            const fcs::CayleySemigroup& s = r.sgr;
            int order = s.n;
            require(order == int(m + n - 1 + mp + np - 1), "element count at " + tag);
            for (int i = 0; i < order; ++i)
              for (int j = 0; j < order; ++j) {
                require(s.at(i, j) == s.at(j, i), "commutativity fails at " + tag);
                for (int l = 0; l < order; ++l)
                  require(s.at(s.at(i, j), l) == s.at(i, s.at(j, l)),
                          "associativity fails at " + tag);
              }

            // The two generated chains partition the extension.
            auto chain_of = [&](int gen) {
              std::vector<char> seen(std::size_t(order), 0);
              int cur = gen;
              while (!seen[std::size_t(cur)]) {
                seen[std::size_t(cur)] = 1;
                cur = s.at(cur, gen);
              }
              return seen;
            };
            std::vector<char> in_a = chain_of(r.a_id);
            std::vector<char> in_b = chain_of(r.b_id);
            for (int i = 0; i < order; ++i)
              require(in_a[std::size_t(i)] + in_b[std::size_t(i)] == 1,
                      "generator chains fail to partition the extension at " + tag);

            require(fcs::cyclic_type(s, r.a_id).type == fcs::CyclicType{m, n},
                    "top chain type at " + tag);
            require(fcs::cyclic_type(s, r.b_id).type == fcs::CyclicType{mp, np},
                    "ideal chain type at " + tag);

            // a*b = b^(k+1), computed by repeated multiplication.
            int bpow = r.b_id;
            for (std::uint64_t step = 0; step < k; ++step) bpow = s.at(bpow, r.b_id);
            require(s.at(r.a_id, r.b_id) == bpow, "generator product at " + tag);

            std::vector<int> b_elems;
            for (int i = 0; i < order; ++i)
              if (in_b[std::size_t(i)]) b_elems.push_back(i);
            require(fcs::is_ideal(s, b_elems).ok, "ideal chain is not an ideal at " + tag);
          }
  require(built > 0, "no quintuple realized");

  fcs::Quintuple plain{3, 9, 13, 18, 4};
  require(fcs::is_realizable(plain) && !fcs::is_strongly_realizable(plain),
          "(3,9,13,18;4) must be realizable but not strongly");
  fcs::Quintuple strong{3, 9, 13, 18, 6};
  require(fcs::is_realizable(strong) && fcs::is_strongly_realizable(strong),
          "(3,9,13,18;6) must be strongly realizable");
  require(fcs::realize(plain).sgr.n == 41 && fcs::realize(strong).sgr.n == 41,
          "the (3,9,13,18) extensions have 41 elements");
}

// ---------------------------------------------------------------------------
// 5. Modular arithmetic: fixed inverses and idempotent bases, the unit group
//    and component layout of Z_504, and agreement between the arithmetic
//    component report and the table decomposition for every modulus <= 300.

void criterion_modular_arithmetic() {
  require(fcs::inverse_mod(30, 49) == std::optional<std::uint64_t>(18), "inverse of 30 mod 49");

  fcs::CrtContext c60 = fcs::crt_context(60);
  require(c60.moduli == std::vector<std::uint64_t>{3, 4, 5},
          "prime power moduli of 60 = " + join(c60.moduli));
  require(c60.basis == std::vector<std::uint64_t>{40, 45, 36},
          "idempotent basis of 60 = " + join(c60.basis));

  fcs::AbelianType u504 = fcs::unit_group_type(504);
  require(u504 == fcs::abelian_type_from_cyclic_orders({6, 2, 2, 6}),
          "unit group of Z_504 must normalize C_6 x C_2 x C_2 x C_6");
  require(u504.factors == std::vector<std::uint64_t>{2, 2, 6, 6},
          "unit group of Z_504 = " + join(u504.factors));

  fcs::ZnComponentReport rep504 = fcs::zn_component_report(504);
  std::vector<std::uint64_t> sizes;
  for (const fcs::ZnComponent& c : rep504.components) sizes.push_back(c.size);
  require(sizes == std::vector<std::uint64_t>{12, 24, 12, 24, 72, 144, 72, 144},
          "component sizes of Z_504 = " + join(sizes));
  bool found441 = false;
  for (const fcs::ZnComponent& c : rep504.components) {
    if (c.idempotent != 441) continue;
    found441 = true;
    std::vector<std::uint64_t> ker = c.kernel_elements;
    std::sort(ker.begin(), ker.end());
    require(ker == std::vector<std::uint64_t>{63, 189, 315, 441},
            "kernel of the 441 component = " + join(ker));
    require(c.kernel_type.factors == std::vector<std::uint64_t>{2, 2},
            "kernel type of the 441 component");
  }
  require(found441, "Z_504 has no component with idempotent 441");

  for (std::uint64_t n = 2; n <= 300; ++n) {
    std::string at = " at n=" + std::to_string(n);
    fcs::ZnComponentReport rep = fcs::zn_component_report(n);
    require(rep.materialized, "report not materialized" + at);
    fcs::CayleySemigroup s = fcs::zn_semigroup(n);
    fcs::ArchimedeanComponents ac = fcs::archimedean_components(s);
    require(rep.components.size() == ac.idempotents.size(), "component count" + at);
    for (const fcs::ZnComponent& c : rep.components) {
      auto it = std::find(ac.idempotents.begin(), ac.idempotents.end(), int(c.idempotent));
      require(it != ac.idempotents.end(), "idempotent missing from the table" + at);
      std::size_t idx = std::size_t(it - ac.idempotents.begin());
      const std::vector<int>& mem = ac.members[idx];
      require(c.size == mem.size(), "component size" + at);
      std::vector<std::uint64_t> mem64(mem.begin(), mem.end());
      std::vector<std::uint64_t> elems = c.elements;
      std::sort(elems.begin(), elems.end());
      require(mem64 == elems, "component members" + at);

      std::vector<int> ker = fcs::component_kernel(s, int(c.idempotent), mem);
      require(c.kernel_size == ker.size(), "kernel size" + at);
      std::vector<std::uint64_t> ker64(ker.begin(), ker.end());
      std::vector<std::uint64_t> kel = c.kernel_elements;
      std::sort(kel.begin(), kel.end());
      require(ker64 == kel, "kernel members" + at);

      fcs::AbelianType table_type =
          fcs::order_statistics_type(t::group_order_counts(s, int(c.idempotent), ker));
      require(table_type == c.kernel_type, "kernel type" + at);
    }
  }
}

// ---------------------------------------------------------------------------
// 6. Structure reports: the full five-step picture of Z_18, the kernel group
//    of the two-generator power presentation, and the divisibility poset of
//    the even residues mod 16.

void criterion_structure_reports() {
  fcs::CayleySemigroup z18 = fcs::zn_semigroup(18);
  fcs::StructureReport r = fcs::structure_report(z18);
  require(r.semilattice.idempotents == std::vector<int>{0, 1, 9, 10}, "idempotents of Z_18");
  require(r.components.members.size() == 4, "Z_18 has four components");
  require(r.components.members[0] == std::vector<int>{0, 6, 12}, "component of 0");
  require(r.components.members[1] == std::vector<int>{1, 5, 7, 11, 13, 17}, "component of 1");
  require(r.components.members[2] == std::vector<int>{3, 9, 15}, "component of 9");
  require(r.components.members[3] == std::vector<int>{2, 4, 8, 10, 14, 16}, "component of 10");
  require(r.reports[1].kernel_type.factors == std::vector<std::uint64_t>{6},
          "units of Z_18 form C_6");
  require(r.reports[3].kernel_type.factors == std::vector<std::uint64_t>{6},
          "the even invertible component of Z_18 is C_6");
  require(r.reports[0].kernel_type.factors.empty() && r.reports[2].kernel_type.factors.empty(),
          "nilpotent components of Z_18 have trivial kernels");
  std::vector<std::pair<int, int>> covers{{0, 2}, {0, 3}, {2, 1}, {3, 1}};
  require(r.semilattice.covers == covers, "semilattice covers of Z_18");

  fcs::PresentedSemigroup rf2 =
      fcs::from_presentation(fcs::orient(fcs::parse_presentation_file(data("rf2.pres"))));
  fcs::StructureReport r2 = fcs::structure_report(rf2.sgr);
  require(r2.reports.size() == 1, "one archimedean component expected");
  require(r2.reports[0].kernel.size() == 6, "six-element kernel expected");
  require(r2.reports[0].kernel_type.factors == std::vector<std::uint64_t>{6},
          "kernel group must be C_6");

  // Even residues mod 16 under multiplication: id i stands for residue 2i.
  std::vector<int> tab(64);
  std::vector<std::string> names;
  for (int i = 0; i < 8; ++i) {
    names.push_back(std::to_string(2 * i));
    for (int j = 0; j < 8; ++j) tab[std::size_t(i) * 8 + j] = (2 * i * j) % 8;
  }
  fcs::CayleySemigroup even16 = fcs::from_table(8, tab, names);
  require(fcs::is_nil(even16), "the even residues mod 16 form a nil semigroup");
  int id8 = 4;
  for (int x = 0; x < 8; ++x)
    require(even16.at(id8, x) == 0, "every multiple of 8 must be 0 mod 16");

  fcs::StructureReport r16 = fcs::structure_report(even16);
  require(r16.reports.size() == 1, "nil semigroup has one component");
  const fcs::NilPoset& np = r16.reports[0].nil;
  require(np.ambient == std::vector<int>{1, 2, 3, 4, 5, 6, 7}, "nil poset carrier");
  int local8 = 4; // ambient[3] == id of residue 8
  require(np.ambient[std::size_t(local8 - 1)] == id8, "local id of residue 8");
  for (int v = 1; v < np.order.n; ++v)
    require(np.order.leq(v, local8) == (v == local8),
            "only the zero lies strictly below 8 in the divisibility order");
  require(np.order.leq(0, local8), "the zero lies below 8");
  std::vector<int> uppers;
  for (auto [lo, hi] : np.covers)
    if (lo == local8) uppers.push_back(2 * np.ambient[std::size_t(hi - 1)]);
  std::sort(uppers.begin(), uppers.end());
  require(uppers == std::vector<int>{4, 12}, "upper covers of 8 = {" + join(uppers) + "}");
}

// ---------------------------------------------------------------------------
// 7. Abelian typing: the golden Smith form with verified transforms, order
//    statistics recovery, exhaustive round trips up to order 5000, and the
//    partition count.

void criterion_abelian_typing() {
  fcs::IntMatrix a = fcs::parse_matrix_file(data("rf6.mat"));
  fcs::SmithResult sm = fcs::smith_normal_form(a);
  require(sm.d.rows == 3 && sm.d.cols == 3, "diagonal shape");
  std::vector<std::int64_t> diag = {2, 4, 12};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      require(sm.d.at(i, j) == (i == j ? diag[std::size_t(i)] : 0),
              "diagonal must be (2, 4, 12)");
  require(fcs::matmul(fcs::matmul(sm.c, a), sm.b) == sm.d, "C*A*B != D");
  std::int64_t dc = fcs::determinant(sm.c);
  std::int64_t db = fcs::determinant(sm.b);
  require(dc == 1 || dc == -1, "row transform is not unimodular");
  require(db == 1 || db == -1, "column transform is not unimodular");

  // Two-power profile with invariant factors 2,2,4,8,8,8,16,32: exactly
  // three factors equal 8, recovered from the order counts alone.
  fcs::AbelianType big{std::vector<std::uint64_t>{2, 2, 4, 8, 8, 8, 16, 32}};
  std::map<std::uint64_t, std::uint64_t> profile = fcs::order_profile(big);
  fcs::AbelianType from_counts = fcs::order_statistics_type(profile);
  require(from_counts == big, "order statistics typing differs");
  require(fcs::order_statistics_type_second_difference(profile) == big,
          "second difference typing differs");
  int eights = int(std::count(from_counts.factors.begin(), from_counts.factors.end(), 8));
  require(eights == 3, "expected exactly three invariant factors equal to 8");

  std::uint64_t types = 0;
  std::vector<std::uint64_t> chain;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t prod) {
    if (!chain.empty()) {
      ++types;
      fcs::AbelianType ty{chain};
      std::map<std::uint64_t, std::uint64_t> p = fcs::order_profile(ty);
      require(fcs::order_statistics_type(p) == ty,
              "round trip failed for invariant factors " + join(chain));
      require(fcs::order_statistics_type_second_difference(p) == ty,
              "second difference round trip failed for " + join(chain));
    }
    std::uint64_t last = chain.empty() ? 1 : chain.back();
    std::uint64_t step = chain.empty() ? 1 : last;
    for (std::uint64_t f = chain.empty() ? 2 : last; prod * f <= 5000; f += step) {
      chain.push_back(f);
      rec(prod * f);
      chain.pop_back();
    }
  };
  rec(1);
  require(types >= 4999, "expected at least one type per order up to 5000");
  require(fcs::order_statistics_type(fcs::order_profile(fcs::AbelianType{})) ==
              fcs::AbelianType{},
          "trivial group round trip");

  require(fcs::count_abelian_groups_of_order(2, 15) == 176, "partition count p(15)");
}

// ---------------------------------------------------------------------------
// 8. Closure systems: the two bundled implication systems enumerate exactly
//    their brute-force closed set families, and the join-relation semilattice
//    has one element per non-empty closed set (11; the empty set is the
//    twelfth closed set and carries no element).

void criterion_closure_systems() {
  auto check_cover = [](const std::string& file, std::uint64_t want) {
    fcs::ImplicationInput in = fcs::parse_implications_file(data(file));
    fcs::ImplicationSystem sys{in.ground, in.implications};
    fcs::ClosureCover cover = fcs::closure_cover(sys);
    require(cover.count == want,
            file + ": " + std::to_string(cover.count) + " closed sets, want " +
                std::to_string(want));
    std::set<fcs::SubsetMask> got;
    for (const fcs::Row012& row : cover.rows)
      for (fcs::SubsetMask m : row.expand()) got.insert(m);
    require(got.size() == want, file + ": rows overlap");
    require(got == t::brute_closed_sets(sys), file + ": closed sets differ from brute force");
  };
  check_cover("sigma2.imp", 12);
  check_cover("sigma1.imp", 8);

  fcs::ImplicationInput in5 = fcs::parse_implications_file(data("rf5.imp"));
  require(!in5.relations.empty(), "rf5.imp must carry join relations");
  fcs::ImplicationSystem sys5{in5.ground,
                              fcs::semilattice_relations_to_implications(in5.relations)};
  std::set<fcs::SubsetMask> closed = t::brute_closed_sets(sys5);
  std::size_t nonempty = closed.size() - closed.count(fcs::SubsetMask(0));
  require(nonempty == 11, "expected 11 non-empty closed sets, got " + std::to_string(nonempty));
  fcs::RfslSemilattice y = fcs::rfsl(in5.ground, in5.relations);
  require(std::size_t(y.sgr.n) == nonempty,
          "semilattice order " + std::to_string(y.sgr.n) + " != closed set count " +
              std::to_string(nonempty));
  require(fcs::closure_cover(sys5).count == closed.size(), "cover count differs from brute force");
}

// ---------------------------------------------------------------------------
// 9. Property suites: kernels of random semigroups are group ideals, products
//    split idempotents and kernels coordinatewise, the power idempotent map
//    is multiplicative, the three-element nil census is exhaustive, and the
//    retract search finds the known transversal of Z_18.

void criterion_property_suites() {
  std::mt19937 rng(9001);
  int done_count = 0;
  int attempts = 0;
  while (done_count < 200 && attempts < 1000) {
    ++attempts;
    fcs::Presentation p = t::random_finite_presentation(rng);
    fcs::PresentedSemigroup ps;
    try {
      ps = fcs::from_presentation(fcs::orient(p));
    } catch (const fcs::DomainError&) {
      continue; // duplicate relation drawn
    } catch (const fcs::BudgetError&) {
      continue;
    }
    fcs::Subsemigroup k = fcs::kernel(ps.sgr);
    require(fcs::is_group(k.sgr),
            "kernel is not a group for\n" + fcs::format_rule_system(ps.completed));
    require(fcs::is_ideal(ps.sgr, k.elements).ok,
            "kernel is not an ideal for\n" + fcs::format_rule_system(ps.completed));
    ++done_count;
  }
  require(done_count >= 200,
          "only " + std::to_string(done_count) + " of 200 random kernels checked");

  std::vector<fcs::CayleySemigroup> pool;
  pool.push_back(fcs::zn_semigroup(6));
  pool.push_back(fcs::zn_semigroup(18));
  pool.push_back(
      fcs::from_presentation(fcs::orient(fcs::parse_presentation_file(data("rf2.pres")))).sgr);
  pool.push_back(fcs::cyclic_semigroup({2, 3}));
  pool.push_back(fcs::cyclic_semigroup({3, 2}));

  std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 2}, {1, 3}, {2, 4}, {3, 0}};
  std::vector<fcs::CayleySemigroup> products;
  for (auto [ia, ib] : pairs) {
    const fcs::CayleySemigroup& A = pool[ia];
    const fcs::CayleySemigroup& B = pool[ib];
    fcs::CayleySemigroup prod = fcs::direct_product(A, B);

    std::vector<int> want_e;
    for (int x : fcs::idempotents(A))
      for (int y : fcs::idempotents(B)) want_e.push_back(x * B.n + y);
    std::sort(want_e.begin(), want_e.end());
    require(fcs::idempotents(prod) == want_e,
            "idempotents of a product must be the pairs of idempotents");

    std::vector<int> want_k;
    for (int x : fcs::kernel(A).elements)
      for (int y : fcs::kernel(B).elements) want_k.push_back(x * B.n + y);
    std::sort(want_k.begin(), want_k.end());
    require(fcs::kernel(prod).elements == want_k,
            "kernel of a product must be the product of kernels");
    products.push_back(std::move(prod));
  }

  for (const fcs::CayleySemigroup* s :
       {&pool[0], &pool[1], &pool[2], &pool[3], &pool[4], &products[0], &products[1]}) {
    fcs::ArchimedeanComponents ac = fcs::archimedean_components(*s);
    for (int x = 0; x < s->n; ++x)
      for (int y = 0; y < s->n; ++y)
        require(ac.idempotent_of[std::size_t(s->at(x, y))] ==
                    s->at(ac.idempotent_of[std::size_t(x)], ac.idempotent_of[std::size_t(y)]),
                "power idempotent of a product must be the product of power idempotents");
  }

  // Exhaustive census of the 729 commutative 3x3 tables: exactly nine are
  // nil semigroups, three with constant multiplication and six relabelings
  // of the chain C(3,1).
  fcs::CayleySemigroup c31 = fcs::cyclic_semigroup({3, 1});
  int assoc = 0;
  int nil_count = 0;
  int zero_tables = 0;
  int chains = 0;
  for (int code = 0; code < 729; ++code) {
    int e[6];
    int c = code;
    for (int i = 0; i < 6; ++i) {
      e[i] = c % 3;
      c /= 3;
    }
    std::vector<int> tab(9);
    tab[0] = e[0];
    tab[1] = tab[3] = e[1];
    tab[2] = tab[6] = e[2];
    tab[4] = e[3];
    tab[5] = tab[7] = e[4];
    tab[8] = e[5];
    bool ok = true;
    for (int x = 0; x < 3 && ok; ++x)
      for (int y = 0; y < 3 && ok; ++y)
        for (int z = 0; z < 3 && ok; ++z)
          if (tab[std::size_t(tab[std::size_t(x) * 3 + y]) * 3 + z] !=
              tab[std::size_t(x) * 3 + std::size_t(tab[std::size_t(y) * 3 + z])])
            ok = false;
    if (!ok) continue;
    ++assoc;
    fcs::CayleySemigroup s = fcs::from_table(3, tab);
    if (!fcs::is_nil(s)) continue;
    ++nil_count;
    bool constant = true;
    for (int i = 1; i < 9; ++i)
      if (tab[std::size_t(i)] != tab[0]) constant = false;
    if (constant) {
      ++zero_tables;
    } else {
      require(fcs::is_isomorphic(s, c31), "unexpected three-element nil semigroup");
      ++chains;
    }
  }
  require(assoc > 9, "associativity filter dropped too much");
  require(nil_count == 9 && zero_tables == 3 && chains == 6,
          "three-element nil census: " + std::to_string(nil_count) + " nil, " +
              std::to_string(zero_tables) + " constant, " + std::to_string(chains) + " chains");

  fcs::RetractSearch found = fcs::j_retract_search(fcs::zn_semigroup(18));
  require(found.status == fcs::SearchStatus::Found, "no retract found for Z_18");
  require(found.retract == std::vector<int>{0, 1, 3, 9, 10, 12},
          "retract of Z_18 = {" + join(found.retract) + "}");
}

struct Criterion {
  int number;
  const char* label;
  double budget_seconds;
  void (*fn)();
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "completion goldens", 4.0, criterion_completion_goldens},
      {2, "congruence oracle equivalence", 60.0, criterion_congruence_oracle},
      {3, "cyclic morphism exponents", 1.0, criterion_cyclic_morphisms},
      {4, "ideal extension classification", 120.0, criterion_ideal_extensions},
      {5, "modular arithmetic decomposition", 60.0, criterion_modular_arithmetic},
      {6, "structure reports", 5.0, criterion_structure_reports},
      {7, "abelian group typing", 30.0, criterion_abelian_typing},
      {8, "closure systems", 5.0, criterion_closure_systems},
      {9, "algebraic property suites", 60.0, criterion_property_suites},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = Clock::now();
    std::string reason;
    try {
      c.fn();
    } catch (const std::exception& e) {
      reason = e.what();
    } catch (...) {
      reason = "unknown error";
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (reason.empty() && secs > c.budget_seconds) {
      std::ostringstream os;
      os << "over budget: " << secs << " s with a limit of " << c.budget_seconds << " s";
      reason = os.str();
    }
    if (reason.empty()) {
      std::printf("PASS criterion %d (%s) [%.2fs]\n", c.number, c.label, secs);
    } else {
      ++failures;
      std::printf("FAIL criterion %d (%s): %s [%.2fs]\n", c.number, c.label, reason.c_str(),
                  secs);
    }
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - std::size_t(failures),
              criteria.size());
  return failures;
}
