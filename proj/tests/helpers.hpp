#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fcs/cayley.hpp"
#include "fcs/closure.hpp"
#include "fcs/rewriting.hpp"
#include "fcs/word.hpp"

namespace t {

inline fcs::Word W(std::vector<fcs::Exp> e) { return fcs::Word(std::move(e)); }

inline fcs::Presentation pres(const std::string& text) {
  std::istringstream in(text);
  return fcs::parse_presentation(in);
}

inline fcs::RuleSystem rules(const std::string& text) {
  return fcs::orient(pres(text));
}

inline fcs::CayleySemigroup table(const std::string& text) {
  std::istringstream in(text);
  return fcs::parse_cayley(in);
}

// Element order within a group given by the ambient table: least t with
// x^t == identity.
inline std::uint64_t group_element_order(const fcs::CayleySemigroup& s, int identity, int x) {
  std::uint64_t t = 1;
  int p = x;
  while (p != identity) {
    p = s.at(p, x);
    ++t;
  }
  return t;
}

inline std::map<std::uint64_t, std::uint64_t> group_order_counts(
    const fcs::CayleySemigroup& s, int identity, const std::vector<int>& members) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (int x : members) ++counts[group_element_order(s, identity, x)];
  return counts;
}

// All closed sets of an implication system by checking every subset; the
// independent oracle for closure_cover (ground sets stay small in tests).
inline std::set<fcs::SubsetMask> brute_closed_sets(const fcs::ImplicationSystem& sys) {
  std::set<fcs::SubsetMask> out;
  fcs::SubsetMask full = fcs::SubsetMask((1u << sys.ground.size()) - 1);
  for (fcs::SubsetMask a = 0;; ++a) {
    bool closed = true;
    for (const auto& imp : sys.implications) {
      if ((a & imp.premise) == imp.premise && (a & imp.conclusion) != imp.conclusion) {
        closed = false;
        break;
      }
    }
    if (closed) out.insert(a);
    if (a == full) break;
  }
  return out;
}

// Random presentation in the acceptance-2 regime: <= 3 generators,
// <= 4 relations, exponents <= 4.
inline fcs::Presentation random_presentation(std::mt19937& rng) {
  std::uniform_int_distribution<int> gens_d(1, 3);
  int k = gens_d(rng);
  fcs::Presentation p;
  for (int i = 0; i < k; ++i) p.gens.push_back(std::string(1, char('a' + i)));
  std::uniform_int_distribution<int> rels_d(1, 4);
  std::uniform_int_distribution<int> exp_d(0, 4);
  int rels = rels_d(rng);
  for (int r = 0; r < rels; ++r) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      std::vector<fcs::Exp> u(std::size_t(k), 0), v(std::size_t(k), 0);
      for (int i = 0; i < k; ++i) {
        u[std::size_t(i)] = fcs::Exp(exp_d(rng));
        v[std::size_t(i)] = fcs::Exp(exp_d(rng));
      }
      bool uz = true, vz = true;
      for (int i = 0; i < k; ++i) {
        if (u[std::size_t(i)]) uz = false;
        if (v[std::size_t(i)]) vz = false;
      }
      if (uz || vz || u == v) continue;
      p.relations.emplace_back(fcs::Word(u), fcs::Word(v));
      break;
    }
  }
  return p;
}

// Random presentation guaranteed to present a finite semigroup: every
// generator gets a power collapse g^hi = g^lo, then a few extra relations.
inline fcs::Presentation random_finite_presentation(std::mt19937& rng) {
  std::uniform_int_distribution<int> gens_d(1, 3);
  int k = gens_d(rng);
  fcs::Presentation p;
  for (int i = 0; i < k; ++i) p.gens.push_back(std::string(1, char('a' + i)));
  std::uniform_int_distribution<int> hi_d(2, 5);
  for (int i = 0; i < k; ++i) {
    int hi = hi_d(rng);
    std::uniform_int_distribution<int> lo_d(1, hi - 1);
    int lo = lo_d(rng);
    std::vector<fcs::Exp> u(std::size_t(k), 0), v(std::size_t(k), 0);
    u[std::size_t(i)] = fcs::Exp(hi);
    v[std::size_t(i)] = fcs::Exp(lo);
    p.relations.emplace_back(fcs::Word(u), fcs::Word(v));
  }
  std::uniform_int_distribution<int> extra_d(0, 2);
  std::uniform_int_distribution<int> exp_d(0, 3);
  int extra = extra_d(rng);
  for (int r = 0; r < extra; ++r) {
    std::vector<fcs::Exp> u(std::size_t(k), 0), v(std::size_t(k), 0);
    bool uz = true, vz = true;
    for (int i = 0; i < k; ++i) {
      u[std::size_t(i)] = fcs::Exp(exp_d(rng));
      v[std::size_t(i)] = fcs::Exp(exp_d(rng));
      if (u[std::size_t(i)]) uz = false;
      if (v[std::size_t(i)]) vz = false;
    }
    if (uz || vz || u == v) continue;
    p.relations.emplace_back(fcs::Word(u), fcs::Word(v));
  }
  return p;
}

} // namespace t
