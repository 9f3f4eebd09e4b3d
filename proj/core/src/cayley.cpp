#include "fcs/cayley.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fcs {

namespace {

constexpr const char* kMod = "core_semigroup";

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names[std::size_t(i)] = "x" + std::to_string(i);
  return names;
}

} // namespace

void validate_poset(const Poset& p) {
  for (int i = 0; i < p.n; ++i) {
    if (!p.leq(i, i)) {
      throw DomainError("poset", "not reflexive at " + std::to_string(i));
    }
  }
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (i != j && p.leq(i, j) && p.leq(j, i)) {
        throw DomainError("poset", "not antisymmetric at (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ")");
      }
    }
  }
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (!p.leq(i, j)) continue;
      for (int l = 0; l < p.n; ++l) {
        if (p.leq(j, l) && !p.leq(i, l)) {
          throw DomainError("poset", "not transitive via (" + std::to_string(i) + ", " +
                                         std::to_string(j) + ", " + std::to_string(l) + ")");
        }
      }
    }
  }
}

void transitive_close(Poset& p) {
  for (int i = 0; i < p.n; ++i) p.set(i, i);
  for (int k = 0; k < p.n; ++k) {
    for (int i = 0; i < p.n; ++i) {
      if (!p.leq(i, k)) continue;
      for (int j = 0; j < p.n; ++j) {
        if (p.leq(k, j)) p.set(i, j);
      }
    }
  }
}

std::vector<std::pair<int, int>> cover_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool covered = true;
      for (int m = 0; m < p.n && covered; ++m) {
        if (m != i && m != j && p.leq(i, m) && p.leq(m, j)) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

MeetTable meets(const Poset& p) {
  MeetTable mt;
  mt.meet.assign(std::size_t(p.n) * p.n, -1);
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      std::vector<int> lbs;
      for (int c = 0; c < p.n; ++c) {
        if (p.leq(c, i) && p.leq(c, j)) lbs.push_back(c);
      }
      int greatest = -1;
      for (int cand : lbs) {
        bool dominates = true;
        for (int c : lbs) {
          if (!p.leq(c, cand)) {
            dominates = false;
            break;
          }
        }
        if (dominates) {
          greatest = cand;
          break;
        }
      }
      if (greatest == -1) {
        mt.total = false;
        mt.failing = {i, j};
        return mt;
      }
      mt.meet[std::size_t(i) * p.n + j] = greatest;
    }
  }
  mt.total = true;
  return mt;
}

std::vector<std::vector<int>> descending_chains(const Poset& p, int top, int bottom) {
  if (!p.leq(bottom, top)) {
    throw DomainError("poset", "no descending chain: " + std::to_string(bottom) +
                                   " is not below " + std::to_string(top));
  }
  auto covers = cover_pairs(p);
  std::vector<std::vector<int>> down(std::size_t(p.n));
  for (auto [lo, hi] : covers) down[std::size_t(hi)].push_back(lo);
  for (auto& v : down) std::sort(v.begin(), v.end());

  std::vector<std::vector<int>> chains;
  std::vector<int> cur{top};
  std::function<void(int)> walk = [&](int node) {
    if (node == bottom) {
      chains.push_back(cur);
      return;
    }
    for (int nxt : down[std::size_t(node)]) {
      if (!p.leq(bottom, nxt)) continue;
      cur.push_back(nxt);
      walk(nxt);
      cur.pop_back();
    }
  };
  walk(top);
  return chains;
}

CayleySemigroup from_table(int n, std::vector<int> tab, std::vector<std::string> names) {
  if (n <= 0) throw DomainError(kMod, "table size must be positive");
  if (tab.size() != std::size_t(n) * std::size_t(n)) {
    throw DomainError(kMod, "table has wrong shape");
  }
  for (int v : tab) {
    if (v < 0 || v >= n) throw DomainError(kMod, "table entry out of range: " + std::to_string(v));
  }
  if (names.empty()) names = default_names(n);
  if (names.size() != std::size_t(n)) throw DomainError(kMod, "name list has wrong length");

  CayleySemigroup s;
  s.n = n;
  s.tab = std::move(tab);
  s.names = std::move(names);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (s.at(i, j) != s.at(j, i)) {
        throw DomainError(kMod, "not commutative: " + s.name(i) + "*" + s.name(j) + " = " +
                                    s.name(s.at(i, j)) + " but " + s.name(j) + "*" + s.name(i) +
                                    " = " + s.name(s.at(j, i)));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int ij = s.at(i, j);
      for (int l = 0; l < n; ++l) {
        if (s.at(ij, l) != s.at(i, s.at(j, l))) {
          throw DomainError(kMod, "not associative at (" + s.name(i) + ", " + s.name(j) +
                                      ", " + s.name(l) + ")");
        }
      }
    }
  }
  return s;
}

CayleySemigroup cyclic_semigroup(const CyclicType& t, const std::string& gen) {
  if (t.m < 1 || t.n < 1) throw DomainError(kMod, "cyclic type needs m >= 1 and n >= 1");
  std::uint64_t size64 = t.order();
  if (size64 > 1u << 20) throw DomainError(kMod, "cyclic semigroup too large to materialize");
  int size = int(size64);
  // Element id i stands for the power a^(i+1); exponents wrap into the body
  // [m, m+n-1] once past the tail.
  auto canon = [&](std::uint64_t exp) -> int {
    if (exp <= size64) return int(exp - 1);
    std::uint64_t j = t.m + (exp - t.m) % t.n;
    return int(j - 1);
  };
  std::vector<int> tab(std::size_t(size) * size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      tab[std::size_t(i) * size + j] = canon(std::uint64_t(i) + 1 + j + 1);
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    names[std::size_t(i)] = i == 0 ? gen : gen + "^" + std::to_string(i + 1);
  }
  return from_table(size, std::move(tab), std::move(names));
}

PresentedSemigroup from_presentation(const RuleSystem& rs, const CompletionBudget& cb,
                                     const ElementBudget& eb) {
  PresentedSemigroup ps;
  ps.completed = complete(rs, cb);
  NormalForms nf = enumerate_normal_forms(ps.completed);
  if (!nf.finite) {
    throw DomainError(kMod, "presentation defines an infinite semigroup");
  }
  if (nf.cardinality > eb.max_elements) {
    throw BudgetError(kMod, "presented semigroup has " + std::to_string(nf.cardinality) +
                                " elements, budget is " + std::to_string(eb.max_elements));
  }
  ps.forms = std::move(nf.forms);
  int n = int(ps.forms.size());

  std::map<std::vector<Exp>, int> index;
  for (int i = 0; i < n; ++i) index[ps.forms[std::size_t(i)].e] = i;

  std::vector<int> tab(std::size_t(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Word prod = reduce(mul(ps.forms[std::size_t(i)], ps.forms[std::size_t(j)]), ps.completed);
      auto it = index.find(prod.e);
      if (it == index.end()) {
        throw DomainError(kMod, "reduction left the normal form set; system is not confluent");
      }
      tab[std::size_t(i) * n + j] = it->second;
      tab[std::size_t(j) * n + i] = it->second;
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    names[std::size_t(i)] = word_name(ps.forms[std::size_t(i)], rs.gens);
  }
  ps.sgr = from_table(n, std::move(tab), std::move(names));
  return ps;
}

CayleySemigroup direct_product(const CayleySemigroup& a, const CayleySemigroup& b,
                               const ElementBudget& eb) {
  std::uint64_t n64 = std::uint64_t(a.n) * std::uint64_t(b.n);
  if (n64 > eb.max_elements) {
    throw BudgetError(kMod, "direct product has " + std::to_string(n64) +
                                " elements, budget is " + std::to_string(eb.max_elements));
  }
  int n = int(n64);
  auto id = [&](int i, int j) { return i * b.n + j; };
  std::vector<int> tab(std::size_t(n) * n);
  for (int i1 = 0; i1 < a.n; ++i1) {
    for (int j1 = 0; j1 < b.n; ++j1) {
      for (int i2 = 0; i2 < a.n; ++i2) {
        for (int j2 = 0; j2 < b.n; ++j2) {
          tab[std::size_t(id(i1, j1)) * n + id(i2, j2)] = id(a.at(i1, i2), b.at(j1, j2));
        }
      }
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < b.n; ++j) {
      names[std::size_t(id(i, j))] = "(" + a.name(i) + "," + b.name(j) + ")";
    }
  }
  return from_table(n, std::move(tab), std::move(names));
}

Subsemigroup subsemigroup_generated(const CayleySemigroup& s, const std::vector<int>& gens) {
  if (gens.empty()) throw DomainError(kMod, "need at least one generator");
  std::set<int> members;
  std::vector<int> frontier;
  for (int g : gens) {
    if (g < 0 || g >= s.n) throw DomainError(kMod, "generator id out of range");
    if (members.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (int y : members) {
        int p = s.at(x, y);
        if (members.insert(p).second) next.push_back(p);
      }
    }
    // products of older members with new ones are covered when the new ones
    // take their turn in the frontier
    frontier = std::move(next);
  }
  Subsemigroup sub;
  sub.elements.assign(members.begin(), members.end());
  int n = int(sub.elements.size());
  std::map<int, int> back;
  for (int i = 0; i < n; ++i) back[sub.elements[std::size_t(i)]] = i;
  std::vector<int> tab(std::size_t(n) * n);
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    names[std::size_t(i)] = s.name(sub.elements[std::size_t(i)]);
    for (int j = 0; j < n; ++j) {
      tab[std::size_t(i) * n + j] = back.at(s.at(sub.elements[std::size_t(i)],
                                                 sub.elements[std::size_t(j)]));
    }
  }
  sub.sgr = from_table(n, std::move(tab), std::move(names));
  return sub;
}

std::vector<int> idempotents(const CayleySemigroup& s) {
  std::vector<int> out;
  for (int i = 0; i < s.n; ++i) {
    if (s.at(i, i) == i) out.push_back(i);
  }
  return out;
}

CyclicData cyclic_type(const CayleySemigroup& s, int x) {
  if (x < 0 || x >= s.n) throw DomainError(kMod, "element id out of range");
  std::vector<int> seen_at(std::size_t(s.n), -1);
  int cur = x;
  std::uint32_t exp = 1;
  seen_at[std::size_t(cur)] = 1;
  while (true) {
    int nxt = s.at(cur, x);
    ++exp;
    if (seen_at[std::size_t(nxt)] != -1) {
      std::uint32_t m = std::uint32_t(seen_at[std::size_t(nxt)]);
      std::uint32_t n = exp - m;
      CyclicData d;
      d.type = {m, n};
      d.order = d.type.order();
      // Unique idempotent power: exponent in [m, m+n-1] divisible by n.
      std::uint64_t j = m + (n - m % n) % n;
      int e = x;
      for (std::uint64_t t = 1; t < j; ++t) e = s.at(e, x);
      d.power_idempotent = e;
      return d;
    }
    seen_at[std::size_t(nxt)] = int(exp);
    cur = nxt;
  }
}

std::optional<int> zero_of(const CayleySemigroup& s) {
  for (int z = 0; z < s.n; ++z) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x) ok = s.at(z, x) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

std::optional<int> identity_of(const CayleySemigroup& s) {
  for (int e = 0; e < s.n; ++e) {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x) ok = s.at(e, x) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

Subsemigroup kernel(const CayleySemigroup& s) {
  std::vector<int> es = idempotents(s);
  int ep = es.front();
  for (std::size_t i = 1; i < es.size(); ++i) ep = s.at(ep, es[i]);
  std::set<int> members;
  for (int x = 0; x < s.n; ++x) members.insert(s.at(ep, x));
  std::vector<int> ids(members.begin(), members.end());
  return subsemigroup_generated(s, ids);
}

IdealCheck is_ideal(const CayleySemigroup& s, const std::vector<int>& subset) {
  std::vector<char> in(std::size_t(s.n), 0);
  for (int i : subset) {
    if (i < 0 || i >= s.n) throw DomainError(kMod, "subset id out of range");
    in[std::size_t(i)] = 1;
  }
  IdealCheck res;
  for (int i : subset) {
    for (int x = 0; x < s.n; ++x) {
      if (!in[std::size_t(s.at(i, x))]) {
        res.ok = false;
        res.witness = {i, x};
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

ReesQuotient rees_quotient(const CayleySemigroup& s, const std::vector<int>& ideal) {
  if (ideal.empty()) throw DomainError(kMod, "ideal must be non-empty");
  IdealCheck chk = is_ideal(s, ideal);
  if (!chk.ok) {
    auto [i, x] = *chk.witness;
    throw DomainError(kMod, "not an ideal: " + s.name(i) + "*" + s.name(x) + " = " +
                                s.name(s.at(i, x)) + " escapes the subset");
  }
  std::vector<char> in(std::size_t(s.n), 0);
  for (int i : ideal) in[std::size_t(i)] = 1;

  ReesQuotient rq;
  rq.zero_id = 0;
  rq.image.assign(std::size_t(s.n), 0);
  std::vector<int> rest;
  for (int i = 0; i < s.n; ++i) {
    if (!in[std::size_t(i)]) rest.push_back(i);
  }
  int n = int(rest.size()) + 1;
  for (int i = 0; i < int(rest.size()); ++i) rq.image[std::size_t(rest[std::size_t(i)])] = i + 1;

  std::vector<int> tab(std::size_t(n) * n, 0);
  std::vector<std::string> names(static_cast<std::size_t>(n));
  names[0] = "0";
  for (int i = 0; i < int(rest.size()); ++i) names[std::size_t(i) + 1] = s.name(rest[std::size_t(i)]);
  for (int i = 0; i < int(rest.size()); ++i) {
    for (int j = 0; j < int(rest.size()); ++j) {
      int p = s.at(rest[std::size_t(i)], rest[std::size_t(j)]);
      tab[std::size_t(i + 1) * n + (j + 1)] = in[std::size_t(p)] ? 0 : rq.image[std::size_t(p)];
    }
  }
  rq.sgr = from_table(n, std::move(tab), std::move(names));
  return rq;
}

bool is_nil(const CayleySemigroup& s) {
  auto z = zero_of(s);
  if (!z) return false;
  std::vector<int> es = idempotents(s);
  return es.size() == 1 && es.front() == *z;
}

bool is_group(const CayleySemigroup& s) {
  auto e = identity_of(s);
  if (!e) return false;
  for (int x = 0; x < s.n; ++x) {
    bool inv = false;
    for (int y = 0; y < s.n && !inv; ++y) inv = s.at(x, y) == *e;
    if (!inv) return false;
  }
  return true;
}

bool is_semilattice(const CayleySemigroup& s) {
  for (int i = 0; i < s.n; ++i) {
    if (s.at(i, i) != i) return false;
  }
  return true;
}

bool is_archimedean(const CayleySemigroup& s) { return idempotents(s).size() == 1; }

bool is_cancellative(const CayleySemigroup& s) {
  for (int a = 0; a < s.n; ++a) {
    std::vector<char> hit(std::size_t(s.n), 0);
    for (int x = 0; x < s.n; ++x) {
      int p = s.at(a, x);
      if (hit[std::size_t(p)]) return false;
      hit[std::size_t(p)] = 1;
    }
  }
  return true;
}

std::vector<int> units(const CayleySemigroup& s) {
  auto e = identity_of(s);
  if (!e) throw DomainError(kMod, "semigroup has no identity element");
  std::vector<int> out;
  for (int x = 0; x < s.n; ++x) {
    for (int y = 0; y < s.n; ++y) {
      if (s.at(x, y) == *e) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

bool j_leq(const CayleySemigroup& s, int a, int b) {
  if (a == b) return true;
  for (int c = 0; c < s.n; ++c) {
    if (s.at(b, c) == a) return true;
  }
  return false;
}

std::vector<std::vector<int>> j_classes(const CayleySemigroup& s) {
  std::vector<int> cls(std::size_t(s.n), -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < s.n; ++i) {
    if (cls[std::size_t(i)] != -1) continue;
    int c = int(out.size());
    cls[std::size_t(i)] = c;
    out.push_back({i});
    for (int j = i + 1; j < s.n; ++j) {
      if (cls[std::size_t(j)] == -1 && j_leq(s, i, j) && j_leq(s, j, i)) {
        cls[std::size_t(j)] = c;
        out.back().push_back(j);
      }
    }
  }
  return out;
}

JPoset j_poset(const CayleySemigroup& s) {
  JPoset jp;
  jp.classes = j_classes(s);
  int m = int(jp.classes.size());
  jp.order = Poset::discrete(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && j_leq(s, jp.classes[std::size_t(i)].front(), jp.classes[std::size_t(j)].front())) {
        jp.order.set(i, j);
      }
    }
  }
  validate_poset(jp.order);
  return jp;
}

namespace {

CongruencePartition partition_from_block_of(std::vector<int> block_of) {
  // Renumber blocks by least member so the output is canonical.
  int n = int(block_of.size());
  std::map<int, std::vector<int>> by_block;
  for (int i = 0; i < n; ++i) by_block[block_of[std::size_t(i)]].push_back(i);
  CongruencePartition part;
  part.block_of.assign(std::size_t(n), -1);
  for (auto& [key, members] : by_block) {
    (void)key;
    part.blocks.push_back(members);
  }
  std::sort(part.blocks.begin(), part.blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  for (int b = 0; b < int(part.blocks.size()); ++b) {
    for (int x : part.blocks[std::size_t(b)]) part.block_of[std::size_t(x)] = b;
  }
  return part;
}

} // namespace

CayleySemigroup quotient(const CayleySemigroup& s, const CongruencePartition& part) {
  if (part.block_of.size() != std::size_t(s.n)) {
    throw DomainError(kMod, "partition does not match semigroup size");
  }
  int m = int(part.blocks.size());
  for (int i = 0; i < s.n; ++i) {
    int b = part.block_of[std::size_t(i)];
    if (b < 0 || b >= m) throw DomainError(kMod, "partition block index out of range");
  }
  // Substitution property: within a block, multiplying by any element must
  // stay within one block.
  for (const auto& blk : part.blocks) {
    for (std::size_t i = 1; i < blk.size(); ++i) {
      int a = blk[0], b = blk[i];
      for (int c = 0; c < s.n; ++c) {
        if (part.block_of[std::size_t(s.at(a, c))] != part.block_of[std::size_t(s.at(b, c))]) {
          throw DomainError(kMod, "not a congruence: " + s.name(a) + " ~ " + s.name(b) +
                                      " but their products with " + s.name(c) +
                                      " fall in different blocks");
        }
      }
    }
  }
  std::vector<int> tab(std::size_t(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int a = part.blocks[std::size_t(i)].front();
      int b = part.blocks[std::size_t(j)].front();
      tab[std::size_t(i) * m + j] = part.block_of[std::size_t(s.at(a, b))];
    }
  }
  std::vector<std::string> names(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& blk = part.blocks[std::size_t(i)];
    if (blk.size() == 1) {
      names[std::size_t(i)] = s.name(blk.front());
    } else {
      std::string nm = "[" + s.name(blk.front());
      for (std::size_t t = 1; t < blk.size(); ++t) nm += " " + s.name(blk[t]);
      nm += "]";
      names[std::size_t(i)] = nm;
    }
  }
  return from_table(m, std::move(tab), std::move(names));
}

CongruencePartition smallest_congruence(const CayleySemigroup& s,
                                        const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> parent(std::size_t(s.n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[std::size_t(x)] != x) {
      parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
      x = parent[std::size_t(x)];
    }
    return x;
  };
  std::vector<std::pair<int, int>> work;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[std::size_t(b)] = a;
    work.emplace_back(a, b);
  };
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= s.n || b < 0 || b >= s.n) {
      throw DomainError(kMod, "pair id out of range");
    }
    unite(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (int c = 0; c < s.n; ++c) unite(s.at(a, c), s.at(b, c));
  }
  std::vector<int> block_of(std::size_t(s.n));
  for (int i = 0; i < s.n; ++i) block_of[std::size_t(i)] = find(i);
  return partition_from_block_of(std::move(block_of));
}

namespace {

struct RetractState {
  const CayleySemigroup* s;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<int> pick; // class index -> chosen element id, or -1
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool exhausted = true;
  std::optional<std::vector<int>> found;

  bool consistent() {
    // All products among chosen elements must land on chosen elements of
    // their own class (or a class still open).
    std::vector<int> chosen;
    for (std::size_t c = 0; c < pick.size(); ++c) {
      if (pick[c] != -1) chosen.push_back(pick[c]);
    }
    for (int a : chosen) {
      for (int b : chosen) {
        int p = s->at(a, b);
        int pc = class_of[std::size_t(p)];
        if (pick[std::size_t(pc)] != -1 && pick[std::size_t(pc)] != p) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t cls) {
    if (++nodes > budget) {
      exhausted = false;
      return true; // abort
    }
    if (cls == classes.size()) {
      // Every class has a pick and all constraints were checked on the way.
      std::vector<int> t;
      for (int x : pick) t.push_back(x);
      std::sort(t.begin(), t.end());
      found = t;
      return true;
    }
    for (int cand : classes[cls]) {
      pick[cls] = cand;
      if (consistent()) {
        if (dfs(cls + 1)) return true;
      }
      pick[cls] = -1;
    }
    return false;
  }
};

} // namespace

RetractSearch j_retract_search(const CayleySemigroup& s, std::uint64_t budget) {
  RetractState st;
  st.s = &s;
  st.classes = j_classes(s);
  std::sort(st.classes.begin(), st.classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  st.class_of.assign(std::size_t(s.n), -1);
  for (int c = 0; c < int(st.classes.size()); ++c) {
    for (int x : st.classes[std::size_t(c)]) st.class_of[std::size_t(x)] = c;
  }
  st.pick.assign(st.classes.size(), -1);
  st.budget = budget;
  st.dfs(0);

  RetractSearch res;
  if (st.found) {
    res.status = SearchStatus::Found;
    res.retract = *st.found;
  } else if (st.exhausted) {
    res.status = SearchStatus::None;
  } else {
    res.status = SearchStatus::Unknown;
  }
  return res;
}

namespace {

// Iterative refinement: color elements by local invariants until stable.
std::vector<int> stable_coloring(const CayleySemigroup& s) {
  std::vector<int> color(std::size_t(s.n));
  for (int i = 0; i < s.n; ++i) {
    CyclicData d = cyclic_type(s, i);
    color[std::size_t(i)] =
        int((std::uint64_t(d.type.m) << 20) ^ d.type.n ^ (s.at(i, i) == i ? 1u << 30 : 0));
  }
  // Normalize colors to small ints.
  auto renumber = [&](std::vector<int>& c) {
    std::map<int, int> remap;
    for (int v : c) remap.emplace(v, 0);
    int next = 0;
    for (auto& [k, v] : remap) v = next++;
    for (int& v : c) v = remap[v];
    return next;
  };
  int classes = renumber(color);
  while (true) {
    std::map<std::vector<int>, int> sig_map;
    std::vector<int> next(std::size_t(s.n));
    for (int i = 0; i < s.n; ++i) {
      std::vector<int> sig;
      sig.push_back(color[std::size_t(i)]);
      std::vector<std::pair<int, int>> prods;
      for (int j = 0; j < s.n; ++j) {
        prods.emplace_back(color[std::size_t(j)], color[std::size_t(s.at(i, j))]);
      }
      std::sort(prods.begin(), prods.end());
      for (auto [a, b] : prods) {
        sig.push_back(a);
        sig.push_back(b);
      }
      auto [it, fresh] = sig_map.emplace(std::move(sig), int(sig_map.size()));
      (void)fresh;
      next[std::size_t(i)] = it->second;
    }
    int nclasses = int(sig_map.size());
    if (nclasses == classes) break;
    classes = nclasses;
    color = std::move(next);
  }
  return color;
}

// Tries map[i] = j given map[0..i-1] already set; checks every product whose
// factors and result all lie in {0..i}.
bool iso_extend_ok(const CayleySemigroup& a, const CayleySemigroup& b,
                   const std::vector<int>& map, int i, int j) {
  auto mapped = [&](int x) { return x == i ? j : (x < i ? map[std::size_t(x)] : -1); };
  for (int t = 0; t <= i; ++t) {
    int p = a.at(i, t);
    int pm = mapped(p);
    if (pm != -1 && b.at(j, mapped(t)) != pm) return false;
  }
  for (int u = 0; u < i; ++u) {
    for (int v = u; v < i; ++v) {
      if (a.at(u, v) == i && b.at(map[std::size_t(u)], map[std::size_t(v)]) != j) return false;
    }
  }
  return true;
}

bool iso_dfs(const CayleySemigroup& a, const CayleySemigroup& b, const std::vector<int>& ca,
             const std::vector<int>& cb, std::vector<int>& map, std::vector<char>& used,
             int i) {
  if (i == a.n) return true;
  for (int j = 0; j < b.n; ++j) {
    if (used[std::size_t(j)] || cb[std::size_t(j)] != ca[std::size_t(i)]) continue;
    if (!iso_extend_ok(a, b, map, i, j)) continue;
    map[std::size_t(i)] = j;
    used[std::size_t(j)] = 1;
    if (iso_dfs(a, b, ca, cb, map, used, i + 1)) return true;
    map[std::size_t(i)] = -1;
    used[std::size_t(j)] = 0;
  }
  return false;
}

} // namespace

bool is_isomorphic(const CayleySemigroup& a, const CayleySemigroup& b) {
  if (a.n != b.n) return false;
  std::vector<int> ca = stable_coloring(a);
  std::vector<int> cb = stable_coloring(b);
  std::vector<int> ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  std::vector<int> map(std::size_t(a.n), -1);
  std::vector<char> used(std::size_t(b.n), 0);
  return iso_dfs(a, b, ca, cb, map, used, 0);
}

CayleySemigroup parse_cayley(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  std::vector<int> tab;
  std::vector<std::string> names;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (n == -1) {
      try {
        n = std::stoi(first);
      } catch (...) {
        throw ParseError(kMod, "expected table size", lineno);
      }
      if (n <= 0) throw ParseError(kMod, "table size must be positive", lineno);
      continue;
    }
    if (first == "names:") {
      std::string nm;
      while (ls >> nm) names.push_back(nm);
      continue;
    }
    // A table row.
    std::istringstream row(line);
    int v;
    while (row >> v) tab.push_back(v);
  }
  if (n == -1) throw ParseError(kMod, "empty table file");
  if (tab.size() != std::size_t(n) * std::size_t(n)) {
    throw ParseError(kMod, "expected " + std::to_string(n) + "x" + std::to_string(n) +
                               " entries, got " + std::to_string(tab.size()));
  }
  if (!names.empty() && names.size() != std::size_t(n)) {
    throw ParseError(kMod, "names: line must list exactly " + std::to_string(n) + " names");
  }
  return from_table(n, std::move(tab), std::move(names));
}

CayleySemigroup parse_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(kMod, "cannot open '" + path + "'");
  return parse_cayley(in);
}

std::string format_cayley(const CayleySemigroup& s) {
  std::ostringstream os;
  os << s.n << '\n';
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.n; ++j) {
      if (j) os << ' ';
      os << s.at(i, j);
    }
    os << '\n';
  }
  os << "names:";
  for (const auto& nm : s.names) os << ' ' << nm;
  os << '\n';
  return os.str();
}

} // namespace fcs
