#include "fcs/rewriting.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace fcs {

namespace {

constexpr const char* kMod = "rewriting";

bool supports_intersect(const Word& a, const Word& b) {
  for (std::size_t i = 0; i < a.k(); ++i) {
    if (a.e[i] > 0 && b.e[i] > 0) return true;
  }
  return false;
}

// overlap - lhs + rhs, all componentwise.
Word rewrite_at(const Word& w, const Rule& r) {
  return mul(r.rhs, quotient(w, r.lhs));
}

bool rule_less(const Rule& a, const Rule& b) {
  int c = military_cmp(a.lhs, b.lhs);
  if (c != 0) return c < 0;
  return military_cmp(a.rhs, b.rhs) < 0;
}

} // namespace

void validate_rule_system(const RuleSystem& rs) {
  if (rs.gens.empty()) throw DomainError(kMod, "a rule system needs at least one generator");
  for (std::size_t i = 0; i < rs.gens.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.gens.size(); ++j) {
      if (rs.gens[i] == rs.gens[j]) {
        throw DomainError(kMod, "duplicate generator name '" + rs.gens[i] + "'");
      }
    }
  }
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    const Rule& r = rs.rules[i];
    if (r.lhs.k() != rs.gens.size() || r.rhs.k() != rs.gens.size()) {
      throw DomainError(kMod, "rule " + std::to_string(i) + " has wrong arity");
    }
    if (military_cmp(r.rhs, r.lhs) >= 0) {
      throw DomainError(kMod, "rule " + std::to_string(i) +
                                  " is not oriented: right side must be military-smaller");
    }
    for (std::size_t j = i + 1; j < rs.rules.size(); ++j) {
      if (rs.rules[j] == r) {
        throw DomainError(kMod, "duplicate rule at indices " + std::to_string(i) + " and " +
                                    std::to_string(j));
      }
    }
  }
}

Rule orient(const Word& u, const Word& v) {
  int c = military_cmp(u, v);
  if (c == 0) throw DomainError(kMod, "degenerate relation: both sides equal");
  if (c > 0) return Rule{u, v};
  return Rule{v, u};
}

RuleSystem orient(const Presentation& p) {
  RuleSystem rs;
  rs.gens = p.gens;
  for (const auto& [u, v] : p.relations) rs.rules.push_back(orient(u, v));
  validate_rule_system(rs);
  return rs;
}

bool is_reducible(const Word& w, const RuleSystem& rs) {
  for (const Rule& r : rs.rules) {
    if (divides(r.lhs, w)) return true;
  }
  return false;
}

Word reduce(const Word& w, const RuleSystem& rs) {
  Word cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : rs.rules) {
      if (divides(r.lhs, cur)) {
        cur = rewrite_at(cur, r);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

std::vector<CriticalPair> critical_pairs(const RuleSystem& rs) {
  std::vector<CriticalPair> out;
  for (std::size_t i = 0; i < rs.rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rs.rules.size(); ++j) {
      const Rule& a = rs.rules[i];
      const Rule& b = rs.rules[j];
      if (!supports_intersect(a.lhs, b.lhs)) continue;
      CriticalPair cp;
      cp.i = i;
      cp.j = j;
      cp.overlap = lcm(a.lhs, b.lhs);
      cp.left_result = rewrite_at(cp.overlap, a);
      cp.right_result = rewrite_at(cp.overlap, b);
      out.push_back(std::move(cp));
    }
  }
  return out;
}

LocalConfluence is_locally_confluent(const RuleSystem& rs) {
  LocalConfluence res;
  for (const CriticalPair& cp : critical_pairs(rs)) {
    Word l = reduce(cp.left_result, rs);
    Word r = reduce(cp.right_result, rs);
    if (!(l == r)) {
      res.confluent = false;
      res.failing = cp;
      res.distinct_normal_forms = {l, r};
      return res;
    }
  }
  return res;
}

namespace {

// Removes rules made redundant by the rest of the system. A rule whose left
// side is reducible elsewhere is deleted; if its two sides stop joining, the
// reduced relation is re-added. Right sides are kept fully reduced.
void inter_reduce(RuleSystem& rs) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < rs.rules.size(); ++i) {
      Rule r = rs.rules[i];
      RuleSystem others;
      others.gens = rs.gens;
      for (std::size_t j = 0; j < rs.rules.size(); ++j) {
        if (j != i) others.rules.push_back(rs.rules[j]);
      }
      if (is_reducible(r.lhs, others)) {
        Word l = reduce(r.lhs, others);
        Word rr = reduce(r.rhs, others);
        rs.rules.erase(rs.rules.begin() + std::ptrdiff_t(i));
        if (!(l == rr)) {
          Rule nr = orient(l, rr);
          if (std::find(rs.rules.begin(), rs.rules.end(), nr) == rs.rules.end()) {
            rs.rules.push_back(nr);
          }
        }
        changed = true;
        break;
      }
      Word rr = reduce(r.rhs, rs);
      if (!(rr == r.rhs)) {
        rs.rules[i].rhs = rr;
        changed = true;
      }
    }
  }
}

bool cp_order(const CriticalPair& a, const CriticalPair& b) {
  int c = military_cmp(a.overlap, b.overlap);
  if (c != 0) return c < 0;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

} // namespace

RuleSystem complete(const RuleSystem& input, const CompletionBudget& budget) {
  validate_rule_system(input);
  RuleSystem rs = input;
  inter_reduce(rs);

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CriticalPair> cps = critical_pairs(rs);
    std::sort(cps.begin(), cps.end(), cp_order);
    for (const CriticalPair& cp : cps) {
      Word l = reduce(cp.left_result, rs);
      Word r = reduce(cp.right_result, rs);
      if (l == r) continue;
      Rule nr = orient(l, r);
      if (nr.lhs.length() > budget.max_word_length) {
        throw CompletionBudgetError(
            "completion exceeded max word length " + std::to_string(budget.max_word_length),
            rs);
      }
      rs.rules.push_back(nr);
      grew = true;
      if (rs.rules.size() > budget.max_rules) {
        throw CompletionBudgetError(
            "completion exceeded max rule count " + std::to_string(budget.max_rules), rs);
      }
    }
    if (grew) inter_reduce(rs);
  }

  std::sort(rs.rules.begin(), rs.rules.end(), rule_less);
  validate_rule_system(rs);
  return rs;
}

NormalForms enumerate_normal_forms(const RuleSystem& rs) {
  validate_rule_system(rs);
  std::vector<Word> lhss;
  lhss.reserve(rs.rules.size());
  for (const Rule& r : rs.rules) lhss.push_back(r.lhs);
  IdealComplement ic = ideal_complement(lhss, rs.k());
  NormalForms nf;
  nf.finite = ic.finite;
  if (ic.finite) {
    nf.forms = ic.cover.expand();
    nf.cardinality = ic.cardinality;
  }
  return nf;
}

namespace {

void enumerate_words_up_to(std::uint64_t bound, std::uint32_t k,
                           std::vector<std::vector<Exp>>& out) {
  std::vector<Exp> cur(k, 0);
  // Lexicographic walk over all vectors with total degree in [1, bound].
  std::uint64_t total = 0;
  while (true) {
    std::size_t i = 0;
    while (i < k) {
      if (total < bound) {
        ++cur[i];
        ++total;
        break;
      }
      total -= cur[i];
      cur[i] = 0;
      ++i;
    }
    if (i == k) break;
    out.push_back(cur);
  }
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
  }
};

} // namespace

ThueClasses thue_oracle(const RuleSystem& rs, std::uint64_t bound, std::uint64_t max_words) {
  validate_rule_system(rs);
  std::uint64_t total = 0;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    total += count_words_of_length(n, rs.k());
    if (total > max_words) {
      throw BudgetError(kMod, "word enumeration exceeds budget of " +
                                  std::to_string(max_words) + " words");
    }
  }

  std::vector<std::vector<Exp>> words;
  words.reserve(std::size_t(total));
  enumerate_words_up_to(bound, rs.k(), words);

  std::map<std::vector<Exp>, int> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = int(i);

  Dsu dsu(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word w{Word(words[i])};
    for (const Rule& r : rs.rules) {
      if (!divides(r.lhs, w)) continue;
      Word w2 = mul(r.rhs, quotient(w, r.lhs));
      auto it = index.find(w2.e);
      // Right sides are military-smaller, so the image stays within bound.
      dsu.unite(int(i), it->second);
    }
  }

  std::map<int, std::vector<Word>> buckets;
  for (std::size_t i = 0; i < words.size(); ++i) {
    buckets[dsu.find(int(i))].push_back(Word(words[i]));
  }
  ThueClasses tc;
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end(), military_less);
    tc.classes.push_back(std::move(members));
  }
  std::sort(tc.classes.begin(), tc.classes.end(),
            [](const std::vector<Word>& a, const std::vector<Word>& b) {
              return military_less(a.front(), b.front());
            });
  return tc;
}

Presentation parse_presentation(std::istream& in) {
  Presentation p;
  std::string line;
  std::size_t lineno = 0;
  bool have_gens = false;
  std::vector<std::pair<std::string, std::size_t>> pending;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "gens:") {
      if (have_gens) throw ParseError(kMod, "duplicate gens: line", lineno);
      std::string g;
      while (ls >> g) p.gens.push_back(g);
      if (p.gens.empty()) throw ParseError(kMod, "gens: line lists no generators", lineno);
      have_gens = true;
    } else if (head == "rel:") {
      std::string rest;
      std::getline(ls, rest);
      pending.emplace_back(rest, lineno);
    } else {
      throw ParseError(kMod, "unknown directive '" + head + "'", lineno);
    }
  }
  if (!have_gens) throw ParseError(kMod, "missing gens: line");
  for (const auto& [rest, ln] : pending) {
    auto eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError(kMod, "rel: line lacks '='", ln);
    std::string lhs = rest.substr(0, eq);
    std::string rhs = rest.substr(eq + 1);
    try {
      p.relations.emplace_back(parse_word(lhs, p.gens), parse_word(rhs, p.gens));
    } catch (const ParseError& e) {
      throw ParseError(kMod, e.what() + std::string(" (in rel)"), ln);
    }
  }
  return p;
}

Presentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(kMod, "cannot open '" + path + "'");
  return parse_presentation(in);
}

std::string format_rule(const Rule& r, const std::vector<std::string>& names) {
  return format_word(r.lhs, names) + " -> " + format_word(r.rhs, names);
}

std::string format_rule_system(const RuleSystem& rs) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& g : rs.gens) os << ' ' << g;
  os << '\n';
  for (const Rule& r : rs.rules) os << format_rule(r, rs.gens) << '\n';
  return os.str();
}

} // namespace fcs
