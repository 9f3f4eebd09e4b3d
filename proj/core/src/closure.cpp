#include "fcs/closure.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "fcs/error.hpp"

namespace fcs {

namespace {

int popcount32(SubsetMask m) { return __builtin_popcount(m); }

void check_ground(const std::vector<std::string>& ground, const char* where) {
  if (ground.empty()) throw DomainError(where, "empty ground set");
  if (ground.size() > 31) throw DomainError(where, "ground set beyond the 31-element budget");
  std::set<std::string> seen;
  for (const auto& g : ground) {
    if (g.empty()) throw DomainError(where, "empty ground element name");
    if (!seen.insert(g).second) throw DomainError(where, "duplicate ground element '" + g + "'");
  }
}

} // namespace

void validate_implication_system(const ImplicationSystem& sys) {
  check_ground(sys.ground, "implications");
  SubsetMask full = (SubsetMask{1} << sys.ground.size()) - 1;
  for (const auto& imp : sys.implications) {
    if (imp.premise == 0) throw DomainError("implications", "implication with empty premise");
    if ((imp.premise | full) != full || (imp.conclusion | full) != full)
      throw DomainError("implications", "implication mentions elements outside the ground set");
  }
}

std::string format_subset(const ImplicationSystem& sys, SubsetMask set) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < sys.ground.size(); ++i) {
    if (!(set >> i & 1u)) continue;
    if (!first) out += ",";
    out += sys.ground[i];
    first = false;
  }
  out += "}";
  return out;
}

SubsetMask sigma_closure(const ImplicationSystem& sys, SubsetMask set) {
  validate_implication_system(sys);
  SubsetMask full = (SubsetMask{1} << sys.ground.size()) - 1;
  if ((set | full) != full) throw DomainError("sigma_closure", "subset outside the ground set");
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& imp : sys.implications) {
      if ((set & imp.premise) == imp.premise && (set | imp.conclusion) != set) {
        set |= imp.conclusion;
        grew = true;
      }
    }
  }
  return set;
}

std::string Row012::str() const {
  std::string out;
  out.reserve(sym.size());
  for (std::int8_t s : sym) out.push_back(static_cast<char>('0' + s));
  return out;
}

std::uint64_t Row012::count() const {
  int twos = 0;
  for (std::int8_t s : sym)
    if (s == 2) ++twos;
  return std::uint64_t{1} << twos;
}

bool Row012::contains(SubsetMask set) const {
  for (std::size_t i = 0; i < sym.size(); ++i) {
    int bit = set >> i & 1u;
    if (sym[i] != 2 && sym[i] != bit) return false;
  }
  return true;
}

std::vector<SubsetMask> Row012::expand() const {
  SubsetMask base = 0;
  std::vector<int> free_bits;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if (sym[i] == 1) base |= SubsetMask{1} << i;
    if (sym[i] == 2) free_bits.push_back(static_cast<int>(i));
  }
  std::vector<SubsetMask> out;
  out.reserve(std::size_t{1} << free_bits.size());
  for (std::uint32_t c = 0; c < (std::uint32_t{1} << free_bits.size()); ++c) {
    SubsetMask m = base;
    for (std::size_t t = 0; t < free_bits.size(); ++t)
      if (c >> t & 1u) m |= SubsetMask{1} << free_bits[t];
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Propagates forced memberships: a fully-included premise forces its
// conclusion in; a conclusion bit already fixed out kills the branch.
bool propagate(const std::vector<Implication>& imps, std::vector<std::int8_t>& sym) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& imp : imps) {
      bool premise_out = false, premise_open = false;
      for (std::size_t i = 0; i < sym.size(); ++i) {
        if (!(imp.premise >> i & 1u)) continue;
        if (sym[i] == 0) premise_out = true;
        if (sym[i] == 2) premise_open = true;
      }
      if (premise_out || premise_open) continue;
      for (std::size_t i = 0; i < sym.size(); ++i) {
        if (!(imp.conclusion >> i & 1u)) continue;
        if (sym[i] == 0) return false;
        if (sym[i] == 2) {
          sym[i] = 1;
          changed = true;
        }
      }
    }
  }
  return true;
}

// Decided once propagation is stable: some premise element is out, or the
// premise (hence the conclusion) is fully in.
int undecided_implication(const std::vector<Implication>& imps,
                          const std::vector<std::int8_t>& sym) {
  for (std::size_t t = 0; t < imps.size(); ++t) {
    bool premise_out = false, premise_open = false;
    for (std::size_t i = 0; i < sym.size(); ++i) {
      if (!(imps[t].premise >> i & 1u)) continue;
      if (sym[i] == 0) premise_out = true;
      if (sym[i] == 2) premise_open = true;
    }
    if (!premise_out && premise_open) return static_cast<int>(t);
  }
  return -1;
}

void cover_dfs(const std::vector<Implication>& imps, std::vector<std::int8_t> sym,
               std::vector<Row012>& rows) {
  if (!propagate(imps, sym)) return;
  int t = undecided_implication(imps, sym);
  if (t < 0) {
    rows.push_back(Row012{sym});
    return;
  }
  int bit = -1;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if ((imps[t].premise >> i & 1u) && sym[i] == 2) {
      bit = static_cast<int>(i);
      break;
    }
  }
  sym[bit] = 0;
  cover_dfs(imps, sym, rows);
  sym[bit] = 1;
  cover_dfs(imps, std::move(sym), rows);
}

} // namespace

ClosureCover closure_cover(const ImplicationSystem& sys) {
  validate_implication_system(sys);
  ClosureCover out;
  std::vector<std::int8_t> sym(sys.ground.size(), 2);
  cover_dfs(sys.implications, std::move(sym), out.rows);
  std::sort(out.rows.begin(), out.rows.end(),
            [](const Row012& a, const Row012& b) { return a.str() < b.str(); });
  out.count = 0;
  for (const auto& r : out.rows) out.count += r.count();
  return out;
}

std::vector<Implication> semilattice_relations_to_implications(
    const std::vector<std::pair<SubsetMask, SubsetMask>>& relations) {
  std::vector<Implication> out;
  for (const auto& [u, v] : relations) {
    if (u == 0 || v == 0)
      throw DomainError("relation_translation", "relation side with empty support");
    out.push_back(Implication{u, v});
    out.push_back(Implication{v, u});
  }
  return out;
}

namespace {

// Subsets in military order: smaller size first; within a size, the subset
// grabbing earlier generators wins. That is lexicographic order on the
// sorted index sequences.
void military_subsets(int n, int size, SubsetMask acc, int next,
                      const std::function<bool(SubsetMask)>& visit, bool& stop) {
  if (stop) return;
  if (size == 0) {
    if (!visit(acc)) stop = true;
    return;
  }
  for (int i = next; i <= n - size; ++i) {
    military_subsets(n, size - 1, acc | (SubsetMask{1} << i), i + 1, visit, stop);
    if (stop) return;
  }
}

} // namespace

RfslSemilattice rfsl(const std::vector<std::string>& generators,
                     const std::vector<std::pair<SubsetMask, SubsetMask>>& relations) {
  const char* where = "rfsl";
  check_ground(generators, where);
  if (generators.size() > 16)
    throw DomainError(where, "generator budget is 16 for materialized semilattices");
  ImplicationSystem sys{generators, semilattice_relations_to_implications(relations)};
  validate_implication_system(sys);

  int n = static_cast<int>(generators.size());
  std::map<SubsetMask, int> id_of;
  std::vector<SubsetMask> closed;
  std::vector<SubsetMask> name_subset;
  bool stop = false;
  std::function<bool(SubsetMask)> visit = [&](SubsetMask u) {
    SubsetMask c = sigma_closure(sys, u);
    if (id_of.emplace(c, static_cast<int>(closed.size())).second) {
      closed.push_back(c);
      name_subset.push_back(u);
    }
    return closed.size() <= 4096;
  };
  for (int size = 1; size <= n && !stop; ++size)
    military_subsets(n, size, 0, 0, visit, stop);
  if (stop) throw DomainError(where, "semilattice exceeds the 4096-element budget");

  int nn = static_cast<int>(closed.size());
  std::vector<std::string> names(nn);
  for (int i = 0; i < nn; ++i) {
    std::string nm;
    for (int g = 0; g < n; ++g)
      if (name_subset[i] >> g & 1u) nm += generators[g];
    names[i] = nm;
  }

  std::vector<int> tab(static_cast<std::size_t>(nn) * nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      tab[static_cast<std::size_t>(i) * nn + j] = id_of.at(sigma_closure(sys, closed[i] | closed[j]));

  RfslSemilattice out;
  out.sgr = from_table(nn, tab, names);
  out.closed_set_of = std::move(closed);
  out.ground = generators;
  out.generator_ids.resize(n);
  for (int g = 0; g < n; ++g)
    out.generator_ids[g] = id_of.at(sigma_closure(sys, SubsetMask{1} << g));
  return out;
}

PowersetEmbedding embed_into_powerset(const CayleySemigroup& s) {
  const char* where = "embed_into_powerset";
  if (!is_semilattice(s)) throw DomainError(where, "input is not a semilattice");
  if (s.n > 64) throw DomainError(where, "semilattice beyond the 64-element budget");
  PowersetEmbedding out;
  out.ground_size = s.n;
  out.image.resize(s.n, 0);
  for (int p = 0; p < s.n; ++p)
    for (int i = 0; i < s.n; ++i)
      if (s.at(i, p) == i) out.image[p] |= std::uint64_t{1} << i;
  std::set<std::uint64_t> distinct(out.image.begin(), out.image.end());
  if (static_cast<int>(distinct.size()) != s.n)
    throw DomainError(where, "embedding is not injective");
  for (int p = 0; p < s.n; ++p)
    for (int q = 0; q < s.n; ++q)
      if (out.image[s.at(p, q)] != (out.image[p] & out.image[q]))
        throw DomainError(where, "embedding does not turn products into intersections");
  return out;
}

std::vector<int> largest_fiber(const CayleySemigroup& s, int x, const std::vector<int>& candidates) {
  const char* where = "largest_fiber";
  if (!is_semilattice(s)) throw DomainError(where, "input is not a semilattice");
  if (x < 0 || x >= s.n) throw DomainError(where, "element out of range");
  std::vector<int> t;
  for (int g : candidates) {
    if (g < 0 || g >= s.n) throw DomainError(where, "candidate out of range");
    if (s.at(g, x) == x) t.push_back(g);
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (t.empty())
    throw DomainError(where, "no candidate absorbs '" + s.name(x) + "'");
  int prod = t.front();
  for (std::size_t i = 1; i < t.size(); ++i) prod = s.at(prod, t[i]);
  if (prod != x)
    throw DomainError(where, "'" + s.name(x) + "' is not the product of its absorbing candidates (got '" +
                                 s.name(prod) + "')");
  return t;
}

std::vector<int> largest_fiber(const CayleySemigroup& s, int x) {
  std::vector<int> all(s.n);
  for (int i = 0; i < s.n; ++i) all[i] = i;
  return largest_fiber(s, x, all);
}

std::vector<int> largest_fiber(const RfslSemilattice& y, int x) {
  return largest_fiber(y.sgr, x, y.generator_ids);
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

} // namespace

ImplicationInput parse_implications(std::istream& in) {
  ImplicationInput out;
  struct RawImp {
    std::vector<std::string> premise, conclusion;
    std::size_t line;
  };
  struct RawRel {
    std::vector<std::vector<std::string>> sides;
    std::size_t line;
  };
  std::vector<RawImp> raw_imps;
  std::vector<RawRel> raw_rels;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("base:", 0) == 0) {
      if (!out.ground.empty()) throw ParseError("implications", "duplicate 'base:' line", lineno);
      out.ground = tokens_of(t.substr(5));
      if (out.ground.empty()) throw ParseError("implications", "empty 'base:' line", lineno);
    } else if (t.rfind("imp:", 0) == 0) {
      auto toks = tokens_of(t.substr(4));
      auto arrow = std::find(toks.begin(), toks.end(), "->");
      if (arrow == toks.end() || arrow == toks.begin() || arrow + 1 == toks.end())
        throw ParseError("implications", "expected 'imp: P... -> C...'", lineno);
      raw_imps.push_back(RawImp{{toks.begin(), arrow}, {arrow + 1, toks.end()}, lineno});
    } else if (t.rfind("rel:", 0) == 0) {
      std::string body = t.substr(4);
      std::size_t eq = body.find('=');
      if (eq == std::string::npos)
        throw ParseError("implications", "expected 'rel: L = R'", lineno);
      RawRel rr;
      rr.line = lineno;
      for (std::string side : {body.substr(0, eq), body.substr(eq + 1)}) {
        std::vector<std::string> names;
        std::size_t pos = 0;
        while (pos <= side.size()) {
          std::size_t bar = side.find('|', pos);
          std::string piece = bar == std::string::npos ? side.substr(pos) : side.substr(pos, bar - pos);
          std::string nm = trimmed(piece);
          if (nm.empty()) throw ParseError("implications", "empty join term in relation", lineno);
          if (tokens_of(nm).size() != 1)
            throw ParseError("implications", "join term '" + nm + "' is not a single generator", lineno);
          names.push_back(nm);
          if (bar == std::string::npos) break;
          pos = bar + 1;
        }
        rr.sides.push_back(std::move(names));
      }
      raw_rels.push_back(std::move(rr));
    } else {
      throw ParseError("implications", "unrecognized line '" + t + "'", lineno);
    }
  }

  if (out.ground.empty()) throw ParseError("implications", "missing 'base:' line");
  check_ground(out.ground, "implications");
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < out.ground.size(); ++i) index[out.ground[i]] = static_cast<int>(i);
  auto mask_of = [&](const std::vector<std::string>& names, std::size_t lineno2) {
    SubsetMask m = 0;
    for (const auto& nm : names) {
      auto it = index.find(nm);
      if (it == index.end())
        throw ParseError("implications", "unknown ground element '" + nm + "'", lineno2);
      m |= SubsetMask{1} << it->second;
    }
    return m;
  };
  for (const auto& ri : raw_imps)
    out.implications.push_back(Implication{mask_of(ri.premise, ri.line), mask_of(ri.conclusion, ri.line)});
  for (const auto& rr : raw_rels)
    out.relations.emplace_back(mask_of(rr.sides[0], rr.line), mask_of(rr.sides[1], rr.line));
  return out;
}

ImplicationInput parse_implications_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("implications", "cannot open '" + path + "'");
  return parse_implications(in);
}

} // namespace fcs
