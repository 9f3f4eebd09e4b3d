#include "fcs/cyclic.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fcs/error.hpp"

namespace fcs {

namespace {

std::uint64_t mul_u64(std::uint64_t a, std::uint64_t b, const char* where) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(where, "64-bit overflow in multiplication");
  return r;
}

std::uint64_t add_u64(std::uint64_t a, std::uint64_t b, const char* where) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError(where, "64-bit overflow in addition");
  return r;
}

void check_type(const CyclicType& t, const char* where) {
  if (t.m < 1 || t.n < 1) throw DomainError(where, "cyclic type needs index >= 1 and period >= 1");
}

} // namespace

std::uint64_t canonical_exponent(std::uint64_t k, const CyclicType& target) {
  check_type(target, "canonical_exponent");
  if (k == 0) throw DomainError("canonical_exponent", "exponent must be >= 1");
  if (k < target.m) return k;
  return target.m + (k - target.m) % target.n;
}

std::uint64_t idempotent_exponent(const CyclicType& t) {
  check_type(t, "idempotent_exponent");
  return t.m + (t.n - t.m % t.n) % t.n;
}

bool is_morphism_exponent(const CyclicType& src, const CyclicType& dst, std::uint64_t k) {
  check_type(src, "is_morphism_exponent");
  check_type(dst, "is_morphism_exponent");
  if (k == 0) return false;
  std::uint64_t km = mul_u64(k, src.m, "is_morphism_exponent");
  std::uint64_t kn = mul_u64(k, src.n, "is_morphism_exponent");
  return dst.m <= km && kn % dst.n == 0;
}

ExqSet exq(const CyclicType& src, const CyclicType& dst) {
  check_type(src, "exq");
  check_type(dst, "exq");
  ExqSet out{src, dst, {}};
  std::uint64_t window = add_u64(dst.m, dst.n, "exq") - 1;
  for (std::uint64_t k = 1; k <= window; ++k)
    if (is_morphism_exponent(src, dst, k)) out.ks.push_back(k);
  return out;
}

ExqSet compose_exq(const ExqSet& first, const ExqSet& second) {
  if (first.target.m != second.source.m || first.target.n != second.source.n)
    throw DomainError("compose_exq", "middle types do not match");
  std::set<std::uint64_t> acc;
  for (std::uint64_t k1 : first.ks)
    for (std::uint64_t k2 : second.ks)
      acc.insert(canonical_exponent(mul_u64(k1, k2, "compose_exq"), second.target));
  ExqSet out{first.source, second.target, {acc.begin(), acc.end()}};
  return out;
}

void validate_frame(const Frame& f) {
  int n = static_cast<int>(f.names.size());
  if (n == 0) throw DomainError("frame", "frame has no nodes");
  if (static_cast<int>(f.types.size()) != n) throw DomainError("frame", "node/type count mismatch");
  {
    std::set<std::string> seen;
    for (const auto& nm : f.names) {
      if (nm.empty()) throw DomainError("frame", "empty node name");
      if (!seen.insert(nm).second) throw DomainError("frame", "duplicate node name '" + nm + "'");
    }
  }
  for (int i = 0; i < n; ++i) check_type(f.types[i], "frame");
  if (f.order.n != n) throw DomainError("frame", "order relation size mismatch");
  validate_poset(f.order);
  MeetTable mt = meets(f.order);
  if (!mt.total)
    throw DomainError("frame", "nodes '" + f.names[mt.failing.first] + "' and '" +
                                   f.names[mt.failing.second] + "' have no meet");
  auto covers = cover_pairs(f.order); // pairs (lower, upper)
  std::set<std::pair<int, int>> expected;
  for (auto [lo, hi] : covers) expected.insert({hi, lo});
  for (auto [lo, hi] : covers) {
    auto it = f.cover_exponent.find({hi, lo});
    if (it == f.cover_exponent.end())
      throw DomainError("frame", "cover '" + f.names[hi] + "' > '" + f.names[lo] +
                                     "' has no exponent");
    std::uint64_t k = it->second;
    if (k != canonical_exponent(k, f.types[lo]))
      throw DomainError("frame", "exponent " + std::to_string(k) + " on cover '" + f.names[hi] +
                                     "' > '" + f.names[lo] + "' is not canonical");
    if (!is_morphism_exponent(f.types[hi], f.types[lo], k))
      throw DomainError("frame", "exponent " + std::to_string(k) + " on cover '" + f.names[hi] +
                                     "' > '" + f.names[lo] + "' is not a morphism exponent");
  }
  for (const auto& [edge, k] : f.cover_exponent) {
    (void)k;
    if (!expected.count(edge))
      throw DomainError("frame", "edge '" + f.names[edge.first] + "' > '" + f.names[edge.second] +
                                     "' is not a covering pair of the order");
  }
}

std::uint64_t path_exponent(const Frame& f, int hi, int lo) {
  if (hi == lo) return 1;
  if (!f.order.leq(lo, hi) )
    throw DomainError("path_exponent", "'" + f.names[lo] + "' is not below '" + f.names[hi] + "'");
  auto chains = descending_chains(f.order, hi, lo);
  if (chains.empty()) throw DomainError("path_exponent", "no chain found");
  bool have = false;
  std::uint64_t common = 0;
  for (const auto& chain : chains) {
    std::uint64_t k = 1;
    for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
      int u = chain[t], v = chain[t + 1];
      std::uint64_t ke = f.cover_exponent.at({u, v});
      k = canonical_exponent(mul_u64(k, ke, "path_exponent"), f.types[v]);
    }
    if (!have) {
      common = k;
      have = true;
    } else if (k != common) {
      throw DomainError("path_exponent", "composed exponent from '" + f.names[hi] + "' to '" +
                                             f.names[lo] + "' depends on the chain: " +
                                             std::to_string(common) + " vs " + std::to_string(k));
    }
  }
  return common;
}

StrongSemilattice build_strong_semilattice(const Frame& f) {
  validate_frame(f);
  int nn = static_cast<int>(f.names.size());
  MeetTable mt = meets(f.order);

  // Composed exponent for every strictly comparable pair; raises on
  // chain-dependent diamonds.
  std::vector<std::vector<std::uint64_t>> sigma(nn, std::vector<std::uint64_t>(nn, 0));
  for (int hi = 0; hi < nn; ++hi)
    for (int lo = 0; lo < nn; ++lo)
      if (lo != hi && f.order.leq(lo, hi)) sigma[hi][lo] = path_exponent(f, hi, lo);

  std::vector<int> offset(nn, 0);
  int total = 0;
  for (int v = 0; v < nn; ++v) {
    offset[v] = total;
    std::uint64_t sz = add_u64(f.types[v].m, f.types[v].n, "build_strong_semilattice") - 1;
    if (sz > 100000) throw DomainError("build_strong_semilattice", "node '" + f.names[v] + "' too large");
    total += static_cast<int>(sz);
  }

  std::vector<int> node_of(total);
  std::vector<std::uint64_t> exp_of(total);
  std::vector<std::string> names(total);
  for (int v = 0; v < nn; ++v) {
    std::uint64_t sz = f.types[v].m + f.types[v].n - 1;
    for (std::uint64_t e = 1; e <= sz; ++e) {
      int id = offset[v] + static_cast<int>(e - 1);
      node_of[id] = v;
      exp_of[id] = e;
      names[id] = e == 1 ? f.names[v] : f.names[v] + "^" + std::to_string(e);
    }
  }

  auto project = [&](int node, std::uint64_t e, int dst) {
    if (node == dst) return e;
    return canonical_exponent(mul_u64(e, sigma[node][dst], "build_strong_semilattice"), f.types[dst]);
  };

  std::vector<int> tab(static_cast<std::size_t>(total) * total);
  for (int x = 0; x < total; ++x)
    for (int y = 0; y < total; ++y) {
      int d = mt.meet[static_cast<std::size_t>(node_of[x]) * nn + node_of[y]];
      std::uint64_t ex = project(node_of[x], exp_of[x], d);
      std::uint64_t ey = project(node_of[y], exp_of[y], d);
      std::uint64_t ez = canonical_exponent(add_u64(ex, ey, "build_strong_semilattice"), f.types[d]);
      tab[static_cast<std::size_t>(x) * total + y] = offset[d] + static_cast<int>(ez - 1);
    }

  StrongSemilattice out;
  out.sgr = from_table(total, tab, names);
  out.node_of = std::move(node_of);
  out.exp_of = std::move(exp_of);
  out.generator_of_node.resize(nn);
  for (int v = 0; v < nn; ++v) out.generator_of_node[v] = offset[v];
  return out;
}

StrongCount count_strong_semilattices(const CyclicType& top, const CyclicType& left,
                                      const CyclicType& right, const CyclicType& bottom) {
  ExqSet e1 = exq(top, left);
  ExqSet e2 = exq(left, bottom);
  ExqSet e3 = exq(top, right);
  ExqSet e4 = exq(right, bottom);
  std::map<std::uint64_t, std::uint64_t> chl, chr;
  for (std::uint64_t k1 : e1.ks)
    for (std::uint64_t k2 : e2.ks)
      ++chl[canonical_exponent(mul_u64(k1, k2, "count_strong_semilattices"), bottom)];
  for (std::uint64_t k3 : e3.ks)
    for (std::uint64_t k4 : e4.ks)
      ++chr[canonical_exponent(mul_u64(k3, k4, "count_strong_semilattices"), bottom)];
  StrongCount out;
  for (const auto& [k, cl] : chl) {
    auto it = chr.find(k);
    if (it == chr.end()) continue;
    out.intersection.push_back(k);
    out.count = add_u64(out.count, mul_u64(cl, it->second, "count_strong_semilattices"),
                        "count_strong_semilattices");
  }
  return out;
}

namespace {

struct ComponentView {
  std::vector<int> members;       // sorted ambient ids
  int generator = -1;             // smallest generating element
  CyclicType type{1, 1};
  std::vector<int> power_element; // exponent e (1-based) -> ambient id
  int idempotent = -1;
};

} // namespace

StrongDecision is_strong_decomposition(const CayleySemigroup& s,
                                       const std::vector<std::vector<int>>& components) {
  const char* where = "is_strong_decomposition";
  int n = s.n;
  if (components.empty()) throw DomainError(where, "no components given");

  std::vector<int> comp_of(n, -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (components[c].empty()) throw DomainError(where, "empty component");
    for (int x : components[c]) {
      if (x < 0 || x >= n) throw DomainError(where, "component element out of range");
      if (comp_of[x] != -1) throw DomainError(where, "components overlap at '" + s.name(x) + "'");
      comp_of[x] = static_cast<int>(c);
    }
  }
  for (int x = 0; x < n; ++x)
    if (comp_of[x] == -1)
      throw DomainError(where, "element '" + s.name(x) + "' is in no component");

  int nc = static_cast<int>(components.size());
  std::vector<ComponentView> views(nc);
  std::vector<std::uint64_t> exp_in_comp(n, 0);
  for (int c = 0; c < nc; ++c) {
    ComponentView& v = views[c];
    v.members = components[c];
    std::sort(v.members.begin(), v.members.end());
    for (int x : v.members)
      for (int y : v.members)
        if (comp_of[s.at(x, y)] != c)
          throw DomainError(where, "component of '" + s.name(x) +
                                       "' is not closed under multiplication");
    for (int g : v.members) {
      std::vector<int> powers;
      std::set<int> seen;
      int cur = g;
      while (seen.insert(cur).second) {
        powers.push_back(cur);
        cur = s.at(cur, g);
      }
      if (powers.size() == v.members.size()) {
        v.generator = g;
        v.power_element = powers;
        break;
      }
    }
    if (v.generator < 0)
      throw DomainError(where, "component of '" + s.name(v.members.front()) +
                                   "' is not a cyclic semigroup");
    CyclicData cd = cyclic_type(s, v.generator);
    v.type = cd.type;
    v.idempotent = cd.power_idempotent;
    for (std::size_t e = 0; e < v.power_element.size(); ++e)
      exp_in_comp[v.power_element[e]] = e + 1;
  }

  // Meet-semilattice of components through idempotent products.
  Poset po = Poset::discrete(nc);
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b)
      if (s.at(views[a].idempotent, views[b].idempotent) == views[a].idempotent) po.set(a, b);
  validate_poset(po);
  std::vector<std::vector<int>> meet_comp(nc, std::vector<int>(nc));
  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) {
      int e = s.at(views[a].idempotent, views[b].idempotent);
      int c = comp_of[e];
      if (views[c].idempotent != e)
        throw DomainError(where, "idempotent product lands on a non-idempotent element");
      meet_comp[a][b] = c;
      if (!po.leq(c, a) || !po.leq(c, b))
        throw DomainError(where, "idempotent products do not form a meet-semilattice");
    }

  auto covers = cover_pairs(po); // (lower, upper)

  // Candidate morphism exponents per covering pair, read off a*b = b^J.
  std::vector<std::vector<std::uint64_t>> cands(covers.size());
  for (std::size_t ci = 0; ci < covers.size(); ++ci) {
    auto [lo, hi] = covers[ci];
    const ComponentView& upper = views[hi];
    const ComponentView& lower = views[lo];
    int ab = s.at(upper.generator, lower.generator);
    if (comp_of[ab] != lo)
      throw DomainError(where, "product across comparable components misses the lower one");
    std::uint64_t J = exp_in_comp[ab];
    std::uint64_t m = upper.type.m, mp = lower.type.m, np = lower.type.n;
    std::uint64_t nsrc = upper.type.n;
    auto admissible = [&](std::uint64_t k) {
      return k >= 1 && mp <= mul_u64(k, m, where) && (mul_u64(k, nsrc, where) % np) == 0 &&
             canonical_exponent(add_u64(k, 1, where), lower.type) == J;
    };
    std::set<std::uint64_t> ks;
    if (J >= 2 && admissible(J - 1)) ks.insert(J - 1);
    if (J == mp && admissible(mp + np - 1)) ks.insert(mp + np - 1);
    if (J == 1 && mp == 1 && admissible(np)) ks.insert(np);
    if (ks.empty()) {
      StrongDecision d;
      d.is_strong = false;
      d.witness = "cover pair (" + s.name(upper.generator) + ") > (" + s.name(lower.generator) +
                  "): " + s.name(upper.generator) + "*" + s.name(lower.generator) + " = " +
                  s.name(ab) + " = b^" + std::to_string(J) +
                  " admits no morphism exponent (index " + std::to_string(mp) +
                  " exceeds every admissible multiple of " + std::to_string(m) + ")";
      return d;
    }
    cands[ci] = {ks.begin(), ks.end()};
  }

  std::uint64_t combos = 1;
  for (const auto& c : cands) {
    combos = mul_u64(combos, c.size(), where);
    if (combos > 4096) throw DomainError(where, "too many exponent assignments to search");
  }

  std::string first_witness;
  std::vector<std::size_t> pick(cands.size(), 0);
  for (std::uint64_t it = 0; it < std::max<std::uint64_t>(combos, 1); ++it) {
    std::map<std::pair<int, int>, std::uint64_t> edge_k;
    for (std::size_t ci = 0; ci < covers.size(); ++ci)
      edge_k[{covers[ci].second, covers[ci].first}] = cands[ci][pick[ci]];

    // Composed exponents along chains must not depend on the chain.
    bool ok = true;
    std::vector<std::vector<std::uint64_t>> sigma(nc, std::vector<std::uint64_t>(nc, 0));
    for (int hi = 0; hi < nc && ok; ++hi)
      for (int lo = 0; lo < nc && ok; ++lo) {
        if (lo == hi || !po.leq(lo, hi)) continue;
        auto chains = descending_chains(po, hi, lo);
        bool have = false;
        std::uint64_t common = 0;
        for (const auto& chain : chains) {
          std::uint64_t k = 1;
          for (std::size_t t = 0; t + 1 < chain.size(); ++t)
            k = canonical_exponent(mul_u64(k, edge_k.at({chain[t], chain[t + 1]}), where),
                                   views[chain[t + 1]].type);
          if (!have) {
            common = k;
            have = true;
          } else if (k != common) {
            ok = false;
            if (first_witness.empty())
              first_witness = "composed exponents from (" + s.name(views[hi].generator) +
                              ") to (" + s.name(views[lo].generator) + ") disagree: " +
                              std::to_string(common) + " vs " + std::to_string(k);
            break;
          }
        }
        if (ok) sigma[hi][lo] = common;
      }

    if (ok) {
      auto project = [&](int node, std::uint64_t e, int dst) {
        if (node == dst) return e;
        return canonical_exponent(mul_u64(e, sigma[node][dst], where), views[dst].type);
      };
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n; ++y) {
          int a = comp_of[x], b = comp_of[y];
          int d = meet_comp[a][b];
          std::uint64_t ex = project(a, exp_in_comp[x], d);
          std::uint64_t ey = project(b, exp_in_comp[y], d);
          std::uint64_t ez = canonical_exponent(add_u64(ex, ey, where), views[d].type);
          int expected = views[d].power_element[static_cast<std::size_t>(ez - 1)];
          if (s.at(x, y) != expected) {
            ok = false;
            if (first_witness.empty())
              first_witness = "product " + s.name(x) + "*" + s.name(y) + " = " +
                              s.name(s.at(x, y)) + " differs from the strong product " +
                              s.name(expected);
            break;
          }
        }
      if (ok) return StrongDecision{true, ""};
    }

    // next assignment
    for (std::size_t ci = 0; ci < pick.size(); ++ci) {
      if (++pick[ci] < cands[ci].size()) break;
      pick[ci] = 0;
    }
  }

  StrongDecision d;
  d.is_strong = false;
  d.witness = first_witness.empty() ? "no exponent assignment reproduces the table" : first_witness;
  return d;
}

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

} // namespace

Frame parse_frame(std::istream& in) {
  Frame f;
  std::map<std::string, int> index;
  struct Edge {
    std::string hi, lo;
    std::uint64_t k;
    std::size_t line;
  };
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trimmed(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("type:", 0) == 0) {
      std::istringstream ss(t.substr(5));
      std::string name;
      std::uint64_t m = 0, n = 0;
      if (!(ss >> name >> m >> n))
        throw ParseError("frame", "expected 'type: NAME M N'", lineno);
      std::string rest;
      if (ss >> rest) throw ParseError("frame", "trailing tokens after type declaration", lineno);
      if (index.count(name)) throw ParseError("frame", "duplicate node '" + name + "'", lineno);
      if (m < 1 || n < 1) throw ParseError("frame", "type needs M >= 1 and N >= 1", lineno);
      index[name] = static_cast<int>(f.names.size());
      f.names.push_back(name);
      f.types.push_back(CyclicType{m, n});
    } else if (t.rfind("edge:", 0) == 0) {
      std::istringstream ss(t.substr(5));
      std::string hi, gt, lo, kpart;
      if (!(ss >> hi >> gt >> lo >> kpart) || gt != ">")
        throw ParseError("frame", "expected 'edge: A > B k=K'", lineno);
      if (kpart.rfind("k=", 0) != 0)
        throw ParseError("frame", "expected 'k=K' on edge", lineno);
      std::uint64_t k = 0;
      try {
        std::size_t pos = 0;
        k = std::stoull(kpart.substr(2), &pos);
        if (pos != kpart.size() - 2) throw std::invalid_argument("trail");
      } catch (const std::exception&) {
        throw ParseError("frame", "bad exponent '" + kpart + "'", lineno);
      }
      edges.push_back(Edge{hi, lo, k, lineno});
    } else {
      throw ParseError("frame", "unrecognized line '" + t + "'", lineno);
    }
  }
  if (f.names.empty()) throw ParseError("frame", "no nodes declared");
  int n = static_cast<int>(f.names.size());
  f.order = Poset::discrete(n);
  for (const auto& e : edges) {
    auto hit = index.find(e.hi);
    auto lit = index.find(e.lo);
    if (hit == index.end()) throw ParseError("frame", "unknown node '" + e.hi + "'", e.line);
    if (lit == index.end()) throw ParseError("frame", "unknown node '" + e.lo + "'", e.line);
    if (hit->second == lit->second) throw ParseError("frame", "self edge on '" + e.hi + "'", e.line);
    f.order.set(lit->second, hit->second);
    if (!f.cover_exponent.emplace(std::make_pair(hit->second, lit->second), e.k).second)
      throw ParseError("frame", "duplicate edge '" + e.hi + " > " + e.lo + "'", e.line);
  }
  transitive_close(f.order);
  return f;
}

Frame parse_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("frame", "cannot open '" + path + "'");
  return parse_frame(in);
}

} // namespace fcs
