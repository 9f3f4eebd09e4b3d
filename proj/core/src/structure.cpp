#include "fcs/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fcs/error.hpp"

namespace fcs {

ArchimedeanComponents archimedean_components(const CayleySemigroup& s) {
  ArchimedeanComponents out;
  out.idempotent_of.resize(s.n);
  std::map<int, std::vector<int>> by_idem;
  for (int x = 0; x < s.n; ++x) {
    int e = cyclic_type(s, x).power_idempotent;
    out.idempotent_of[x] = e;
    by_idem[e].push_back(x);
  }
  for (auto& [e, mem] : by_idem) {
    out.idempotents.push_back(e);
    out.members.push_back(std::move(mem));
  }
  return out;
}

IdempotentSemilattice idempotent_semilattice(const CayleySemigroup& s) {
  IdempotentSemilattice out;
  out.idempotents = idempotents(s);
  int t = static_cast<int>(out.idempotents.size());
  if (t == 0) throw DomainError("idempotent_semilattice", "no idempotent found");
  out.order = Poset::discrete(t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      if (s.at(out.idempotents[i], out.idempotents[j]) == out.idempotents[i]) out.order.set(i, j);
  validate_poset(out.order);
  out.meet = meets(out.order);
  if (!out.meet.total)
    throw DomainError("idempotent_semilattice", "idempotents do not form a meet-semilattice");
  // The order-theoretic meet must be the product.
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      int prod = s.at(out.idempotents[i], out.idempotents[j]);
      if (prod != out.idempotents[out.meet.meet[std::size_t(i) * t + j]])
        throw DomainError("idempotent_semilattice", "product of idempotents is not their meet");
    }
  out.covers = cover_pairs(out.order);
  return out;
}

std::vector<int> component_kernel(const CayleySemigroup& s, int e,
                                  const std::vector<int>& component) {
  if (e < 0 || e >= s.n || s.at(e, e) != e)
    throw DomainError("component_kernel", "marker element is not an idempotent");
  std::vector<int> k;
  for (int x : component)
    if (s.at(e, x) == x) k.push_back(x);
  std::sort(k.begin(), k.end());
  return k;
}

NilPoset nil_poset(const CayleySemigroup& s, int e, const std::vector<int>& component) {
  std::vector<int> ker = component_kernel(s, e, component);
  NilPoset out;
  std::vector<int> sorted_comp = component;
  std::sort(sorted_comp.begin(), sorted_comp.end());
  std::map<int, int> local; // ambient -> local id
  for (int x : sorted_comp) {
    if (std::binary_search(ker.begin(), ker.end(), x)) continue;
    local[x] = static_cast<int>(out.ambient.size()) + 1;
    out.ambient.push_back(x);
  }
  int m = static_cast<int>(out.ambient.size());
  auto to_local = [&](int ambient_id) {
    auto it = local.find(ambient_id);
    return it == local.end() ? 0 : it->second;
  };

  // x <= y iff x = y or x is a proper multiple of y in the quotient; the
  // zero is a multiple of everything.
  out.order = Poset::discrete(m + 1);
  for (int v = 1; v <= m; ++v) {
    out.order.set(0, v);
    int y = out.ambient[v - 1];
    for (int t : sorted_comp) {
      int u = to_local(s.at(y, t));
      if (u != v) out.order.set(u, v);
    }
  }
  validate_poset(out.order);
  out.covers = cover_pairs(out.order);
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

StructureReport structure_report(const CayleySemigroup& s) {
  StructureReport out;
  out.components = archimedean_components(s);
  out.semilattice = idempotent_semilattice(s);
  if (out.components.idempotents != out.semilattice.idempotents)
    throw DomainError("structure_report", "component idempotents disagree with E(S)");
  for (std::size_t c = 0; c < out.components.idempotents.size(); ++c) {
    ComponentReport rep;
    rep.idempotent = out.components.idempotents[c];
    rep.members = out.components.members[c];
    rep.kernel = component_kernel(s, rep.idempotent, rep.members);
    std::map<std::uint64_t, std::uint64_t> order_counts;
    for (int x : rep.kernel) {
      std::uint64_t ord = 1;
      int cur = x;
      while (cur != rep.idempotent) {
        cur = s.at(cur, x);
        ++ord;
      }
      ++order_counts[ord];
    }
    rep.kernel_type = order_statistics_type(order_counts);
    rep.nil = nil_poset(s, rep.idempotent, rep.members);
    out.reports.push_back(std::move(rep));
  }
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

} // namespace

std::string structure_dot(const CayleySemigroup& s, const StructureReport& r) {
  std::ostringstream out;
  out << "digraph semilattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < r.semilattice.idempotents.size(); ++i)
    out << "  e" << i << " [label=\"" << dot_escape(s.name(r.semilattice.idempotents[i]))
        << "\"];\n";
  for (auto [lo, hi] : r.semilattice.covers) out << "  e" << lo << " -> e" << hi << ";\n";
  out << "}\n";
  for (std::size_t c = 0; c < r.reports.size(); ++c) {
    const NilPoset& np = r.reports[c].nil;
    if (np.ambient.empty()) continue;
    out << "digraph nil_" << c << " {\n  rankdir=BT;\n";
    out << "  n0 [label=\"0 (" << dot_escape(s.name(r.reports[c].idempotent)) << ")\"];\n";
    for (std::size_t v = 0; v < np.ambient.size(); ++v)
      out << "  n" << v + 1 << " [label=\"" << dot_escape(s.name(np.ambient[v])) << "\"];\n";
    for (auto [lo, hi] : np.covers) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
  }
  return out.str();
}

std::string format_structure_report(const CayleySemigroup& s, const StructureReport& r) {
  std::ostringstream out;
  out << "elements: " << s.n << "\n";
  out << "idempotents: " << r.semilattice.idempotents.size() << "\n";
  auto plural = [](std::size_t n) { return n == 1 ? " element" : " elements"; };
  for (std::size_t c = 0; c < r.reports.size(); ++c) {
    const ComponentReport& rep = r.reports[c];
    out << "component A_" << s.name(rep.idempotent) << " (" << rep.members.size()
        << plural(rep.members.size()) << "):\n";
    out << "  members:";
    for (int x : rep.members) out << " " << s.name(x);
    out << "\n  kernel (" << rep.kernel.size() << "):";
    for (int x : rep.kernel) out << " " << s.name(x);
    out << "\n  kernel group: " << format_abelian_type(rep.kernel_type) << "\n";
    // Local id 0 of the nil poset is the collapsed kernel; label it by the
    // kernel element when the kernel is trivial.
    std::string zero_label =
        rep.kernel.size() == 1 ? s.name(rep.kernel[0]) : "[kernel]";
    out << "  nil quotient: " << rep.nil.ambient.size() + 1
        << plural(rep.nil.ambient.size() + 1);
    if (!rep.nil.covers.empty()) {
      out << ", covers:";
      for (auto [lo, hi] : rep.nil.covers) {
        out << " (";
        out << (lo == 0 ? zero_label : s.name(rep.nil.ambient[lo - 1]));
        out << " < ";
        out << (hi == 0 ? zero_label : s.name(rep.nil.ambient[hi - 1]));
        out << ")";
      }
    }
    out << "\n";
  }
  out << "semilattice covers:";
  if (r.semilattice.covers.empty()) out << " none";
  for (auto [lo, hi] : r.semilattice.covers)
    out << " (" << s.name(r.semilattice.idempotents[lo]) << " < "
        << s.name(r.semilattice.idempotents[hi]) << ")";
  out << "\n";
  return out.str();
}

} // namespace fcs
