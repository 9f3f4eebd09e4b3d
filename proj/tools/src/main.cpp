// fcs: analysis toolkit for finite commutative semigroups.
//
// One binary, eight subcommands. Every command is deterministic: identical
// invocations produce byte-identical output.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

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

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::size_t max_rules = 10000;
  std::size_t max_elements = 4096;
  std::uint64_t budget = 1000000;
  std::string emit_table;
};

void add_common(CLI::App* cmd, Options& opt, bool with_dot) {
  std::vector<std::string> formats = {"text", "json"};
  if (with_dot) formats.push_back("dot");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--max-rules", opt.max_rules, "completion rule budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-elements", opt.max_elements, "table size budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--budget", opt.budget, "search step budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void emit_table_if_requested(const Options& opt, const fcs::CayleySemigroup& s) {
  if (opt.emit_table.empty()) return;
  std::ofstream out(opt.emit_table);
  if (!out) throw fcs::ParseError("cli", "cannot write '" + opt.emit_table + "'");
  out << fcs::format_cayley(s);
  if (!out) throw fcs::ParseError("cli", "write failed for '" + opt.emit_table + "'");
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::string braces(const std::vector<std::uint64_t>& v) {
  return "{" + join(v, ",") + "}";
}

std::string cyc(const fcs::CyclicType& t) {
  return "C(" + std::to_string(t.m) + "," + std::to_string(t.n) + ")";
}

json cyc_json(const fcs::CyclicType& t) {
  return json{{"m", t.m}, {"n", t.n}};
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- complete ----------------------------------------------------------

struct CompleteArgs {
  std::string file;
  Options opt;
};

std::vector<std::string> rule_strings(const fcs::RuleSystem& rs) {
  std::vector<std::string> out;
  out.reserve(rs.rules.size());
  for (const auto& r : rs.rules) out.push_back(fcs::format_rule(r, rs.gens));
  return out;
}

void run_complete(const CompleteArgs& a) {
  fcs::Presentation p = fcs::parse_presentation_file(a.file);
  fcs::RuleSystem initial = fcs::orient(p);
  fcs::CompletionBudget cb;
  cb.max_rules = a.opt.max_rules;
  fcs::RuleSystem done = fcs::complete(initial, cb);

  std::vector<std::string> before = rule_strings(initial);
  std::vector<std::string> after = rule_strings(done);
  std::sort(before.begin(), before.end());
  std::vector<std::string> added, dropped;
  for (const auto& r : after)
    if (!std::binary_search(before.begin(), before.end(), r)) added.push_back(r);
  {
    std::vector<std::string> after_sorted = after;
    std::sort(after_sorted.begin(), after_sorted.end());
    for (const auto& r : before)
      if (!std::binary_search(after_sorted.begin(), after_sorted.end(), r))
        dropped.push_back(r);
  }

  fcs::NormalForms nf = fcs::enumerate_normal_forms(done);
  std::vector<std::string> forms;
  if (nf.finite)
    for (const auto& w : nf.forms) forms.push_back(fcs::format_word(w, done.gens));

  if (!a.opt.emit_table.empty()) {
    fcs::ElementBudget eb;
    eb.max_elements = a.opt.max_elements;
    fcs::PresentedSemigroup ps = fcs::from_presentation(done, fcs::CompletionBudget{a.opt.max_rules, 64}, eb);
    emit_table_if_requested(a.opt, ps.sgr);
  }

  if (a.opt.format == "json") {
    json j{{"subcommand", "complete"},
           {"generators", p.gens},
           {"completed_rules", after},
           {"added_rules", added},
           {"dropped_rules", dropped}};
    if (nf.finite) {
      j["normal_forms"] = json{{"finite", true}, {"count", nf.cardinality}, {"forms", forms}};
    } else {
      j["normal_forms"] = json{{"finite", false}};
    }
    print(j);
    return;
  }

  std::cout << "generators: " << join(p.gens, " ") << "\n";
  std::cout << "completed system (" << done.rules.size() << " rules):\n";
  for (const auto& r : after) std::cout << "  " << r << "\n";
  std::cout << "added rules (" << added.size() << "):\n";
  for (const auto& r : added) std::cout << "  " << r << "\n";
  if (!dropped.empty()) {
    std::cout << "dropped rules (" << dropped.size() << "):\n";
    for (const auto& r : dropped) std::cout << "  " << r << "\n";
  }
  if (!nf.finite) {
    std::cout << "normal forms: infinite\n";
  } else {
    std::cout << "normal forms (" << nf.cardinality << "):\n";
    for (const auto& f : forms) std::cout << "  " << f << "\n";
  }
}

// ---- structure ----------------------------------------------------------

struct StructureArgs {
  std::string file;
  std::string table;
  std::uint64_t zn = 0;
  bool zn_set = false;
  Options opt;
};

json structure_json(const fcs::CayleySemigroup& s, const fcs::StructureReport& r) {
  auto names_of = [&](const std::vector<int>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int i : ids) out.push_back(s.name(i));
    return out;
  };
  json comps = json::array();
  for (const auto& c : r.reports) {
    json nil_covers = json::array();
    std::string zero_label = c.kernel.size() == 1 ? s.name(c.kernel[0]) : "[kernel]";
    for (auto [lo, hi] : c.nil.covers) {
      auto local_name = [&](int v) {
        return v == 0 ? zero_label : s.name(c.nil.ambient[std::size_t(v) - 1]);
      };
      nil_covers.push_back(json::array({local_name(lo), local_name(hi)}));
    }
    comps.push_back(json{{"idempotent", s.name(c.idempotent)},
                         {"members", names_of(c.members)},
                         {"kernel", names_of(c.kernel)},
                         {"kernel_type", c.kernel_type.factors},
                         {"nil_covers", nil_covers}});
  }
  json sl_covers = json::array();
  for (auto [lo, hi] : r.semilattice.covers) {
    sl_covers.push_back(json::array({s.name(r.semilattice.idempotents[std::size_t(lo)]),
                                     s.name(r.semilattice.idempotents[std::size_t(hi)])}));
  }
  return json{{"subcommand", "structure"},
              {"elements", s.n},
              {"idempotents", names_of(r.components.idempotents)},
              {"components", comps},
              {"semilattice_covers", sl_covers}};
}

void run_structure(const StructureArgs& a) {
  int sources = (!a.file.empty()) + (!a.table.empty()) + a.zn_set;
  if (sources != 1)
    throw fcs::ParseError("cli", "need exactly one input: FILE, --table FILE, or --zn N");

  fcs::ElementBudget eb;
  eb.max_elements = a.opt.max_elements;
  fcs::CayleySemigroup s;
  if (!a.file.empty()) {
    fcs::Presentation p = fcs::parse_presentation_file(a.file);
    fcs::CompletionBudget cb;
    cb.max_rules = a.opt.max_rules;
    s = fcs::from_presentation(fcs::orient(p), cb, eb).sgr;
  } else if (!a.table.empty()) {
    s = fcs::parse_cayley_file(a.table);
  } else {
    s = fcs::zn_semigroup(a.zn, eb);
  }

  fcs::StructureReport r = fcs::structure_report(s);
  emit_table_if_requested(a.opt, s);

  if (a.opt.format == "json") {
    print(structure_json(s, r));
  } else if (a.opt.format == "dot") {
    std::cout << fcs::structure_dot(s, r);
  } else {
    std::cout << fcs::format_structure_report(s, r);
  }
}

// ---- exq ----------------------------------------------------------------

struct ExqArgs {
  std::uint64_t m = 1, n = 1, mp = 1, np = 1;
  Options opt;
};

void run_exq(const ExqArgs& a) {
  fcs::ExqSet e = fcs::exq({a.m, a.n}, {a.mp, a.np});
  if (a.opt.format == "json") {
    print(json{{"subcommand", "exq"},
               {"source", cyc_json(e.source)},
               {"target", cyc_json(e.target)},
               {"exponents", e.ks}});
    return;
  }
  std::cout << "Exq(" << cyc(e.source) << " -> " << cyc(e.target) << ") = "
            << braces(e.ks) << "\n";
}

// ---- extend --------------------------------------------------------------

struct ExtendArgs {
  std::uint64_t m = 1, n = 1, mp = 1, np = 1;
  std::uint64_t k = 0;
  bool k_set = false;
  Options opt;
};

std::string classification_line(const fcs::KClassification& c) {
  std::string s = "k=" + std::to_string(c.k) + ": ";
  if (!c.realizable) return s + "not realizable";
  if (c.trivial) {
    s += "realizable (trivial action)";
  } else {
    s += "realizable";
    if (c.strong) s += ", strong";
  }
  if (c.duplicate_of) s += ", same table as k=" + std::to_string(*c.duplicate_of);
  return s;
}

void run_extend(const ExtendArgs& a) {
  if (a.k_set) {
    fcs::Quintuple q{a.m, a.n, a.mp, a.np, a.k};
    fcs::validate_quintuple(q);
    fcs::Realization r = fcs::realize(q); // throws with a witness when unrealizable
    fcs::KClassification c;
    c.k = a.k;
    c.realizable = true;
    c.trivial = (a.k == 0);
    c.strong = fcs::is_strongly_realizable(q);
    emit_table_if_requested(a.opt, r.sgr);
    if (a.opt.format == "json") {
      print(json{{"subcommand", "extend"},
                 {"ideal", cyc_json({a.mp, a.np})},
                 {"quotient", cyc_json({a.m, a.n})},
                 {"k", a.k},
                 {"strong", c.strong},
                 {"elements", r.sgr.n}});
      return;
    }
    std::cout << "extension of " << cyc({a.mp, a.np}) << " by " << cyc({a.m, a.n})
              << " with a*b = b^" << fcs::canonical_exponent(a.k + 1, {a.mp, a.np})
              << "\n";
    std::cout << classification_line(c) << "\n";
    std::cout << "elements: " << r.sgr.n << "\n";
    return;
  }

  auto table = fcs::classify_extensions(a.m, a.n, a.mp, a.np);
  if (a.opt.format == "json") {
    json rows = json::array();
    for (const auto& c : table) {
      json row{{"k", c.k},
               {"realizable", c.realizable},
               {"trivial", c.trivial},
               {"strong", c.strong}};
      if (c.duplicate_of)
        row["duplicate_of"] = *c.duplicate_of;
      else
        row["duplicate_of"] = nullptr;
      rows.push_back(row);
    }
    print(json{{"subcommand", "extend"},
               {"ideal", cyc_json({a.mp, a.np})},
               {"quotient", cyc_json({a.m, a.n})},
               {"classifications", rows}});
    return;
  }
  std::cout << "extensions of ideal " << cyc({a.mp, a.np}) << " by " << cyc({a.m, a.n})
            << ", k in [0, " << (a.mp + a.np - 1) << "]:\n";
  for (const auto& c : table) std::cout << "  " << classification_line(c) << "\n";
}

// ---- frame ---------------------------------------------------------------

struct FrameArgs {
  std::string file;
  Options opt;
};

void run_frame(const FrameArgs& a) {
  fcs::Frame f = fcs::parse_frame_file(a.file);
  fcs::validate_frame(f);
  fcs::StrongSemilattice sl = fcs::build_strong_semilattice(f);
  emit_table_if_requested(a.opt, sl.sgr);

  std::vector<std::tuple<std::string, std::string, std::uint64_t>> edges;
  for (const auto& [edge, k] : f.cover_exponent) {
    edges.emplace_back(f.names[std::size_t(edge.first)], f.names[std::size_t(edge.second)], k);
  }
  std::sort(edges.begin(), edges.end());

  if (a.opt.format == "json") {
    json nodes = json::array();
    for (std::size_t i = 0; i < f.names.size(); ++i)
      nodes.push_back(json{{"name", f.names[i]}, {"type", cyc_json(f.types[i])}});
    json covers = json::array();
    for (const auto& [up, lo, k] : edges)
      covers.push_back(json{{"upper", up}, {"lower", lo}, {"k", k}});
    print(json{{"subcommand", "frame"},
               {"nodes", nodes},
               {"covers", covers},
               {"elements", sl.sgr.n}});
    return;
  }
  if (a.opt.format == "dot") {
    std::cout << "digraph frame {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < f.names.size(); ++i)
      std::cout << "  \"" << f.names[i] << "\" [label=\"" << f.names[i] << " "
                << cyc(f.types[i]) << "\"];\n";
    for (const auto& [up, lo, k] : edges)
      std::cout << "  \"" << lo << "\" -> \"" << up << "\" [label=\"k=" << k << "\"];\n";
    std::cout << "}\n";
    return;
  }
  std::cout << "frame with " << f.names.size() << " nodes:\n";
  for (std::size_t i = 0; i < f.names.size(); ++i)
    std::cout << "  " << f.names[i] << ": " << cyc(f.types[i]) << "\n";
  std::cout << "covers:\n";
  for (const auto& [up, lo, k] : edges)
    std::cout << "  " << up << " > " << lo << "  k=" << k << "\n";
  std::cout << "strong semilattice elements: " << sl.sgr.n << "\n";
}

// ---- abelian ---------------------------------------------------------------

struct AbelianArgs {
  std::string file;
  Options opt;
};

void run_abelian(const AbelianArgs& a) {
  fcs::IntMatrix m = fcs::parse_matrix_file(a.file);
  fcs::SmithResult snf = fcs::smith_normal_form(m);
  std::vector<std::uint64_t> diag;
  for (int i = 0; i < std::min(m.rows, m.cols); ++i)
    diag.push_back(std::uint64_t(snf.d.at(i, i)));
  fcs::RfagType t = fcs::rfag_type(m);

  if (a.opt.format == "json") {
    json j{{"subcommand", "abelian"},
           {"rows", m.rows},
           {"cols", m.cols},
           {"smith_diagonal", diag},
           {"finite", t.finite}};
    if (t.finite) {
      fcs::TminTmax tt = fcs::tmin_tmax(t.type);
      j["invariant_factors"] = t.type.factors;
      j["order"] = t.type.order();
      j["t_min"] = tt.t_min;
      j["t_max"] = tt.t_max;
    } else {
      j["free_rank"] = t.free_rank;
    }
    print(j);
    return;
  }

  std::cout << "matrix: " << m.rows << " x " << m.cols << "\n";
  std::cout << "smith diagonal: " << join(diag, " ") << "\n";
  if (!t.finite) {
    std::cout << "invariant factors: infinite (free rank " << t.free_rank << ")\n";
    return;
  }
  fcs::TminTmax tt = fcs::tmin_tmax(t.type);
  std::cout << "invariant factors: " << join(t.type.factors, " ") << "\n";
  std::cout << "group: " << fcs::format_abelian_type(t.type) << "\n";
  std::cout << "order: " << t.type.order() << "\n";
  std::cout << "t_min: " << tt.t_min << "\n";
  std::cout << "t_max: " << tt.t_max << "\n";
}

// ---- rfsl ------------------------------------------------------------------

struct RfslArgs {
  std::string file;
  Options opt;
};

void run_rfsl(const RfslArgs& a) {
  fcs::ImplicationInput in = fcs::parse_implications_file(a.file);
  fcs::ImplicationSystem sys;
  sys.ground = in.ground;
  sys.implications = in.implications;
  auto translated = fcs::semilattice_relations_to_implications(in.relations);
  sys.implications.insert(sys.implications.end(), translated.begin(), translated.end());
  fcs::validate_implication_system(sys);
  fcs::ClosureCover cover = fcs::closure_cover(sys);

  bool with_semilattice = !in.relations.empty() || in.implications.empty();

  json j;
  std::vector<std::string> row_strings;
  for (const auto& r : cover.rows) row_strings.push_back(r.str());

  fcs::RfslSemilattice y;
  std::vector<std::string> element_names;
  if (with_semilattice) {
    y = fcs::rfsl(in.ground, in.relations);
    for (int i = 0; i < y.sgr.n; ++i) element_names.push_back(y.sgr.name(i));
    if (!a.opt.emit_table.empty()) emit_table_if_requested(a.opt, y.sgr);
  } else if (!a.opt.emit_table.empty()) {
    throw fcs::ParseError("cli", "--emit-table needs join relations, not bare implications");
  }

  if (a.opt.format == "json") {
    j["subcommand"] = "rfsl";
    j["ground"] = sys.ground;
    j["implications"] = sys.implications.size();
    j["closed_sets"] = cover.count;
    j["rows"] = row_strings;
    if (with_semilattice)
      j["semilattice"] = json{{"count", element_names.size()}, {"elements", element_names}};
    print(j);
    return;
  }

  std::cout << "ground: " << join(sys.ground, " ") << "\n";
  std::cout << "implications: " << sys.implications.size() << "\n";
  std::cout << "closed sets: " << cover.count << "\n";
  std::cout << "cover rows (" << cover.rows.size() << "):\n";
  for (const auto& r : row_strings) std::cout << "  " << r << "\n";
  if (with_semilattice) {
    std::cout << "semilattice elements (" << element_names.size()
              << "): " << join(element_names, " ") << "\n";
  }
}

// ---- zn ---------------------------------------------------------------------

struct ZnArgs {
  std::uint64_t n = 0;
  Options opt;
};

void run_zn(const ZnArgs& a) {
  fcs::ZnComponentReport r = fcs::zn_component_report(a.n);
  fcs::AbelianType units = fcs::unit_group_type(a.n);

  if (a.opt.format == "json") {
    json comps = json::array();
    for (const auto& c : r.components) {
      std::string pat;
      for (int b : c.pattern) pat += char('0' + b);
      comps.push_back(json{{"pattern", pat},
                           {"idempotent", c.idempotent},
                           {"size", c.size},
                           {"kernel_size", c.kernel_size},
                           {"kernel_type", c.kernel_type.factors}});
    }
    print(json{{"subcommand", "zn"},
               {"n", a.n},
               {"moduli", r.crt.moduli},
               {"basis", r.crt.basis},
               {"phi", fcs::phi(a.n)},
               {"unit_group", units.factors},
               {"components", comps}});
    return;
  }

  std::cout << "Z_" << a.n << " under multiplication\n";
  std::cout << "crt moduli: " << join(r.crt.moduli, " ") << "\n";
  std::cout << "crt basis: " << join(r.crt.basis, " ") << "\n";
  std::cout << "phi: " << fcs::phi(a.n) << "\n";
  std::cout << "unit group: " << fcs::format_abelian_type(units) << "\n";
  std::cout << "components (" << r.components.size() << "):\n";
  for (const auto& c : r.components) {
    std::string pat;
    for (int b : c.pattern) pat += char('0' + b);
    std::cout << "  pattern " << pat << "  idempotent " << c.idempotent << "  size "
              << c.size << "  kernel " << fcs::format_abelian_type(c.kernel_type)
              << " (" << c.kernel_size
              << (c.kernel_size == 1 ? " element)\n" : " elements)\n");
  }

  if (!a.opt.emit_table.empty()) {
    fcs::ElementBudget eb;
    eb.max_elements = a.opt.max_elements;
    emit_table_if_requested(a.opt, fcs::zn_semigroup(a.n, eb));
  }
}

} // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"finite commutative semigroup toolkit"};
  app.require_subcommand(1);

  CompleteArgs complete_args;
  auto* c_complete = app.add_subcommand(
      "complete", "complete a commutative presentation and list its normal forms");
  c_complete->add_option("file", complete_args.file, "presentation file")->required();
  add_common(c_complete, complete_args.opt, false);
  c_complete->add_option("--emit-table", complete_args.opt.emit_table,
                         "write the Cayley table of the presented semigroup");
  c_complete->callback([&] { run_complete(complete_args); });

  StructureArgs structure_args;
  auto* c_structure = app.add_subcommand(
      "structure", "decompose a finite commutative semigroup");
  c_structure->add_option("file", structure_args.file, "presentation file");
  c_structure->add_option("--table", structure_args.table, "Cayley table file");
  auto* zn_opt = c_structure->add_option("--zn", structure_args.zn,
                                         "analyze (Z_n, *) for this modulus");
  add_common(c_structure, structure_args.opt, true);
  c_structure->add_option("--emit-table", structure_args.opt.emit_table,
                          "write the analyzed Cayley table");
  c_structure->callback([&] {
    structure_args.zn_set = zn_opt->count() > 0;
    run_structure(structure_args);
  });

  ExqArgs exq_args;
  auto* c_exq = app.add_subcommand(
      "exq", "morphism exponents between cyclic semigroups C(m,n) -> C(m',n')");
  c_exq->add_option("m", exq_args.m, "source index")->required();
  c_exq->add_option("n", exq_args.n, "source period")->required();
  c_exq->add_option("mp", exq_args.mp, "target index")->required();
  c_exq->add_option("np", exq_args.np, "target period")->required();
  add_common(c_exq, exq_args.opt, false);
  c_exq->callback([&] { run_exq(exq_args); });

  ExtendArgs extend_args;
  auto* c_extend = app.add_subcommand(
      "extend", "classify ideal extensions of C(m',n') by C(m,n) over all k");
  c_extend->add_option("m", extend_args.m, "quotient index")->required();
  c_extend->add_option("n", extend_args.n, "quotient period")->required();
  c_extend->add_option("mp", extend_args.mp, "ideal index")->required();
  c_extend->add_option("np", extend_args.np, "ideal period")->required();
  auto* k_opt = c_extend->add_option("--k", extend_args.k, "build the single extension for this k");
  add_common(c_extend, extend_args.opt, false);
  c_extend->add_option("--emit-table", extend_args.opt.emit_table,
                       "write the realized Cayley table (needs --k)");
  c_extend->callback([&] {
    extend_args.k_set = k_opt->count() > 0;
    if (!extend_args.k_set && !extend_args.opt.emit_table.empty())
      throw CLI::ValidationError("--emit-table needs --k");
    run_extend(extend_args);
  });

  FrameArgs frame_args;
  auto* c_frame = app.add_subcommand(
      "frame", "build the strong semilattice over a semilattice of cyclic types");
  c_frame->add_option("file", frame_args.file, "frame file")->required();
  add_common(c_frame, frame_args.opt, true);
  c_frame->add_option("--emit-table", frame_args.opt.emit_table,
                      "write the strong semilattice Cayley table");
  c_frame->callback([&] { run_frame(frame_args); });

  AbelianArgs abelian_args;
  auto* c_abelian = app.add_subcommand(
      "abelian", "type the abelian group presented by an integer relation matrix");
  c_abelian->add_option("file", abelian_args.file, "matrix file")->required();
  add_common(c_abelian, abelian_args.opt, false);
  c_abelian->callback([&] { run_abelian(abelian_args); });

  RfslArgs rfsl_args;
  auto* c_rfsl = app.add_subcommand(
      "rfsl", "closure system of an implication file; semilattice for join relations");
  c_rfsl->add_option("file", rfsl_args.file, "implication file")->required();
  add_common(c_rfsl, rfsl_args.opt, false);
  c_rfsl->add_option("--emit-table", rfsl_args.opt.emit_table,
                     "write the semilattice Cayley table");
  c_rfsl->callback([&] { run_rfsl(rfsl_args); });

  ZnArgs zn_args;
  auto* c_zn = app.add_subcommand(
      "zn", "arithmetic decomposition of (Z_n, *)");
  c_zn->add_option("n", zn_args.n, "modulus, n >= 1")->required();
  add_common(c_zn, zn_args.opt, false);
  c_zn->add_option("--emit-table", zn_args.opt.emit_table, "write the Cayley table of Z_n");
  c_zn->callback([&] { run_zn(zn_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const fcs::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fcs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: [cli] " << e.what() << "\n";
    return 2;
  }
  return 0;
}
