#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include "qpcohom/document.hpp"
#include "qpcohom/error.hpp"
#include "qpcohom/geometry.hpp"
#include "qpcohom/hochschild.hpp"
#include "qpcohom/theorems.hpp"

namespace qpc::cli {

namespace {

constexpr int kBarOracleMaxDim = 20;

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ExtendSummary summarize(const QP& qp) {
  ExtendSummary s;
  const Quiver& q = qp.quiver;
  for (int v = 0; v < q.num_vertices(); ++v) s.vertices.push_back(q.vertex_name(v));
  for (const auto& a : q.arrows())
    s.arrows.push_back(a.name + " : " + q.vertex_name(a.source) + " -> " + q.vertex_name(a.target) +
                       (a.kind == ArrowKind::New ? " new" : ""));
  s.potential = qp.potential.is_zero() ? "0" : qp.potential.str(q);
  return s;
}

std::vector<std::vector<std::string>> class_strings(const QP& qp) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cls : cycle_equivalence_classes(qp.potential)) {
    std::vector<std::string> c;
    for (int t : cls) c.push_back(qp.potential.terms()[t].cycle.str(qp.quiver));
    out.push_back(c);
  }
  return out;
}

void print_classes(std::ostream& os, const std::vector<std::vector<std::string>>& classes) {
  for (std::size_t i = 0; i < classes.size(); ++i) os << "class " << i + 1 << ": " << join(classes[i], ", ") << "\n";
}

TheoremAReport theorem_a_for(const InputDocument& doc, const AnalysisOptions& opts) {
  TameClass declared = doc.declared.value_or(TameClass::None);
  if (doc.has_relations) return run_theorem_a(*doc.quiver, doc.relations, declared, opts);
  if (doc.quiver->count_new() > 0) return run_theorem_a(doc.qp(), declared, opts);
  return run_theorem_a(*doc.quiver, {}, declared, opts);
}

QP algebraic_qp(const InputDocument& doc) {
  if (doc.has_relations || doc.quiver->count_new() > 0 || doc.potential) return doc.qp();
  return relation_extension(*doc.quiver, {});
}

std::vector<std::string> triangle_names(const Triangulation& t, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int i : ids) out.push_back(t.triangles()[i].name);
  return out;
}

struct GeometryRun {
  AdjacencyQP unreduced;
  ReducedQP reduced;
  GeometryReport report;
};

GeometryRun run_geometry(const Triangulation& t, bool oracle, BuildOptions build) {
  GeometryRun g{adjacency_qp(t), {}, {}};
  GeometryReport& r = g.report;
  r.boundary = t.boundary_points();
  for (const auto& b : decompose_blocks(t)) r.blocks.push_back(to_string(b.type) + ": " + join(triangle_names(t, b.triangles), " "));
  RelatednessReport rel = relatedness(t);
  r.punctures = rel.punctures;
  r.valency = rel.valency;
  for (const auto& v : rel.rel_bar) r.rel_bar.push_back(triangle_names(t, v));
  for (const auto& v : rel.rel) r.rel.push_back(triangle_names(t, v));
  r.nrel = triangle_names(t, rel.nrel);
  r.m = rel.m;
  r.m_p = rel.m_p;
  r.m_q = rel.m_q;
  r.m_pq = rel.m_pq;
  r.theorem_b = theorem_b_dim(rel);
  for (const auto& c : triangle_classes(t, rel)) r.triangle_classes.push_back(triangle_names(t, c));
  r.n_w_unreduced = potential_invariant(g.unreduced.qp.potential);
  g.reduced = reduce_local(g.unreduced, t);
  r.reduced = true;
  for (const auto& c : g.reduced.config) r.configs.push_back(c ? to_string(*c) : "-");
  r.survives = g.reduced.puncture_survives;
  r.reduced_vertices = g.reduced.qp.quiver.num_vertices();
  r.reduced_arrows = g.reduced.qp.quiver.num_arrows();
  r.reduced_potential = g.reduced.qp.potential.is_zero() ? "0" : g.reduced.qp.potential.str(g.reduced.qp.quiver);
  if (oracle) {
    r.oracle_hh1 = hh1(jacobian_algebra(g.reduced.qp, build));
    if (t.num_punctures() == 1) r.formula = rep_finite_formula(g.reduced.qp.quiver);
  }
  return g;
}

// Classes of internal triangles must match the cycle classes of their
// triangle cycles in the unreduced potential.
bool triangle_classes_match(const Triangulation& t, const AdjacencyQP& a) {
  auto classes = cycle_equivalence_classes(a.qp.potential);
  std::map<Cycle, int> class_of;
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (int term : classes[k]) class_of[a.qp.potential.terms()[term].cycle] = static_cast<int>(k);
  auto tri = triangle_classes(t, relatedness(t));
  std::map<int, int> tri_class;
  for (std::size_t k = 0; k < tri.size(); ++k)
    for (int ti : tri[k]) tri_class[ti] = static_cast<int>(k);
  for (const auto& [ti, k] : tri_class)
    for (const auto& [tj, l] : tri_class) {
      bool same_cycle_class = class_of.at(*a.triangle_cycle[ti]) == class_of.at(*a.triangle_cycle[tj]);
      if (same_cycle_class != (k == l)) return false;
    }
  return true;
}

void print_geometry(std::ostream& os, const GeometryReport& r, bool show_reduced) {
  os << "boundary points: " << r.boundary << "\n";
  for (std::size_t x = 0; x < r.punctures.size(); ++x) {
    os << "puncture " << r.punctures[x] << ": valency " << r.valency[x] << ", related {" << join(r.rel[x], " ")
       << "}, related incl. self-folded {" << join(r.rel_bar[x], " ") << "}, m = " << r.m[x] << "\n";
  }
  for (const auto& b : r.blocks) os << "block " << b << "\n";
  os << "unrelated internal triangles: {" << join(r.nrel, " ") << "}\n";
  os << "m_p = " << r.m_p << ", m_q = " << r.m_q << ", m_pq = " << r.m_pq << "\n";
  for (std::size_t k = 0; k < r.triangle_classes.size(); ++k)
    os << "triangle class " << k + 1 << ": " << join(r.triangle_classes[k], " ") << "\n";
  os << "N_W (unreduced) = " << r.n_w_unreduced << "\n";
  if (show_reduced) {
    for (std::size_t x = 0; x < r.punctures.size(); ++x)
      os << "puncture " << r.punctures[x] << ": configuration " << r.configs[x] << ", puncture cycle "
         << (r.survives[x] ? "survives" : "vanishes") << "\n";
    os << "reduced quiver: " << r.reduced_vertices << " vertices, " << r.reduced_arrows << " arrows\n";
    os << "reduced potential: " << r.reduced_potential << "\n";
  }
  os << "dim HH1 (triangulation formula) = " << r.theorem_b << "\n";
  if (r.oracle_hh1) os << "dim HH1 (oracle) = " << *r.oracle_hh1 << "\n";
  if (r.formula) os << "chordless cycles - inner arrows = " << *r.formula << "\n";
}

void print_theorem_a(std::ostream& os, const TheoremAReport& r) {
  os << "dim B = " << r.dim_b << ", dim C = " << r.dim_c << ", dim E = " << r.dim_e << "\n";
  os << "N_W = " << r.n_w << "\n";
  os << "N_BC = " << r.n_bc << "\n";
  print_classes(os, r.classes);
  std::vector<std::string> dims;
  for (int d : r.summand_dims) dims.push_back(std::to_string(d));
  os << "summand dims: " << join(dims, " ") << "\n";
  os << "Hom dims:\n";
  for (const auto& row : r.hom_dims) {
    std::vector<std::string> cells;
    for (int d : row) cells.push_back(std::to_string(d));
    os << "  " << join(cells, " ") << "\n";
  }
  os << "dim End(E) = " << r.end_e << "\n";
  os << "dim HH1(B) = " << r.hh1_b << "\n";
  os << "dim HH1(C) = " << r.hh1_c << "\n";
  os << "dim H1(B,E) = " << r.h1_b_e << "\n";
  os << "dim H1(C,E) = " << r.h1_c_e << "\n";
  os << "cyclically oriented: " << yes_no(r.cyclically_oriented) << "\n";
  os << "declared type: " << to_string(r.declared) << "\n";
  os << "C-sequential walks: " << r.c_sequential_walks << "\n";
  os << "short exact sequence additivity: " << yes_no(r.ses_additivity) << "\n";
  os << "H1 splitting: " << yes_no(r.h1_splitting) << "\n";
  os << "lower bound hh1(B) >= hh1(C) + N_W: " << yes_no(r.lower_bound) << "\n";
  os << "identities apply: " << yes_no(r.identity_applies) << "\n";
  if (r.identity_applies) os << "identities hold: " << yes_no(r.identities_hold) << "\n";
  for (const auto& d : r.diagnostics) os << "note: " << d << "\n";
}

void add_check(Report& r, std::string name, bool holds, std::string detail) {
  r.checks.push_back(CheckResult{std::move(name), holds, std::move(detail)});
}

void print_checks(std::ostream& os, const Report& r) {
  for (const auto& c : r.checks) {
    os << (c.holds ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
}

std::string eq_detail(int a, int b) { return std::to_string(a) + " = " + std::to_string(b); }

void configure_field(const CommandOptions& opts, Report& r) {
  std::string spec = opts.field;
  if (spec.empty()) {
    const char* env = std::getenv("QP_FIELD");
    spec = env && *env ? env : "q";
  }
  field::configure(spec);
  r.field = field::describe();
}

}  // namespace

CommandResult run_command(const std::string& command, const std::string& path, const CommandOptions& opts) {
  CommandResult res;
  Report& r = res.report;
  r.command = command;
  r.input = path;
  r.max_len = opts.max_len;
  configure_field(opts, r);
  auto start = std::chrono::steady_clock::now();
  std::ostringstream os;
  InputDocument doc = load_document(path);
  BuildOptions build{opts.max_len};
  AnalysisOptions analysis{build, true};

  auto require_algebraic = [&] {
    if (doc.is_geometric()) throw InputError(0, "'" + command + "' needs an algebraic document");
  };

  if (command == "nw") {
    QP qp = doc.is_geometric() ? adjacency_qp(*doc.triangulation).qp : algebraic_qp(doc);
    r.n_w = potential_invariant(qp.potential);
    r.classes = class_strings(qp);
    os << "N_W = " << *r.n_w << "\n";
    print_classes(os, r.classes);
  } else if (command == "extend") {
    QP qp = doc.is_geometric() ? adjacency_qp(*doc.triangulation).qp : algebraic_qp(doc);
    r.extend = summarize(qp);
    os << "vertices: " << join(r.extend->vertices, " ") << "\n";
    for (const auto& a : r.extend->arrows) os << "arrow " << a << "\n";
    os << "potential: " << r.extend->potential << "\n";
  } else if (command == "hh1") {
    QP qp = doc.is_geometric() ? reduce_local(adjacency_qp(*doc.triangulation), *doc.triangulation).qp
                               : algebraic_qp(doc);
    auto b = std::make_shared<const FiniteDimAlgebra>(jacobian_algebra(qp, build));
    Hh1Summary h;
    h.dim = b->dim();
    h.stabilization = b->stabilization_length();
    h.hh1 = hh1(b);
    os << "dim B = " << h.dim << " (paths of length " << h.stabilization << " vanish)\n";
    os << "dim HH1(B) = " << h.hh1 << "\n";
    if (opts.oracle) {
      h.bar_hh1 = bar_h1_dim(*b, Bimodule::regular(b));
      os << "dim HH1(B) via bar complex = " << *h.bar_hh1 << "\n";
      add_check(r, "bar complex agrees", *h.bar_hh1 == h.hh1, eq_detail(h.hh1, *h.bar_hh1));
    }
    r.hh1 = h;
  } else if (command == "theorem-a") {
    require_algebraic();
    r.theorem_a = theorem_a_for(doc, analysis);
    print_theorem_a(os, *r.theorem_a);
  } else if (command == "geom") {
    if (!doc.is_geometric()) throw InputError(0, "'geom' needs a triangulation");
    GeometryRun g = run_geometry(*doc.triangulation, opts.oracle, build);
    r.geometry = g.report;
    if (opts.oracle)
      add_check(r, "formula agrees with oracle", g.report.theorem_b == *g.report.oracle_hh1,
                eq_detail(g.report.theorem_b, *g.report.oracle_hh1));
    print_geometry(os, g.report, opts.reduce);
  } else if (command == "cuts") {
    if (doc.is_geometric()) {
      const Triangulation& t = *doc.triangulation;
      AdjacencyQP a = adjacency_qp(t);
      for (const auto& cut : geometric_cuts(t, build)) {
        CutSummary s;
        for (int arr : cut.arrows) s.arrows.push_back(a.qp.quiver.arrow(arr).name);
        s.admissible = cut.admissible;
        s.dim = cut.algebra->dim();
        s.gldim_le_two = cut.gldim_le_two;
        r.cuts.push_back(s);
      }
      bool all = true;
      for (const auto& s : r.cuts) all = all && s.admissible && s.gldim_le_two;
      add_check(r, "every geometric cut is admissible with gldim <= 2", all,
                std::to_string(r.cuts.size()) + " cuts");
    } else {
      QP qp = algebraic_qp(doc);
      for (const auto& cut : admissible_cuts(qp.quiver)) {
        CutSummary s;
        for (int arr : cut) s.arrows.push_back(qp.quiver.arrow(arr).name);
        s.admissible = true;
        FiniteDimAlgebra alg = cut_algebra(qp, cut, build);
        s.dim = alg.dim();
        s.gldim_le_two = gldim_le_two(alg);
        r.cuts.push_back(s);
      }
    }
    os << r.cuts.size() << " cut(s)\n";
    for (const auto& s : r.cuts)
      os << "cut {" << join(s.arrows, " ") << "}: admissible " << yes_no(s.admissible) << ", dim " << s.dim
         << ", gldim <= 2 " << yes_no(s.gldim_le_two) << "\n";
  } else if (command == "verify") {
    if (doc.is_geometric()) {
      const Triangulation& t = *doc.triangulation;
      GeometryRun g = run_geometry(t, true, build);
      r.geometry = g.report;
      add_check(r, "triangulation formula = oracle hh1", g.report.theorem_b == *g.report.oracle_hh1,
                eq_detail(g.report.theorem_b, *g.report.oracle_hh1));
      if (g.report.formula)
        add_check(r, "triangulation formula = chordless cycles - inner arrows",
                  g.report.theorem_b == *g.report.formula, eq_detail(g.report.theorem_b, *g.report.formula));
      add_check(r, "triangle classes match cycle classes", triangle_classes_match(t, g.unreduced),
                std::to_string(g.report.triangle_classes.size()) + " classes");
      bool valency_one = true;
      for (int v : g.report.valency) valency_one = valency_one && v == 1;
      if (valency_one) {
        auto cuts = geometric_cuts(t, build);
        bool all = true;
        for (const auto& c : cuts) all = all && c.admissible && c.gldim_le_two;
        add_check(r, "geometric cuts admissible with gldim <= 2", all, std::to_string(cuts.size()) + " cuts");
      }
    } else {
      QP qp = algebraic_qp(doc);
      if (doc.has_relations && doc.potential)
        add_check(r, "declared potential = Keller potential", *doc.potential == qp.potential,
                  doc.potential->str(qp.quiver) + " vs " + qp.potential.str(qp.quiver));
      auto b = std::make_shared<const FiniteDimAlgebra>(jacobian_algebra(qp, build));
      add_check(r, "associativity", check_associativity(*b), "dim " + std::to_string(b->dim()));
      r.theorem_a = theorem_a_for(doc, analysis);
      const TheoremAReport& a = *r.theorem_a;
      add_check(r, "N_W = N_BC", a.n_w == a.n_bc, eq_detail(a.n_w, a.n_bc));
      add_check(r, "short exact sequence additivity", a.ses_additivity,
                std::to_string(a.hh1_b) + " = " + std::to_string(a.h1_b_e) + " + " + std::to_string(a.hh1_c));
      add_check(r, "H1 splitting", a.h1_splitting,
                std::to_string(a.h1_b_e) + " = " + std::to_string(a.h1_c_e) + " + " + std::to_string(a.end_e));
      add_check(r, "hh1(B) >= hh1(C) + N_W", a.lower_bound,
                std::to_string(a.hh1_b) + " >= " + std::to_string(a.hh1_c) + " + " + std::to_string(a.n_w));
      if (a.identity_applies)
        add_check(r, "hh1(B) = N_W = N_BC", a.identities_hold,
                  std::to_string(a.hh1_b) + " = " + std::to_string(a.n_w) + " = " + std::to_string(a.n_bc));
      if (b->dim() <= kBarOracleMaxDim) {
        int bar = bar_h1_dim(*b, Bimodule::regular(b));
        add_check(r, "bar complex hh1 = derivation hh1", bar == a.hh1_b, eq_detail(bar, a.hh1_b));
      }
    }
  } else {
    throw InputError(0, "unknown command '" + command + "'");
  }
  print_checks(os, r);
  for (const auto& c : r.checks)
    if (!c.holds) r.exit_code = kViolated;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  res.human = os.str();
  return res;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hochschild cohomology of cluster-tilted and Jacobian algebras"};
  app.require_subcommand(1);
  bool json = false;
  std::string file;
  CommandOptions opts;
  app.add_flag("--json", json, "Print the report as JSON");
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"nw", "Potential invariant and its cycle classes"},
      {"extend", "Relation extension quiver and Keller potential"},
      {"hh1", "Dimension of HH1 of the Jacobian algebra"},
      {"theorem-a", "Full report for a relation extension"},
      {"geom", "Triangulation report"},
      {"cuts", "Admissible cuts and their algebras"},
      {"verify", "Check every applicable identity"},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("FILE", file, "Input document")->required();
    sub->add_flag("--json", json, "Print the report as JSON");
    sub->add_option("--max-len", opts.max_len, "Path length bound for normal forms (default 2*|Q0|)");
    if (std::string(s.name) == "hh1") {
      sub->add_flag("--oracle", opts.oracle, "Cross-check with the bar complex");
      sub->add_option("--field", opts.field, "Coefficient field: q or fp:P (default: QP_FIELD or q)");
    }
    if (std::string(s.name) == "geom") {
      sub->add_flag("--reduce", opts.reduce, "Show the reduced quiver with potential");
      sub->add_flag("--oracle", opts.oracle, "Compare with HH1 of the reduced Jacobian algebra");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  std::string command = app.get_subcommands().front()->get_name();
  try {
    CommandResult res = run_command(command, file, opts);
    if (json)
      out << report_to_json(res.report) << "\n";
    else
      out << res.human;
    return res.report.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_resource() ? kResourceCap : kInputError;
  }
}

}  // namespace qpc::cli
