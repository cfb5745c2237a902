#include "qpcohom/report.hpp"

#include <json.hpp>

#include "qpcohom/error.hpp"

namespace qpc {

using nlohmann::json;

namespace {

template <class T>
void put_opt(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get_opt(const json& j, const char* key, std::optional<T>& v) {
  const json& x = j.at(key);
  if (x.is_null())
    v.reset();
  else
    v = x.get<T>();
}

}  // namespace

void to_json(json& j, const CheckResult& c) { j = json{{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}}; }
void from_json(const json& j, CheckResult& c) {
  j.at("name").get_to(c.name);
  j.at("holds").get_to(c.holds);
  j.at("detail").get_to(c.detail);
}

void to_json(json& j, const ExtendSummary& e) {
  j = json{{"vertices", e.vertices}, {"arrows", e.arrows}, {"potential", e.potential}};
}
void from_json(const json& j, ExtendSummary& e) {
  j.at("vertices").get_to(e.vertices);
  j.at("arrows").get_to(e.arrows);
  j.at("potential").get_to(e.potential);
}

void to_json(json& j, const Hh1Summary& h) {
  j = json{{"dim", h.dim}, {"stabilization", h.stabilization}, {"hh1", h.hh1}};
  put_opt(j, "bar_hh1", h.bar_hh1);
}
void from_json(const json& j, Hh1Summary& h) {
  j.at("dim").get_to(h.dim);
  j.at("stabilization").get_to(h.stabilization);
  j.at("hh1").get_to(h.hh1);
  get_opt(j, "bar_hh1", h.bar_hh1);
}

void to_json(json& j, const TheoremAReport& r) {
  j = json{{"n_w", r.n_w},
           {"n_bc", r.n_bc},
           {"end_e", r.end_e},
           {"hh1_b", r.hh1_b},
           {"hh1_c", r.hh1_c},
           {"h1_c_e", r.h1_c_e},
           {"h1_b_e", r.h1_b_e},
           {"dim_b", r.dim_b},
           {"dim_c", r.dim_c},
           {"dim_e", r.dim_e},
           {"summand_dims", r.summand_dims},
           {"hom_dims", r.hom_dims},
           {"classes", r.classes},
           {"cyclically_oriented", r.cyclically_oriented},
           {"declared", to_string(r.declared)},
           {"c_sequential_walks", r.c_sequential_walks},
           {"ses_additivity", r.ses_additivity},
           {"h1_splitting", r.h1_splitting},
           {"lower_bound", r.lower_bound},
           {"identity_applies", r.identity_applies},
           {"identities_hold", r.identities_hold},
           {"diagnostics", r.diagnostics}};
}
void from_json(const json& j, TheoremAReport& r) {
  j.at("n_w").get_to(r.n_w);
  j.at("n_bc").get_to(r.n_bc);
  j.at("end_e").get_to(r.end_e);
  j.at("hh1_b").get_to(r.hh1_b);
  j.at("hh1_c").get_to(r.hh1_c);
  j.at("h1_c_e").get_to(r.h1_c_e);
  j.at("h1_b_e").get_to(r.h1_b_e);
  j.at("dim_b").get_to(r.dim_b);
  j.at("dim_c").get_to(r.dim_c);
  j.at("dim_e").get_to(r.dim_e);
  j.at("summand_dims").get_to(r.summand_dims);
  j.at("hom_dims").get_to(r.hom_dims);
  j.at("classes").get_to(r.classes);
  j.at("cyclically_oriented").get_to(r.cyclically_oriented);
  r.declared = tame_class_from_string(j.at("declared").get<std::string>());
  j.at("c_sequential_walks").get_to(r.c_sequential_walks);
  j.at("ses_additivity").get_to(r.ses_additivity);
  j.at("h1_splitting").get_to(r.h1_splitting);
  j.at("lower_bound").get_to(r.lower_bound);
  j.at("identity_applies").get_to(r.identity_applies);
  j.at("identities_hold").get_to(r.identities_hold);
  j.at("diagnostics").get_to(r.diagnostics);
}

void to_json(json& j, const GeometryReport& g) {
  j = json{{"boundary", g.boundary},
           {"punctures", g.punctures},
           {"valency", g.valency},
           {"blocks", g.blocks},
           {"rel_bar", g.rel_bar},
           {"rel", g.rel},
           {"nrel", g.nrel},
           {"m", g.m},
           {"m_p", g.m_p},
           {"m_q", g.m_q},
           {"m_pq", g.m_pq},
           {"theorem_b", g.theorem_b},
           {"triangle_classes", g.triangle_classes},
           {"n_w_unreduced", g.n_w_unreduced},
           {"reduced", g.reduced},
           {"configs", g.configs},
           {"survives", g.survives},
           {"reduced_vertices", g.reduced_vertices},
           {"reduced_arrows", g.reduced_arrows},
           {"reduced_potential", g.reduced_potential}};
  put_opt(j, "oracle_hh1", g.oracle_hh1);
  put_opt(j, "formula", g.formula);
}
void from_json(const json& j, GeometryReport& g) {
  j.at("boundary").get_to(g.boundary);
  j.at("punctures").get_to(g.punctures);
  j.at("valency").get_to(g.valency);
  j.at("blocks").get_to(g.blocks);
  j.at("rel_bar").get_to(g.rel_bar);
  j.at("rel").get_to(g.rel);
  j.at("nrel").get_to(g.nrel);
  j.at("m").get_to(g.m);
  j.at("m_p").get_to(g.m_p);
  j.at("m_q").get_to(g.m_q);
  j.at("m_pq").get_to(g.m_pq);
  j.at("theorem_b").get_to(g.theorem_b);
  j.at("triangle_classes").get_to(g.triangle_classes);
  j.at("n_w_unreduced").get_to(g.n_w_unreduced);
  j.at("reduced").get_to(g.reduced);
  j.at("configs").get_to(g.configs);
  j.at("survives").get_to(g.survives);
  j.at("reduced_vertices").get_to(g.reduced_vertices);
  j.at("reduced_arrows").get_to(g.reduced_arrows);
  j.at("reduced_potential").get_to(g.reduced_potential);
  get_opt(j, "oracle_hh1", g.oracle_hh1);
  get_opt(j, "formula", g.formula);
}

void to_json(json& j, const CutSummary& c) {
  j = json{{"arrows", c.arrows}, {"admissible", c.admissible}, {"dim", c.dim}, {"gldim_le_two", c.gldim_le_two}};
}
void from_json(const json& j, CutSummary& c) {
  j.at("arrows").get_to(c.arrows);
  j.at("admissible").get_to(c.admissible);
  j.at("dim").get_to(c.dim);
  j.at("gldim_le_two").get_to(c.gldim_le_two);
}

std::string report_to_json(const Report& r, int indent) {
  json j{{"command", r.command},   {"input", r.input},     {"field", r.field},   {"max_len", r.max_len},
         {"elapsed_ms", r.elapsed_ms}, {"classes", r.classes}, {"cuts", r.cuts},     {"checks", r.checks},
         {"exit_code", r.exit_code}};
  put_opt(j, "n_w", r.n_w);
  put_opt(j, "extend", r.extend);
  put_opt(j, "hh1", r.hh1);
  put_opt(j, "theorem_a", r.theorem_a);
  put_opt(j, "geometry", r.geometry);
  return j.dump(indent);
}

Report report_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    Report r;
    j.at("command").get_to(r.command);
    j.at("input").get_to(r.input);
    j.at("field").get_to(r.field);
    j.at("max_len").get_to(r.max_len);
    j.at("elapsed_ms").get_to(r.elapsed_ms);
    j.at("classes").get_to(r.classes);
    j.at("cuts").get_to(r.cuts);
    j.at("checks").get_to(r.checks);
    j.at("exit_code").get_to(r.exit_code);
    get_opt(j, "n_w", r.n_w);
    get_opt(j, "extend", r.extend);
    get_opt(j, "hh1", r.hh1);
    get_opt(j, "theorem_a", r.theorem_a);
    get_opt(j, "geometry", r.geometry);
    return r;
  } catch (const json::exception& e) {
    throw InputError(0, std::string("malformed report: ") + e.what());
  }
}

}  // namespace qpc
