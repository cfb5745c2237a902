#include <doctest.h>

#include "qpcohom/error.hpp"
#include "qpcohom/report.hpp"

using namespace qpc;

namespace {

Report full_report() {
  Report r;
  r.command = "verify";
  r.input = "x.qp";
  r.field = "fp:101";
  r.max_len = 12;
  r.elapsed_ms = 1.5;
  r.n_w = 2;
  r.classes = {{"a.b.c"}, {"d.e.f", "g.h.i"}};
  r.extend = ExtendSummary{{"1", "2"}, {"a : 1 -> 2", "r : 2 -> 1 new"}, "a.r"};
  r.hh1 = Hh1Summary{6, 2, 1, 1};
  TheoremAReport t;
  t.n_w = 2;
  t.n_bc = 2;
  t.summand_dims = {1, 15};
  t.hom_dims = {{1, 0}, {0, 1}};
  t.classes = {{"x"}, {"y", "z"}};
  t.declared = TameClass::EuclideanE;
  t.diagnostics = {"note"};
  t.identities_hold = true;
  r.theorem_a = t;
  GeometryReport g;
  g.boundary = 4;
  g.punctures = {"p", "q"};
  g.valency = {2, 3};
  g.blocks = {"I: t1"};
  g.rel_bar = {{"t1"}, {}};
  g.rel = {{"t1"}, {}};
  g.nrel = {"t2"};
  g.m = {1, 0};
  g.m_p = 1;
  g.theorem_b = 2;
  g.triangle_classes = {{"t1"}, {"t2"}};
  g.n_w_unreduced = 2;
  g.reduced = true;
  g.configs = {"A", "-"};
  g.survives = {true, false};
  g.reduced_vertices = 5;
  g.reduced_arrows = 6;
  g.reduced_potential = "0";
  g.oracle_hh1 = 2;
  r.geometry = g;
  r.cuts = {CutSummary{{"a", "b"}, true, 7, true}};
  r.checks = {CheckResult{"N_W = N_BC", true, "2 = 2"}, CheckResult{"bar", false, ""}};
  r.exit_code = 1;
  return r;
}

}  // namespace

TEST_CASE("full report round trips") {
  Report r = full_report();
  CHECK(report_from_json(report_to_json(r)) == r);
  CHECK(report_from_json(report_to_json(r, -1)) == r);
}

TEST_CASE("minimal report round trips with nulls") {
  Report r;
  r.command = "nw";
  r.n_w = 0;
  std::string json = report_to_json(r);
  CHECK(json.find("\"hh1\": null") != std::string::npos);
  CHECK(json.find("\"geometry\": null") != std::string::npos);
  CHECK(report_from_json(json) == r);
}

TEST_CASE("malformed reports are input errors") {
  CHECK_THROWS_AS(report_from_json("{"), InputError);
  CHECK_THROWS_AS(report_from_json("[]"), InputError);
  CHECK_THROWS_AS(report_from_json(R"({"command": 3})"), InputError);
}
