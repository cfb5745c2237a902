#include <doctest.h>

#include "build.hpp"
#include "qpcohom/error.hpp"
#include "qpcohom/theorems.hpp"

using namespace qpc;
using testing_support::load;

namespace {

TheoremAReport analyse(const std::string& f) {
  auto d = load(f);
  return run_theorem_a(*d.quiver, d.relations, d.declared.value_or(TameClass::None));
}

Quiver quiver_from(int n, std::vector<std::pair<int, int>> arrows) {
  Quiver q;
  for (int v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
  int k = 0;
  for (auto [s, t] : arrows) q.add_arrow("x" + std::to_string(++k), s - 1, t - 1);
  return q;
}

}  // namespace

TEST_CASE("type assertion spellings round trip") {
  for (auto t : {TameClass::None, TameClass::EuclideanA, TameClass::EuclideanD, TameClass::EuclideanE,
                 TameClass::DynkinD, TameClass::RepFinite, TameClass::CyclicallyOriented})
    CHECK(tame_class_from_string(to_string(t)) == t);
  CHECK_THROWS_AS(tame_class_from_string("wild"), InputError);
}

TEST_CASE("E8 tilted algebra report") {
  auto r = analyse("e8_tilted.qp");
  CHECK(r.n_w == 2);
  CHECK(r.n_bc == 2);
  CHECK(r.end_e == 2);
  CHECK(r.hh1_b == 2);
  CHECK(r.hh1_c == 0);
  CHECK(r.h1_c_e == 0);
  CHECK(r.dim_b == 41);
  CHECK(r.dim_c == 25);
  CHECK(r.dim_e == 16);
  CHECK(r.summand_dims == std::vector<int>{1, 15});
  CHECK(r.hom_dims == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK(r.cyclically_oriented);
  CHECK(r.identity_applies);
  CHECK(r.identities_hold);
  CHECK(r.c_sequential_walks == 0);
}

TEST_CASE("D4 tilted algebra report") {
  auto r = analyse("d4_tilted.qp");
  CHECK(r.n_w == 1);
  CHECK(r.hh1_b == 1);
  CHECK_FALSE(r.cyclically_oriented);
  CHECK(r.identity_applies);
  CHECK(r.identities_hold);
}

TEST_CASE("star family reports") {
  for (const char* f : {"star_1.qp", "star_2.qp", "star_3.qp", "star_4.qp"}) {
    auto r = analyse(f);
    CHECK(r.n_w == 1);
    CHECK(r.hh1_b == 1);
    CHECK(r.cyclically_oriented);
    CHECK(r.identities_hold);
  }
}

TEST_CASE("twin presentations are invariant") {
  auto r1 = analyse("twin_monomial.qp");
  auto r2 = analyse("twin_binomial.qp");
  CHECK(r1.n_w == 1);
  CHECK(r2.n_w == 1);
  CHECK(invariance_audit(r1, r2).passed());
  CHECK(r1.hh1_b == 3);
  CHECK(r1.hh1_c == 2);
  CHECK(r1.identities_hold);
}

TEST_CASE("euclidean A epsilon branches") {
  Quiver kronecker = quiver_from(2, {{1, 2}, {1, 2}});
  Quiver bypassed = quiver_from(3, {{1, 2}, {2, 3}, {1, 3}});
  Quiver square = quiver_from(4, {{1, 2}, {2, 4}, {1, 3}, {3, 4}});
  CHECK(tame_a_epsilon(kronecker, {}).epsilon == 3);
  auto b = tame_a_epsilon(bypassed, {});
  CHECK(b.epsilon == 2);
  CHECK(b.hereditary_bypass);
  CHECK(tame_a_epsilon(square, {}).epsilon == 1);
  for (const auto& [q, eps] : {std::pair{kronecker, 3}, std::pair{bypassed, 2}, std::pair{square, 1}}) {
    auto r = run_theorem_a(q, {}, TameClass::EuclideanA);
    CHECK(r.n_w == 0);
    CHECK(r.hh1_b == eps);
    CHECK(r.identities_hold);
  }
}

TEST_CASE("double arrow and hereditary bypass together") {
  Quiver q = quiver_from(3, {{1, 2}, {1, 2}, {2, 3}, {1, 3}});
  auto e = tame_a_epsilon(q, {});
  CHECK(e.co_occur);
  CHECK(e.epsilon == 3);
  CHECK(e.diagnostics.size() == 2);
}

TEST_CASE("representation finite formula") {
  Quiver tri = quiver_from(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK(rep_finite_formula(tri) == 1);
  Quiver two = quiver_from(4, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 1}});
  CHECK(rep_finite_formula(two) == 1);
  Quiver linear = quiver_from(3, {{1, 2}, {2, 3}});
  CHECK(rep_finite_formula(linear) == 0);
}

TEST_CASE("lower bound audit") {
  auto r = analyse("e8_tilted.qp");
  auto a = lower_bound_check(r);
  CHECK(a.holds);
  CHECK(a.equality);
  CHECK(a.orthogonal_bricks);
  CHECK(a.consistent);
  CHECK(a.nonzero_if_not_hereditary);
  auto t = lower_bound_check(analyse("twin_monomial.qp"));
  CHECK(t.holds);
  CHECK(t.consistent);
}

TEST_CASE("a wrong rep-finite assertion is flagged") {
  auto r = run_theorem_a(quiver_from(2, {{1, 2}, {1, 2}}), {}, TameClass::RepFinite);
  CHECK_FALSE(r.identities_hold);
  CHECK_FALSE(r.diagnostics.empty());
}
