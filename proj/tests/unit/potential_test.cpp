#include <doctest.h>

#include <algorithm>

#include "build.hpp"
#include "qpcohom/error.hpp"
#include "qpcohom/potential.hpp"

using namespace qpc;
using testing_support::doc;
using testing_support::load;

namespace {

Quiver linear(int n) {
  Quiver q;
  for (int v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
  for (int v = 0; v + 1 < n; ++v) q.add_arrow(std::string(1, static_cast<char>('a' + v)), v, v + 1);
  return q;
}

Relation rel(const Quiver& q, const std::string& name, std::vector<std::pair<long, std::vector<int>>> terms) {
  std::vector<Term> ts;
  for (auto& [c, arrows] : terms) ts.push_back({Scalar(c), Path::of(q, arrows)});
  return Relation::make(q, name, ts);
}

}  // namespace

TEST_CASE("relations merge terms and reject non-parallel ones") {
  Quiver q;
  for (int v = 0; v < 4; ++v) q.add_vertex(std::to_string(v));
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 3);
  q.add_arrow("c", 0, 2);
  q.add_arrow("d", 2, 3);
  Relation r = rel(q, "r", {{1, {0, 1}}, {2, {2, 3}}, {-1, {0, 1}}});
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].coef == Scalar(2));
  CHECK(r.source == 0);
  CHECK(r.target == 3);
  CHECK(rel(q, "z", {{1, {0, 1}}, {-1, {0, 1}}}).is_zero());
  CHECK_THROWS_AS(rel(q, "bad", {{1, {0, 1}}, {1, {0}}}), Error);
}

TEST_CASE("potentials collapse rotations and cancel") {
  Quiver q;
  for (int v = 0; v < 3; ++v) q.add_vertex(std::to_string(v));
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 2, 0);
  Potential w = Potential::make({{Scalar(1), Cycle::of(q, {0, 1, 2})}, {Scalar(2), Cycle::of(q, {1, 2, 0})}});
  REQUIRE(w.terms().size() == 1);
  CHECK(w.terms()[0].coef == Scalar(3));
  CHECK(Potential::make({{Scalar(1), Cycle::of(q, {0, 1, 2})}, {Scalar(-1), Cycle::of(q, {2, 0, 1})}}).is_zero());
  Relation d = cyclic_derivative(q, w, 1);
  REQUIRE(d.terms.size() == 1);
  CHECK(d.terms[0].path.str(q) == "c.a");
  CHECK(d.terms[0].coef == Scalar(3));
}

TEST_CASE("relation extension adds one reversed arrow per relation") {
  auto d = load("e8_tilted.qp");
  QP qp = d.qp();
  CHECK(qp.quiver.num_vertices() == 10);
  CHECK(qp.quiver.num_arrows() == 15);
  CHECK(qp.quiver.count_new() == 5);
  REQUIRE(qp.new_arrows.size() == 5);
  for (std::size_t i = 0; i < qp.relations.size(); ++i) {
    const auto& a = qp.quiver.arrow(qp.new_arrows[i]);
    CHECK(a.name == qp.relations[i].name);
    CHECK(a.source == qp.relations[i].target);
    CHECK(a.target == qp.relations[i].source);
  }
  CHECK(qp.potential.terms().size() == 6);
  for (const auto& t : qp.potential.terms()) {
    int new_count = 0;
    for (int a : t.cycle.arrows()) new_count += qp.quiver.is_new(a);
    CHECK(new_count == 1);
  }
}

TEST_CASE("relation extension preconditions") {
  Quiver q = linear(3);
  CHECK_THROWS_AS(relation_extension(q, {Relation::make(q, "r", {{Scalar(1), Path::of(q, {0})}})}), Error);
  Quiver cyc = linear(2);
  cyc.add_arrow("back", 1, 0);
  CHECK_THROWS_AS(relation_extension(cyc, {}), Error);
}

TEST_CASE("cycle classes of the euclidean E8 extension") {
  QP qp = load("e8_tilted.qp").qp();
  CHECK(potential_invariant(qp.potential) == 2);
  auto classes = cycle_equivalence_classes(qp.potential);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].size() == 1);
  CHECK(classes[1].size() == 5);
  CHECK(arrow_equivalence_classes(qp).size() == 2);
  auto parts = direct_decomposition(qp.potential);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].terms().size() + parts[1].terms().size() == 6);
  CHECK(chordless_potential(qp.quiver) == qp.potential);
}

TEST_CASE("both twin presentations have one class") {
  for (const char* f : {"twin_monomial.qp", "twin_binomial.qp"}) {
    QP qp = load(f).qp();
    CHECK(potential_invariant(qp.potential) == 1);
    CHECK(arrow_equivalence_classes(qp).size() == 1);
  }
}

TEST_CASE("hereditary input has the zero potential") {
  QP qp = load("kronecker.qp").qp();
  CHECK(qp.potential.is_zero());
  CHECK(potential_invariant(qp.potential) == 0);
  CHECK(detect_c_sequential_walks(qp).empty());
}

TEST_CASE("no C-sequential walks in the fixture extensions") {
  for (const char* f : {"e8_tilted.qp", "d4_tilted.qp", "star_1.qp", "star_2.qp", "star_3.qp", "star_4.qp",
                        "twin_monomial.qp", "twin_binomial.qp"})
    CHECK(detect_c_sequential_walks(load(f).qp()).empty());
}

TEST_CASE("two zero relations meeting head to tail give a C-sequential walk") {
  Quiver q = linear(5);
  std::vector<Relation> rels{rel(q, "r", {{1, {0, 1}}}), rel(q, "s", {{1, {2, 3}}})};
  auto walks = detect_c_sequential_walks(relation_extension(q, rels));
  CHECK_FALSE(walks.empty());
  for (const auto& w : walks) CHECK(w.reduced());
}

TEST_CASE("overlapping zero relations give no C-sequential walk") {
  Quiver q = linear(4);
  std::vector<Relation> rels{rel(q, "r", {{1, {0, 1}}}), rel(q, "s", {{1, {1, 2}}})};
  CHECK(detect_c_sequential_walks(relation_extension(q, rels)).empty());
}

TEST_CASE("admissible cuts of an oriented triangle") {
  Quiver q;
  for (int v = 0; v < 3; ++v) q.add_vertex(std::to_string(v));
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 2, 0);
  auto cuts = admissible_cuts(q);
  CHECK(cuts.size() == 3);
  for (const auto& c : cuts) CHECK(c.size() == 1);
}

TEST_CASE("admissible cuts of the E8 extension contain the new arrows") {
  QP qp = load("e8_tilted.qp").qp();
  std::vector<int> news = qp.new_arrows;
  std::sort(news.begin(), news.end());
  bool found = false;
  for (auto c : admissible_cuts(qp.quiver)) {
    std::sort(c.begin(), c.end());
    if (c == news) found = true;
  }
  CHECK(found);
}

TEST_CASE("documents parse the relation extension potential") {
  auto d = doc(R"([quiver]
vertices = 1..3
arrow a : 1 -> 2
arrow b : 2 -> 3
[relations]
relation r = a.b
)");
  QP qp = d.qp();
  CHECK(qp.potential.str(qp.quiver) == "a.b.r");
}
