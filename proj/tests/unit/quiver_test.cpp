#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qpcohom/error.hpp"
#include "qpcohom/quiver.hpp"

using namespace qpc;

namespace {

Quiver random_quiver(std::mt19937& rng, int n, int m) {
  Quiver q;
  for (int v = 0; v < n; ++v) q.add_vertex(std::to_string(v));
  for (int k = 0; k < m; ++k) {
    int s = rng() % n, t = rng() % n;
    if (s == t) continue;
    q.add_arrow("a" + std::to_string(k), s, t);
  }
  return q;
}

Quiver oriented_triangle() {
  Quiver q;
  for (int v = 0; v < 3; ++v) q.add_vertex(std::to_string(v + 1));
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 2, 0);
  return q;
}

}  // namespace

TEST_CASE("paths compose left to right") {
  Quiver q = oriented_triangle();
  Path p = Path::of(q, {0, 1});
  CHECK(p.source == 0);
  CHECK(p.target == 2);
  CHECK(p.str(q) == "a.b");
  CHECK_THROWS_AS(Path::of(q, {1, 0}), Error);
  CHECK(p.then(Path::of(q, {2})).length() == 3);
  CHECK(Path::stationary(1).length() == 0);
}

TEST_CASE("cycles are stored as their least rotation") {
  Quiver q = oriented_triangle();
  Cycle c1 = Cycle::of(q, {1, 2, 0});
  Cycle c2 = Cycle::of(q, {2, 0, 1});
  CHECK(c1 == c2);
  CHECK(c1.arrows() == std::vector<int>{0, 1, 2});
  CHECK(c1.rotation(q, 1).str(q) == "b.c.a");
  CHECK_THROWS_AS(Cycle::of(q, {0, 1}), Error);
}

TEST_CASE("chordless cycles match subset enumeration") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + rng() % 6;
    Quiver q = random_quiver(rng, n, rng() % (2 * n + 1));
    auto cycles = enumerate_chordless_cycles(q);
    auto expected = oracle::chordless_by_subsets(q);
    int oriented = 0;
    for (const auto& c : cycles) oriented += c.oriented;
    CHECK(static_cast<int>(cycles.size()) == expected.total);
    CHECK(oriented == expected.oriented);
    CHECK(is_cyclically_oriented(q) == (expected.total == expected.oriented));
  }
}

TEST_CASE("chordless cycle structure") {
  Quiver q;
  for (int v = 0; v < 4; ++v) q.add_vertex(std::to_string(v));
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 2, 3);
  q.add_arrow("d", 3, 0);
  q.add_arrow("e", 0, 2);
  auto cycles = enumerate_chordless_cycles(q);
  REQUIRE(cycles.size() == 2);
  int oriented = 0;
  for (const auto& c : cycles) {
    CHECK(c.vertices.size() == 3);
    oriented += c.oriented;
  }
  CHECK(oriented == 1);
  CHECK(inner_arrows(q) == std::vector<int>{4});
  CHECK_FALSE(is_cyclically_oriented(q));
}

TEST_CASE("double arrows form a chordless 2-cycle") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 0, 1);
  auto cycles = enumerate_chordless_cycles(q);
  REQUIRE(cycles.size() == 1);
  CHECK_FALSE(cycles[0].oriented);
  CHECK(find_double_arrows(q).size() == 1);
}

TEST_CASE("bypasses") {
  Quiver q;
  for (int v = 0; v < 3; ++v) q.add_vertex(std::to_string(v + 1));
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 0, 2);
  auto bs = find_bypasses(q);
  int proper = 0;
  for (const auto& b : bs)
    if (b.proper()) {
      ++proper;
      CHECK(b.arrow == 2);
      CHECK(b.path.str(q) == "a.b");
    }
  CHECK(proper == 1);
  CHECK(is_triangular(q));
  CHECK_FALSE(is_triangular(oriented_triangle()));
}

TEST_CASE("bypass search on cyclic quivers hits the length cap") {
  Quiver q = oriented_triangle();
  q.add_arrow("d", 0, 2);
  CHECK_THROWS_AS(find_bypasses(q, 2), Error);
  CHECK_NOTHROW(find_bypasses(oriented_triangle(), 2));
}

TEST_CASE("subquiver keeps vertices and renumbers arrows") {
  Quiver q = oriented_triangle();
  Quiver s = q.subquiver([](int a) { return a != 1; });
  CHECK(s.num_vertices() == 3);
  CHECK(s.num_arrows() == 2);
  CHECK(s.find_arrow("c") == 1);
  CHECK_FALSE(s.find_arrow("b").has_value());
}
