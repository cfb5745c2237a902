#include <doctest.h>

#include <memory>

#include "build.hpp"
#include "qpcohom/algebra.hpp"
#include "qpcohom/hochschild.hpp"

using namespace qpc;
using testing_support::load;

namespace {

std::shared_ptr<const FiniteDimAlgebra> shared(FiniteDimAlgebra a) {
  return std::make_shared<const FiniteDimAlgebra>(std::move(a));
}

FiniteDimAlgebra path_algebra(int n, bool double_arrow) {
  Quiver q;
  for (int v = 1; v <= n; ++v) q.add_vertex(std::to_string(v));
  for (int v = 0; v + 1 < n; ++v) q.add_arrow("a" + std::to_string(v), v, v + 1);
  if (double_arrow) q.add_arrow("b", 0, 1);
  return build_algebra(q, {});
}

}  // namespace

TEST_CASE("hh1 of hereditary algebras") {
  CHECK(hh1(path_algebra(1, false)) == 0);
  CHECK(hh1(path_algebra(4, false)) == 0);
  CHECK(hh1(path_algebra(2, true)) == 3);
}

TEST_CASE("truncated oriented triangle has one outer derivation") {
  Quiver q;
  for (int v = 0; v < 3; ++v) q.add_vertex(std::to_string(v));
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 2, 0);
  auto a = shared(jacobian_algebra(make_qp(q, Potential::make({{Scalar(1), Cycle::of(q, {0, 1, 2})}}))));
  CHECK(hh1(a) == 1);
  CHECK(bar_h1_dim(*a, Bimodule::regular(a)) == 1);
}

TEST_CASE("derivation and bar complex routes agree on small fixtures") {
  for (const char* f : {"star_1.qp", "star_2.qp", "star_3.qp", "star_4.qp", "twin_monomial.qp", "twin_binomial.qp",
                        "kronecker.qp"}) {
    CAPTURE(f);
    auto d = load(f);
    auto b = shared(jacobian_algebra(d.qp()));
    REQUIRE(b->dim() <= 20);
    CHECK(hh1(b) == bar_h1_dim(*b, Bimodule::regular(b)));
    auto c = shared(build_algebra(*d.quiver, d.relations));
    CHECK(hh1(c) == bar_h1_dim(*c, Bimodule::regular(c)));
  }
}

TEST_CASE("frozen hh1 values of the fixtures") {
  CHECK(hh1(shared(jacobian_algebra(load("e8_tilted.qp").qp()))) == 2);
  CHECK(hh1(shared(jacobian_algebra(load("d4_tilted.qp").qp()))) == 1);
  for (const char* f : {"star_1.qp", "star_2.qp", "star_3.qp", "star_4.qp"})
    CHECK(hh1(shared(jacobian_algebra(load(f).qp()))) == 1);
  CHECK(hh1(shared(jacobian_algebra(load("kronecker.qp").qp()))) == 3);
  CHECK(hh1(shared(jacobian_algebra(load("twin_monomial.qp").qp()))) == 3);
}

TEST_CASE("derivations split into inner and outer parts") {
  auto a = shared(path_algebra(2, true));
  Bimodule reg = Bimodule::regular(a);
  CHECK(der0_dim(*a, reg) - inn0_dim(*a, reg) == h1_dim(*a, reg));
  CHECK(h1_dim(*a, reg) == 3);
}

TEST_CASE("extension cohomology of the E8 extension") {
  auto b = shared(jacobian_algebra(load("e8_tilted.qp").qp()));
  auto ext = split_extension(b);
  auto coh = extension_cohomology(b, ext);
  CHECK(coh.hh1_b == 2);
  CHECK(coh.hh1_c == 0);
  CHECK(coh.h1_b_e == 2);
  CHECK(coh.h1_c_e == 0);
  CHECK(coh.end_e == 2);
  CHECK(coh.ses_additivity());
  CHECK(coh.h1_splitting());
  CHECK(ses_additivity_check(b, ext));
  CHECK(h1_splitting_check(b, ext));
}

TEST_CASE("bar route on the bimodule E") {
  auto b = shared(jacobian_algebra(load("star_2.qp").qp()));
  auto ext = split_extension(b);
  CHECK(h1_dim(*ext.c, ext.e_over_c) == bar_h1_dim(*ext.c, ext.e_over_c));
  CHECK(h1_dim(*b, ext.e_over_b) == bar_h1_dim(*b, ext.e_over_b));
}
