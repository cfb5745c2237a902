#include <doctest.h>

#include <memory>

#include "build.hpp"
#include "oracles.hpp"
#include "qpcohom/algebra.hpp"
#include "qpcohom/error.hpp"

using namespace qpc;
using testing_support::load;

namespace {

Quiver oriented_triangle() {
  Quiver q;
  for (int v = 0; v < 3; ++v) q.add_vertex(std::to_string(v + 1));
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  q.add_arrow("c", 2, 0);
  return q;
}

QP triangle_qp() {
  Quiver q = oriented_triangle();
  return make_qp(q, Potential::make({{Scalar(1), Cycle::of(q, {0, 1, 2})}}));
}

}  // namespace

TEST_CASE("jacobian algebra dimensions agree with the truncation oracle") {
  for (const char* f : {"e8_tilted.qp", "d4_tilted.qp", "star_1.qp", "star_2.qp", "star_3.qp", "star_4.qp",
                        "twin_monomial.qp", "twin_binomial.qp", "kronecker.qp"}) {
    CAPTURE(f);
    QP qp = load(f).qp();
    CHECK(jacobian_algebra(qp).dim() == oracle::jacobian_dim(qp));
  }
}

TEST_CASE("tilted algebra dimensions agree with the truncation oracle") {
  for (const char* f : {"e8_tilted.qp", "d4_tilted.qp", "star_3.qp", "twin_binomial.qp"}) {
    CAPTURE(f);
    auto d = load(f);
    CHECK(build_algebra(*d.quiver, d.relations).dim() ==
          oracle::quotient_dim(*d.quiver, oracle::relation_generators(d.relations)));
  }
}

TEST_CASE("E8 algebra dimensions") {
  auto d = load("e8_tilted.qp");
  CHECK(jacobian_algebra(d.qp()).dim() == 41);
  CHECK(build_algebra(*d.quiver, d.relations).dim() == 25);
}

TEST_CASE("oriented triangle with its cycle as potential") {
  auto a = jacobian_algebra(triangle_qp());
  CHECK(a.dim() == 6);
  CHECK(a.graded_dims() == std::vector<int>{3, 3});
  CHECK(a.stabilization_length() == 2);
  CHECK(check_associativity(a));
  CHECK_FALSE(gldim_le_two(a));
}

TEST_CASE("cycle without relations is not finite dimensional") {
  Quiver q = oriented_triangle();
  CHECK_THROWS_AS(build_algebra(q, {}, BuildOptions{6}), Error);
  try {
    build_algebra(q, {}, BuildOptions{6});
  } catch (const Error& e) {
    CHECK(e.is_resource());
  }
}

TEST_CASE("cutting an arrow of the triangle") {
  auto a = cut_algebra(triangle_qp(), {2});
  CHECK(a.quiver().num_arrows() == 2);
  CHECK(a.dim() == 5);
  CHECK(gldim_le_two(a));
}

TEST_CASE("products follow path concatenation") {
  auto d = load("star_2.qp");
  auto a = build_algebra(*d.quiver, d.relations);
  CHECK(a.dim() == 4 + 4 + 1);
  const Quiver& q = a.quiver();
  SparseVec a1 = a.path_element(Path::of(q, {*q.find_arrow("a1")}));
  SparseVec b1 = a.path_element(Path::of(q, {*q.find_arrow("b1")}));
  SparseVec a2b2 = a.path_element(Path::of(q, {*q.find_arrow("a2"), *q.find_arrow("b2")}));
  SparseVec prod = a.multiply(a1, b1);
  prod.axpy(Scalar(1), a2b2);
  CHECK(prod.empty());
  CHECK(a.multiply(b1, a1).empty());
  CHECK(a.relation_element(d.relations[0]).empty());
  CHECK(check_associativity(a));
}

TEST_CASE("associativity on the larger fixtures") {
  for (const char* f : {"e8_tilted.qp", "d4_tilted.qp"}) {
    auto a = jacobian_algebra(load(f).qp());
    CHECK(check_associativity(a));
  }
}

TEST_CASE("projective resolutions of a linear quiver") {
  Quiver q;
  for (int v = 1; v <= 3; ++v) q.add_vertex(std::to_string(v));
  q.add_arrow("a", 0, 1);
  q.add_arrow("b", 1, 2);
  auto hereditary = build_algebra(q, {});
  CHECK(hereditary.dim() == 6);
  CHECK(gldim_le_two(hereditary));
  CHECK(center_dim(hereditary) == 1);
  auto res = projective_resolution_dims(hereditary, 0, 3);
  REQUIRE(res.syzygy_dims.size() >= 2);
  CHECK(res.syzygy_dims[1] == 0);
}

TEST_CASE("tilted fixtures have global dimension at most two") {
  for (const char* f : {"e8_tilted.qp", "d4_tilted.qp", "star_4.qp", "twin_monomial.qp"}) {
    auto d = load(f);
    CHECK(gldim_le_two(build_algebra(*d.quiver, d.relations)));
  }
}

TEST_CASE("split extension of the E8 extension") {
  auto b = std::make_shared<const FiniteDimAlgebra>(jacobian_algebra(load("e8_tilted.qp").qp()));
  auto ext = split_extension(b);
  CHECK(ext.c->dim() == 25);
  CHECK(ext.e_over_c.dim() == 16);
  CHECK(ext.e_over_b.dim() == 16);
  CHECK(ext.e_basis_in_b.size() == 16);
}

TEST_CASE("bimodule summands and their homs") {
  QP qp = load("e8_tilted.qp").qp();
  auto b = std::make_shared<const FiniteDimAlgebra>(jacobian_algebra(qp));
  auto ext = split_extension(b);
  auto parts = bimodule_summands_from_potential(ext, direct_decomposition(qp.potential), qp.quiver);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].dim() + parts[1].dim() == 16);
  CHECK(bimodule_hom(parts[0], parts[0]).dim == 1);
  CHECK(bimodule_hom(parts[1], parts[1]).dim == 1);
  CHECK(bimodule_hom(parts[0], parts[1]).dim == 0);
  CHECK(bimodule_hom(parts[1], parts[0]).dim == 0);
}

TEST_CASE("regular bimodule and generated sub-bimodules") {
  auto a = std::make_shared<const FiniteDimAlgebra>(jacobian_algebra(triangle_qp()));
  Bimodule reg = Bimodule::regular(a);
  CHECK(reg.dim() == 6);
  Bimodule whole = reg.generated_by({SparseVec::unit(a->idempotent(0)), SparseVec::unit(a->idempotent(1)),
                                     SparseVec::unit(a->idempotent(2))});
  CHECK(whole.dim() == 6);
  Bimodule rad;
  std::vector<SparseVec> arrows;
  for (int x = 0; x < 3; ++x) arrows.push_back(a->path_element(Path::of(a->quiver(), {x})));
  rad = reg.generated_by(arrows);
  CHECK(rad.dim() == 3);
}
