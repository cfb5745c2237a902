#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "qpcohom/error.hpp"
#include "qpcohom/linalg.hpp"
#include "qpcohom/scalar.hpp"

using namespace qpc;

TEST_CASE("rational literals") {
  CHECK(Scalar::parse("3/6") == Scalar(1) / Scalar(2));
  CHECK(Scalar::parse("-4") == Scalar(-4));
  CHECK(Scalar::parse("0").is_zero());
  CHECK(Scalar::parse("7/7").is_one());
  CHECK_THROWS_AS(Scalar::parse("1.5"), InputError);
  CHECK_THROWS_AS(Scalar::parse("1/0"), InputError);
  CHECK_THROWS_AS(Scalar::parse("x"), InputError);
  CHECK_THROWS_AS(Scalar::parse(""), InputError);
  CHECK((Scalar(2) / Scalar(3)).str() == "2/3");
}

TEST_CASE("prime field arithmetic") {
  field::use_prime(7);
  CHECK(Scalar(10) == Scalar(3));
  CHECK((Scalar(1) / Scalar(3)) * Scalar(3) == Scalar(1));
  CHECK((Scalar(-1)) == Scalar(6));
  CHECK(field::describe() == "fp:7");
  CHECK_THROWS_AS(Scalar::parse("1/14"), InputError);
  field::use_rationals();
  CHECK(field::describe() == "q");
  CHECK_THROWS_AS(field::configure("fp:8"), InputError);
  CHECK_THROWS_AS(field::configure("real"), InputError);
  field::configure("fp:11");
  CHECK(field::prime() == 11);
  field::configure("q");
  CHECK(field::prime() == 0);
}

namespace {

std::vector<SparseVec> random_rows(std::mt19937& rng, int rows, int cols, std::vector<std::vector<oracle::u64>>& dense) {
  std::vector<SparseVec> out;
  dense.assign(rows, std::vector<oracle::u64>(cols, 0));
  for (int r = 0; r < rows; ++r) {
    std::map<int, Scalar> m;
    for (int c = 0; c < cols; ++c) {
      if (rng() % 3) continue;
      int v = static_cast<int>(rng() % 5) - 2;
      if (!v) continue;
      m[c] = Scalar(v);
      dense[r][c] = oracle::to_mod(Scalar(v));
    }
    out.push_back(SparseVec::from_map(m));
  }
  return out;
}

}  // namespace

TEST_CASE("rank agrees with modular elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    std::vector<std::vector<oracle::u64>> dense;
    auto sparse = random_rows(rng, rows, cols, dense);
    CHECK(rank_of(sparse) == oracle::rank_mod(dense));
  }
}

TEST_CASE("nullspace vectors are annihilated and have the right count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + rng() % 6, cols = 1 + rng() % 7;
    std::vector<std::vector<oracle::u64>> dense;
    auto sparse = random_rows(rng, rows, cols, dense);
    auto ns = nullspace(sparse, cols);
    CHECK(static_cast<int>(ns.size()) == cols - rank_of(sparse));
    for (const auto& x : ns)
      for (const auto& row : sparse) {
        Scalar dot;
        for (const auto& [c, v] : row) dot += v * x.at(c);
        CHECK(dot.is_zero());
      }
  }
}

TEST_CASE("echelon insertion and coordinates") {
  Echelon e;
  SparseVec a = SparseVec::from_map({{0, Scalar(1)}, {2, Scalar(2)}});
  SparseVec b = SparseVec::from_map({{1, Scalar(1)}, {2, Scalar(-1)}});
  CHECK_FALSE(e.insert(a).empty());
  CHECK_FALSE(e.insert(b).empty());
  SparseVec c = a;
  c.axpy(Scalar(3), b);
  CHECK(e.contains(c));
  CHECK(e.insert(c).empty());
  CHECK(e.rank() == 2);
  auto coords = e.coordinates(c);
  REQUIRE(coords.size() == 2);
  CHECK(coords[0] == Scalar(1));
  CHECK(coords[1] == Scalar(3));
}
