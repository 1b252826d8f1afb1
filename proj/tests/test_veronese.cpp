#include <doctest.h>

#include <vector>

#include "ppart/errors.hpp"
#include "ppart/poly.hpp"
#include "ppart/rng.hpp"
#include "ppart/veronese.hpp"

using namespace ppart;

namespace {

// Independent dense rational elimination, used only to cross-check the
// fraction-free accumulator.
int naive_rank(std::vector<std::vector<Rat>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows.size() && lead < cols; ++r) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][lead] == 0) ++pivot;
    if (pivot == rows.size()) {
      ++lead;
      --r;
      continue;
    }
    std::swap(rows[r], rows[pivot]);
    const Rat inv = Rat(1) / rows[r][lead];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][lead] != 0) {
        const Rat f = rows[i][lead];
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
      }
    ++rank;
    ++lead;
  }
  return rank;
}

int oracle_hilbert(const PointSet& e, int ell) {
  VeroneseBasis basis(e.dimension, ell);
  std::vector<std::vector<Rat>> rows;
  for (const auto& p : e.points) {
    std::vector<Rat> row{Rat(1)};
    for (const auto& v : veronese_lift(p, basis)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return naive_rank(std::move(rows));
}

PointSet random_points(Rng& rng, int dim, std::size_t count) {
  PointSet ps;
  ps.dimension = dim;
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    for (int j = 0; j < dim; ++j) p.coordinates.push_back(rng.rat(-5, 5, 3));
    ps.points.push_back(std::move(p));
  }
  return ps;
}

}  // namespace

TEST_CASE("binomial with out-of-range convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, 0) == 1);
  CHECK(binomial(-1, 0) == 0);
}

TEST_CASE("veronese basis order and lift") {
  VeroneseBasis basis(2, 2);
  REQUIRE(basis.size() == 5);
  const auto lifted = veronese_lift(Point{{Rat(2), Rat(3)}}, basis);
  CHECK(lifted == std::vector<Rat>{Rat(2), Rat(3), Rat(4), Rat(6), Rat(9)});

  CHECK(veronese_lift(Point{{Rat(2)}}, 3) ==
        std::vector<Rat>{Rat(2), Rat(4), Rat(8)});

  const auto zeros = veronese_lift(Point{{Rat(0), Rat(0), Rat(0)}}, 2);
  for (const auto& v : zeros) CHECK(v == 0);
}

TEST_CASE("hilbert_from_points basics") {
  PointSet tri;
  tri.dimension = 2;
  tri.points = {Point{{Rat(0), Rat(0)}}, Point{{Rat(1), Rat(0)}},
                Point{{Rat(0), Rat(1)}}};
  CHECK(hilbert_from_points(tri, 1).value == 3);

  PointSet single;
  single.dimension = 3;
  single.points = {Point{{Rat(2), Rat(-1), Rat(5)}}};
  for (int ell = 1; ell <= 3; ++ell)
    CHECK(hilbert_from_points(single, ell).value == 1);

  PointSet empty;
  empty.dimension = 2;
  CHECK_THROWS_AS(hilbert_from_points(empty, 1), PrecondError);
}

TEST_CASE("parabola samples have the conic Hilbert value") {
  Rng rng(3);
  PointSet ps;
  ps.dimension = 2;
  while (ps.points.size() < 20) {
    const Rat t = rng.rat(-9, 9, 4);
    bool seen = false;
    for (const auto& p : ps.points) seen = seen || p.coordinates[0] == t;
    if (seen) continue;
    ps.points.push_back(Point{{t, t * t}});
  }
  const auto h = hilbert_from_points(ps, 2);
  CHECK(h.value == 5);
  CHECK(h.saturated);
}

TEST_CASE("hilbert estimate monotonicity and ceiling") {
  Rng rng(17);
  const auto ps = random_points(rng, 2, 9);
  int prev = 0;
  for (int ell = 1; ell <= 4; ++ell) {
    const auto h = hilbert_from_points(ps, ell);
    CHECK(h.value >= prev);
    CHECK(Int(h.value) <= binomial(Int(ell + 2), Int(2)));
    CHECK(h.value <= 9);
    prev = h.value;
  }
  auto bigger = ps;
  const auto extra = random_points(rng, 2, 4);
  for (const auto& p : extra.points) bigger.points.push_back(p);
  CHECK(hilbert_from_points(bigger, 3).value >=
        hilbert_from_points(ps, 3).value);
}

TEST_CASE("rank agrees with the naive oracle") {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 1 + static_cast<int>(rng.below(3));
    const int ell = 1 + static_cast<int>(rng.below(4));
    const auto ps =
        random_points(rng, dim, 1 + rng.below(12));
    CHECK(hilbert_from_points(ps, ell).value == oracle_hilbert(ps, ell));
  }
}

TEST_CASE("hilbert_value_at_least matches the full computation") {
  Rng rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = 1 + static_cast<int>(rng.below(3));
    const int ell = 1 + static_cast<int>(rng.below(3));
    const auto ps = random_points(rng, dim, 1 + rng.below(10));
    const int value = hilbert_from_points(ps, ell).value;
    for (int target = 1; target <= value + 2; ++target)
      CHECK(hilbert_value_at_least(ps, ell, target) == (target <= value));
  }
}

TEST_CASE("affine kernel functional vanishes on the data") {
  PointSet line;
  line.dimension = 2;
  for (int i = 0; i < 4; ++i)
    line.points.push_back(Point{{Rat(i), Rat(2 * i + 1)}});
  VeroneseBasis basis(2, 1);
  const auto f = affine_kernel_functional(line, basis);
  REQUIRE(f.has_value());
  const auto g = functional_to_polynomial(*f, basis);
  CHECK(!g.is_zero());
  for (const auto& p : line.points) CHECK(sign_at(g, p) == 0);

  // Three affinely independent points span at degree 1: no kernel.
  PointSet tri;
  tri.dimension = 2;
  tri.points = {Point{{Rat(0), Rat(0)}}, Point{{Rat(1), Rat(0)}},
                Point{{Rat(0), Rat(1)}}};
  CHECK(!affine_kernel_functional(tri, basis).has_value());
}

TEST_CASE("functional_to_polynomial pairs with the lift") {
  Rng rng(31);
  VeroneseBasis basis(3, 2);
  std::vector<Rat> coeffs;
  for (std::size_t i = 0; i <= basis.size(); ++i)
    coeffs.push_back(rng.rat(-4, 4, 3));
  const auto g = functional_to_polynomial(coeffs, basis);
  for (int trial = 0; trial < 5; ++trial) {
    Point p;
    for (int j = 0; j < 3; ++j) p.coordinates.push_back(rng.rat(-6, 6, 5));
    Rat expect = coeffs[0];
    const auto lifted = veronese_lift(p, basis);
    for (std::size_t i = 0; i < lifted.size(); ++i)
      expect += coeffs[i + 1] * lifted[i];
    CHECK(evaluate(g, p) == expect);
  }
}
