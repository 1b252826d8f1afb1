#include <doctest.h>

#include <vector>

#include "ppart/errors.hpp"
#include "ppart/partition.hpp"
#include "ppart/rng.hpp"

using namespace ppart;

namespace {

PointSet seeded_points(std::uint64_t seed, int dim, std::size_t count,
                       long long range) {
  Rng rng(seed);
  PointSet ps;
  ps.dimension = dim;
  while (ps.points.size() < count) {
    Point p;
    for (int j = 0; j < dim; ++j)
      p.coordinates.push_back(Rat(Int(rng.range(-range, range))));
    bool dup = false;
    for (const auto& q : ps.points) dup = dup || q == p;
    if (!dup) ps.points.push_back(std::move(p));
  }
  return ps;
}

void check_conservation(const PointSet& input, const PartitionResult& res) {
  std::size_t covered = res.residue.points.size();
  for (const auto& [sv, cell] : res.cells) {
    covered += cell.points.size();
    CHECK(!cell.points.empty());
    CHECK(sv.pattern.size() == res.stage_polynomials.size());
  }
  CHECK(covered == input.points.size());
}

}  // namespace

TEST_CASE("schedule_full_space worked values") {
  {
    const auto s = schedule_full_space(2, 1);
    REQUIRE(s.size() == 1);
    CHECK(s[0].degree == 1);
  }
  {
    const auto s = schedule_full_space(2, 4);
    REQUIRE(s.size() == 3);
    CHECK(s[0].degree == 1);
    CHECK(s[1].degree == 1);
    CHECK(s[2].degree == 2);
    CHECK(s[2].target == 4);
  }
  {
    const auto s = schedule_full_space(1, 3);
    REQUIRE(s.size() == 2);
    CHECK(s[0].degree == 1);
    CHECK(s[1].degree == 2);
  }
  CHECK_THROWS_AS(schedule_full_space(2, 0), PrecondError);
}

TEST_CASE("schedule_variety worked values") {
  const Rat c1(1, 16);
  {
    const auto vs = schedule_variety(4, 1, 1, 24, c1);
    CHECK(vs.eta == 1);
    CHECK(vs.s0 == -4.0);
    CHECK(vs.s1 == -4.0);
    CHECK(vs.t == -4);
    CHECK(vs.entries.empty());
  }
  {
    const auto vs = schedule_variety(4, 1, 1, 96, c1);
    CHECK(vs.eta == 10);
    CHECK(vs.t == 2);
    REQUIRE(vs.entries.size() == 3);
    CHECK(vs.entries[0].degree == 4);
    CHECK(vs.entries[1].degree == 5);
    CHECK(vs.entries[2].degree == 8);
    for (const auto& e : vs.entries) {
      CHECK(e.regime == Regime::codim2);
      CHECK(!e.clamped);
    }
  }
  {
    const auto vs = schedule_variety(4, 2, 3, 100, c1);
    CHECK(vs.eta == Rat(13, 2));
    CHECK(vs.t == 3);
    REQUIRE(vs.entries.size() == 4);
    CHECK(vs.entries[0].regime == Regime::full);
    CHECK(vs.entries[0].clamped);  // raw degree 2 exceeds delta1 - 1 = 1
    CHECK(vs.entries[0].degree == 1);
    CHECK(vs.entries[1].regime == Regime::hypersurface);
    CHECK(vs.entries[1].degree == 2);
    CHECK(vs.entries[2].regime == Regime::codim2);
    CHECK(vs.entries[2].degree == 3);
    CHECK(vs.entries[3].degree == 4);
  }
  CHECK_THROWS_AS(schedule_variety(4, 1, 1, 23, c1), PrecondError);
  CHECK_THROWS_AS(schedule_variety(4, 2, 1, 96, c1), PrecondError);
  CHECK_THROWS_AS(schedule_variety(4, 1, 1, 96, Rat(1, 2)), PrecondError);
}

TEST_CASE("partition of two points") {
  PointSet ps;
  ps.dimension = 2;
  ps.points = {Point{{Rat(0), Rat(0)}}, Point{{Rat(1), Rat(0)}}};
  const auto res = partition(ps, 1);
  check_conservation(ps, res);
  CHECK(res.max_cell <= 1);
  CHECK(res.product_degree <= 1);
}

TEST_CASE("partition of 16 seeded points at ell 4") {
  const auto ps = seeded_points(4, 2, 16, 40);
  const auto res = partition(ps, 4, 4);
  check_conservation(ps, res);
  CHECK(res.realized_stages <= 3);
  const std::size_t budget =
      (16 + (std::size_t{1} << res.realized_stages) - 1) >>
      res.realized_stages;
  CHECK(res.max_cell <= budget);
  CHECK(res.product_degree <= 4);
}

TEST_CASE("partition of repeated points goes to the residue") {
  PointSet ps;
  ps.dimension = 2;
  for (int i = 0; i < 7; ++i)
    ps.points.push_back(Point{{Rat(3), Rat(-2)}});
  const auto res = partition(ps, 3);
  check_conservation(ps, res);
  CHECK(res.kernel_fired);
  CHECK(res.residue.points.size() == 7);
  CHECK(res.cells.empty());
}

TEST_CASE("partition nesting via reclassification") {
  const auto ps = seeded_points(21, 2, 120, 200);
  const auto res = partition(ps, 6, 21);
  check_conservation(ps, res);
  auto [cells2, residue2] = classify(ps, res.stage_polynomials);
  CHECK(residue2.points.size() == res.residue.points.size());
  REQUIRE(cells2.size() == res.cells.size());
  for (const auto& [sv, cell] : res.cells) {
    auto it = cells2.find(sv);
    REQUIRE(it != cells2.end());
    CHECK(it->second.points.size() == cell.points.size());
  }
}

TEST_CASE("partition_on_variety falls back to one stage on empty schedule") {
  VarietySpec x;
  x.dimension = 3;
  x.dim_x = 2;
  x.deg_x = 1;
  x.delta1 = 1;
  x.delta2 = 1;
  x.defining.push_back(Polynomial::variable(3, 2));
  x.parametrization.push_back(Polynomial::variable(2, 0));
  x.parametrization.push_back(Polynomial::variable(2, 1));
  x.parametrization.push_back(Polynomial(2));

  Rng rng(13);
  PointSet ps;
  ps.dimension = 3;
  for (int i = 0; i < 12; ++i)
    ps.points.push_back(
        Point{{Rat(Int(rng.range(-40, 40))), Rat(Int(rng.range(-40, 40))),
               Rat(0)}});
  const auto res = partition_on_variety(ps, x, 18, 13);
  check_conservation(ps, res);
  CHECK(res.realized_stages == 1);
  CHECK(res.product_degree <= 18);
}

TEST_CASE("partition_on_variety rejects off-variety points") {
  VarietySpec x;
  x.dimension = 3;
  x.dim_x = 2;
  x.deg_x = 1;
  x.delta1 = 1;
  x.delta2 = 1;
  x.defining.push_back(Polynomial::variable(3, 2));
  PointSet ps;
  ps.dimension = 3;
  ps.points.push_back(Point{{Rat(1), Rat(1), Rat(1)}});
  CHECK_THROWS_AS(partition_on_variety(ps, x, 18), PrecondError);
}

TEST_CASE("kernel branch on collinear points") {
  VarietySpec x;
  x.dimension = 4;
  x.dim_x = 2;
  x.deg_x = 9;
  x.delta1 = 3;
  x.delta2 = 3;
  PointSet line;
  line.dimension = 4;
  for (int i = 0; i < 5; ++i)
    line.points.push_back(Point{{Rat(i), Rat(2 * i), Rat(0), Rat(0)}});
  const auto res = partition_on_variety(line, x, 72);
  CHECK(res.kernel_fired);
  CHECK(res.residue.points.size() == 5);
  REQUIRE(!res.stage_polynomials.empty());
  const auto& g = res.stage_polynomials.back();
  CHECK(!g.is_zero());
  for (const auto& p : line.points) CHECK(sign_at(g, p) == 0);
}

TEST_CASE("classify examples") {
  PointSet ps;
  ps.dimension = 2;
  ps.points = {Point{{Rat(1), Rat(2)}}, Point{{Rat(1, 2), Rat(0)}}};
  std::vector<Polynomial> polys{
      Polynomial::variable(2, 0) - Polynomial::constant(2, Rat(1, 2)),
      Polynomial::variable(2, 1) - Polynomial::constant(2, Rat(3))};
  auto [cells, residue] = classify(ps, polys);
  REQUIRE(cells.size() == 1);
  const auto& [sv, cell] = *cells.begin();
  CHECK(sv.pattern == std::vector<int>{1, -1});
  CHECK(cell.points.size() == 1);
  CHECK(residue.points.size() == 1);  // second point lies on the first line

  auto [cells2, residue2] = classify(ps, {});
  REQUIRE(cells2.size() == 1);
  CHECK(cells2.begin()->second.points.size() == 2);
  CHECK(residue2.points.empty());
}
