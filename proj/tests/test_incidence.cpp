#include <doctest.h>

#include <cmath>

#include "ppart/errors.hpp"
#include "ppart/incidence.hpp"
#include "ppart/report.hpp"
#include "ppart/rng.hpp"

using namespace ppart;

TEST_CASE("count_incidences on hand-built instances") {
  IncidenceInstance inst;
  inst.points.dimension = 2;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      inst.points.points.push_back(Point{{Rat(a), Rat(b)}});
  for (int axis = 0; axis < 2; ++axis)
    for (int a = 0; a <= 1; ++a)
      inst.surfaces.push_back(Polynomial::variable(2, axis) -
                              Polynomial::constant(2, Rat(a)));
  inst.k = 2;
  inst.degree_cap = 1;
  CHECK(count_incidences(inst) == 8);

  IncidenceInstance no_surfaces = inst;
  no_surfaces.surfaces.clear();
  CHECK(count_incidences(no_surfaces) == 0);
}

TEST_CASE("grid generator and the 3x3 example") {
  const auto inst = generate("grid_lines_2d", {{"q", 3}});
  CHECK(inst.points.points.size() == 9);
  CHECK(inst.surfaces.size() == 6);
  CHECK(count_incidences(inst) == 18);
}

TEST_CASE("st_bound worked values") {
  CHECK(st_bound(8, 8) == doctest::Approx(32.0));
  CHECK(st_bound(0, 17) == 17.0);
  CHECK(st_bound(1, 1) == 3.0);
}

TEST_CASE("incidence_bound worked values") {
  const double want = std::pow(100.0, 6.0 / 7.0) * std::pow(100.0, 4.0 / 7.0) +
                      200.0;
  CHECK(incidence_bound(100, 100, 4, 2) == want);
  CHECK(incidence_bound(0, 9, 4, 2) == 9.0);
  CHECK_THROWS_AS(incidence_bound(1, 1, 1, 1), PrecondError);
}

TEST_CASE("d=2 k=2 specialization equals st_bound") {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const long long m = static_cast<long long>(rng.below(100000));
    const long long n = static_cast<long long>(rng.below(100000));
    CHECK(incidence_bound(m, n, 2, 2) == st_bound(m, n));
  }
}

TEST_CASE("bound params are in range and decreasing") {
  // k = 1 degenerates (alpha3 = 1); the exponent ranges hold from k = 2 on.
  for (int k = 2; k <= 5; ++k) {
    const auto bp = BoundParams::make(4, k);
    CHECK(bp.alpha1 > 0);
    CHECK(bp.alpha3 < 1);
    CHECK(bp.alpha1 < bp.alpha2);
    CHECK(bp.alpha2 < bp.alpha3);  // levels go 1 -> 3 with growing alpha
    CHECK(bp.beta1 < bp.beta2);
  }
}

TEST_CASE("level_degrees formulas") {
  const auto bp = BoundParams::make(4, 2);
  {
    const auto ld = level_degrees(1e6, 1e6, 2, 1e6, 1.0, 1e6, 1.0);
    const double want =
        std::pow(1e6, bp.alpha1) / std::pow(1e6, bp.beta1);
    CHECK(ld.d_value == std::max(24.0, want));
  }
  {
    const auto ld = level_degrees(2, 1e9, 2, 1e9, 1.0, 4, 2.0);
    CHECK(ld.d_value == 24.0);
    CHECK(ld.d_clamped);
    const double want_e =
        std::max(24.0, std::pow(1e9, bp.alpha2) / std::pow(1e9, bp.beta2));
    CHECK(ld.e_value == want_e);
    CHECK(ld.f_value >= 24.0 * ld.e_value);
  }
  CHECK_THROWS_AS(level_degrees(0, 1, 2, 1, 1, 1, 1), PrecondError);
}

TEST_CASE("generators produce documented shapes") {
  {
    const auto inst = generate("random_lines_2d", {{"m", 20}, {"n", 10}}, 3);
    CHECK(inst.points.points.size() == 20);
    CHECK(inst.surfaces.size() == 10);
    CHECK(inst.degree_cap == 1);
    inst.validate();
  }
  {
    const auto inst =
        generate("unit_spheres_3d_embedded", {{"m", 15}, {"n", 8}}, 3);
    CHECK(inst.points.points.size() == 15);
    CHECK(inst.surfaces.size() == 8);
    CHECK(inst.degree_cap == 2);
    // Every sphere is anchored on at least one sample point.
    for (const auto& h : inst.surfaces) {
      int on = 0;
      for (const auto& p : inst.points.points)
        if (sign_at(h, p) == 0) ++on;
      CHECK(on >= 1);
    }
  }
  {
    const auto inst =
        generate("quadrics_4d", {{"m", 30}, {"n", 12}, {"k", 2}}, 9);
    CHECK(inst.points.points.size() == 30);
    CHECK(inst.surfaces.size() == 12);
    CHECK(count_incidences(inst) >= 12);  // each quadric is anchored
  }
  {
    const auto inst = generate("random_points_4d", {{"m", 10}}, 1);
    CHECK(inst.points.points.size() == 10);
    CHECK(inst.surfaces.empty());
    CHECK(count_incidences(inst) == 0);
  }
  CHECK_THROWS_AS(generate("no_such_family", {}), PrecondError);
  CHECK_THROWS_AS(generate("grid_lines_2d", {}), PrecondError);
}

TEST_CASE("generators are deterministic per seed") {
  const auto a = generate("quadrics_4d", {{"m", 12}, {"n", 5}}, 4);
  const auto b = generate("quadrics_4d", {{"m", 12}, {"n", 5}}, 4);
  CHECK(a.points.points == b.points.points);
  REQUIRE(a.surfaces.size() == b.surfaces.size());
  for (std::size_t i = 0; i < a.surfaces.size(); ++i)
    CHECK(a.surfaces[i] == b.surfaces[i]);
}

TEST_CASE("adding a surface never decreases the count") {
  auto inst = generate("random_lines_2d", {{"m", 25}, {"n", 6}}, 11);
  const long long before = count_incidences(inst);
  const auto more = generate("random_lines_2d", {{"m", 25}, {"n", 7}}, 11);
  CHECK(count_incidences(more) >= 0);
  inst.surfaces.push_back(
      Polynomial::variable(2, 0) -
      Polynomial::constant(2, inst.points.points[0].coordinates[0]));
  CHECK(count_incidences(inst) >= before);
}

TEST_CASE("run_level1 is reproducible and conserves points") {
  const auto inst = generate("quadrics_4d", {{"m", 40}, {"n", 10}}, 2);
  const auto r1 = run_level1(inst, 2);
  const auto r2 = run_level1(inst, 2);
  CHECK(r1.serialize() == r2.serialize());
  CHECK(r1.get("conservation_check") == "pass");
  CHECK(r1.get("budget_check") == "pass");
  CHECK(std::stoll(r1.get("max_cell")) <=
        std::stoll(r1.get("max_cell_budget")));

  IncidenceInstance flat = inst;
  flat.points.dimension = 2;
  CHECK_THROWS_AS(run_level1(flat, 0), PrecondError);
}

TEST_CASE("report round trip") {
  Report rep;
  rep.set("command", "demo");
  rep.set("m", 12LL);
  rep.set("ratio", 0.25);
  const auto text = rep.serialize();
  const auto back = Report::parse_string(text);
  CHECK(back == rep);
  CHECK(back.get("ratio") == format_double(0.25));
  CHECK_THROWS_AS(back.get("missing"), ParseError);
  CHECK_THROWS_AS(Report::parse_string("not a pair\n"), ParseError);
}
