#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ppart/poly.hpp"
#include "ppart/report.hpp"

namespace ppart {

// Points plus hypersurfaces (as vanishing polynomials) with the declared
// tangency parameter k and degree cap. Every surface degree must be <= the
// cap; generators document why their family satisfies the transversality
// assumptions that k encodes.
struct IncidenceInstance {
  PointSet points;
  std::vector<Polynomial> surfaces;
  int k = 1;
  int degree_cap = 1;
  std::string family;  // generator name, empty for hand-built instances
  std::uint64_t seed = 0;

  void validate() const;  // dimension match, degree cap
};

struct BoundParams {
  int d = 2;
  int k = 1;
  double alpha1, beta1;  // k/(4k-1), 1/(4k-1)
  double alpha2, beta2;  // k/(3k-1), 1/(3k-1)
  double alpha3, beta3;  // k/(2k-1), 1/(2k-1)

  static BoundParams make(int d, int k);
};

// Exact brute-force pair count of (p, h) with h(p) = 0.
long long count_incidences(const IncidenceInstance& inst);

// m^(2/3) n^(2/3) + m + n with unit constant.
double st_bound(long long m, long long n);

// m^(1-(k-1)/(dk-1)) n^(1-(d-1)/(dk-1)) + m + n with unit constant. The
// exponents are evaluated as single integer-ratio divisions so the d=2, k=2
// case coincides bit for bit with st_bound.
double incidence_bound(long long m, long long n, int d, int k);

struct LevelDegrees {
  double d_value = 0;  // first-level degree D
  bool d_clamped = false;  // the max picked 24
  double e_value = 0;  // second-level degree E_i
  double f_value = 0;  // third-level degree F_ij
};

// Degree choices for the three partitioning levels:
//   D    = max(24, m^a1 / n^b1)
//   E_i  = max(24 D_i, (l_i / D_i)^a2 / n^b2)
//   F_ij = max(24 E_i, (e_ij / delta_ij)^a3 / n^b3)
// All inputs must be positive.
LevelDegrees level_degrees(double m, double n, int k, double l_i, double d_i,
                           double e_ij, double delta_ij);

// Seeded instance generators. Families:
//   grid_lines_2d       q                -> q^2 grid points, 2q axis lines
//   random_lines_2d     m, n             -> random points and lines
//   unit_spheres_3d_embedded  m, n       -> unit spheres anchored on points
//   quadrics_4d         m, n, k          -> quadrics pushed through points
//   random_points_4d    m, n             -> unanchored points and quadrics
IncidenceInstance generate(const std::string& family,
                           const std::map<std::string, long long>& params,
                           std::uint64_t seed = 0);

// First-level pipeline on a d = 4 instance: picks D, partitions the points
// at degree floor(D), and tabulates per-cell sizes and incidence counts
// together with the bound ratio. Deterministic for a fixed seed.
Report run_level1(const IncidenceInstance& inst, std::uint64_t seed = 0);

}  // namespace ppart
