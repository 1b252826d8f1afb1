#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ppart/poly.hpp"
#include "ppart/rational.hpp"
#include "ppart/variety.hpp"

namespace ppart {

enum class Regime { full, hypersurface, codim2 };

struct ScheduleEntry {
  int stage = 0;       // i
  Int target = 1;      // 2^i sets to bisect at this stage
  int degree = 1;      // stage degree
  Regime regime = Regime::full;
  // Set when the raw degree formula landed outside the regime's admissible
  // interval and had to be pushed back in.
  bool clamped = false;
};

// Greedy stage list: each stage uses the smallest degree whose lifted
// capacity covers the target set count, truncated so the degrees sum to at
// most `ell`. May be empty only when ell < 1 never happens (ell >= 1 is a
// precondition and degree-1 capacity is d >= 1).
std::vector<ScheduleEntry> schedule_full_space(int d, int ell);

struct VarietySchedule {
  Rat eta;          // ell/(2d) - 2*delta2, exact
  double s0 = 0;    // log2(c1 * delta1^d)
  double s1 = 0;    // log2(c1 * delta1 * delta2^(d-1))
  int t = 0;        // floor(log2(c1 * delta1 * delta2 * eta^(d-2)))
  std::vector<ScheduleEntry> entries;  // empty when t < 0
  bool truncated = false;  // defensive: degree sum would have exceeded ell
};

// Three-regime stage schedule for partitioning on a variety with invariants
// (delta1, delta2) in ambient dimension d. Requires ell >= 6*d*delta2,
// 1 <= delta1 <= delta2, 0 < c1 <= 2^-d, and d >= 3 (the third regime's
// degree formula uses a (d-2)-th root).
VarietySchedule schedule_variety(int d, int delta1, int delta2, int ell,
                                 const Rat& c1);

// Strict-sign pattern over the stage polynomial list, one entry in {-1,+1}
// per polynomial.
struct SignVector {
  std::vector<int> pattern;
  bool operator<(const SignVector& o) const { return pattern < o.pattern; }
  bool operator==(const SignVector& o) const { return pattern == o.pattern; }
};

struct PartitionResult {
  std::vector<Polynomial> stage_polynomials;
  int product_degree = 0;  // sum of actual stage degrees
  std::map<SignVector, PointSet> cells;
  PointSet residue;  // points with some stage polynomial exactly zero
  std::size_t max_cell = 0;
  int budget = 0;          // the requested ell
  int realized_stages = 0;  // number of emitted stage polynomials
  bool truncated = false;   // search gave up before the schedule finished
  bool kernel_fired = false;
  // Kernel branch only: the kernel polynomial fails to vanish on at least
  // one variety sample (it cuts the variety properly as far as sampling
  // can tell). True whenever the branch did not fire.
  bool dim_check_pass = true;
};

// Iterated ham-sandwich partitioning in R^d with total degree budget ell.
// Cells of size <= 1 ride along but are excluded from bisection. A stage
// whose lifted capacity cannot host the active sets falls back to a cut
// vanishing on every active point, pushing them into the residue.
PartitionResult partition(const PointSet& p, int ell, std::uint64_t seed = 0);

// Variety-aware driver: runs schedule_variety, verifies the lifted capacity
// of the active points against each stage's target, and on deficiency
// returns immediately with a polynomial vanishing on all of P and the whole
// input in the residue (kernel branch). Every point of P must lie on the
// defining polynomials of X. An empty schedule falls back to a single
// bisection stage at degree delta2.
PartitionResult partition_on_variety(const PointSet& p, const VarietySpec& x,
                                     int ell, std::uint64_t seed = 0);

// Splits P by the strict signs of `polys`; points with any zero sign land
// in the residue. Only nonempty cells appear in the map.
std::pair<std::map<SignVector, PointSet>, PointSet> classify(
    const PointSet& p, std::span<const Polynomial> polys);

}  // namespace ppart
