#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ppart/poly.hpp"
#include "ppart/rational.hpp"

namespace ppart {

struct SmoothingSchedule {
  double initial_scale = 1.0;  // multiple of the data spread
  double decay = 0.7;
  double floor = 1e-4;
};

// r finite sets of lifted vectors in R^N, to be bisected by one affine
// hyperplane. Requires r <= N.
struct BisectionProblem {
  int lifted_dimension = 0;
  std::vector<std::vector<std::vector<Rat>>> sets;
  int max_iterations = 4000;
  std::uint64_t seed = 0;
  SmoothingSchedule smoothing;
};

// An affine hyperplane c0 + c1 y1 + ... + cN yN = 0 together with exact
// per-set sign counts. Validity contract: for every set Q, at most
// floor(|Q|/2) strictly positive and at most floor(|Q|/2) strictly negative
// points; points exactly on the cut absorb the remainder.
struct Cut {
  std::vector<Rat> coefficients;  // length N+1, constant term first
  struct Counts {
    int negative = 0;
    int zero = 0;
    int positive = 0;
  };
  std::vector<Counts> counts;  // one per set

  bool valid(std::span<const std::size_t> set_sizes) const;
};

// Finds a simultaneous bisecting hyperplane by smoothed sigmoid descent in
// a seeded random rational projection to R^r, snapping the incumbent to an
// exact rational hyperplane through one point per set and re-verifying with
// exact arithmetic. Throws SearchExhausted when all restarts fail.
Cut bisect(const BisectionProblem& problem);

// Veronese-lifts the point sets at `degree`, checks that the lifted affine
// hull can accommodate them (CapacityTooSmall otherwise), and bisects.
// Returns the cut polynomial of degree <= `degree` together with the Cut.
std::pair<Polynomial, Cut> lift_and_bisect(std::span<const PointSet> sets,
                                           int degree,
                                           std::uint64_t seed = 0);

}  // namespace ppart
