#pragma once

#include <span>
#include <string>
#include <vector>

#include "ppart/rational.hpp"

namespace ppart {

struct VarietySpec;

// Closed-form Hilbert-function bound calculators. All integer arguments are
// taken as plain ints (degrees and dimensions at desk scale); results use
// arbitrary precision so large exponents never overflow.

// Upper bound degX * binomial(ell + e, e), valid for ell >= 0.
Int chardin_upper(int deg_x, int e, int ell);

// Lower bound degX * binomial(ell - (d-e)(delta-1) + e, e), valid only for
// ell >= (d-e)(delta-1) + 1; throws PrecondError below the threshold.
Int chardin_philippon_lower(int deg_x, int delta, int d, int e, int ell);

// Piecewise lower bound for codimension-2 ideals; the constant c is
// caller-supplied (the underlying c(d) is not known numerically).
//   c (ell+1)^d + 1                    for 1 <= ell <= delta1 - 1
//   c delta1 (ell+1)^(d-1) + 1        for delta1 <= ell <= delta2 - 1
//   c delta1 delta2 (ell+1)^(d-2) + 1 for ell >= delta2
Rat prop2_lower(int d, int delta1, int delta2, int ell, const Rat& c);

// Guaranteed bound d(d-1)degX on deg(f1)deg(f2) for a coprime pair cutting
// out a codimension-2 variety.
Int coprime_pair_bound(int d, int deg_x);

// Connected-component bound prod deg(f_i) * deg(g)^(d-e), with the
// leading constant normalized to 1. degs_f must be sorted
// nondecreasing and deg_g >= max(degs_f).
Int betti_bound(std::span<const int> degs_f, int deg_g, int d);

struct DegreeCheck {
  std::string name;
  std::string detail;
  bool pass = false;
};

struct DegreeCheckReport {
  std::vector<DegreeCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Consistency checks between the declared invariants of a variety spec:
// delta1 <= delta2, delta2 <= deg <= delta2^(d-e), and deg <= delta1*delta2
// in the codimension-2 case. Used as load-time validation.
DegreeCheckReport degree_inequalities(const VarietySpec& spec);

}  // namespace ppart
