#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ppart/poly.hpp"

namespace ppart {

// Declared data of an irreducible variety X of codimension <= 2: defining
// polynomials are optional, the numeric invariants (dim, deg, delta1,
// delta2) are user-supplied metadata and only checked for mutual
// consistency, never computed from equations.
struct VarietySpec {
  int dimension = 0;  // ambient d
  int dim_x = 0;      // e, must be in {d-2, d-1, d}
  int deg_x = 1;
  int delta1 = 1;  // minimal degree of a hypersurface containing X
  int delta2 = 1;  // delta(X)

  std::vector<Polynomial> defining;  // may be empty

  // Sampler: either a stored sample list, or a parametrization given by d
  // polynomials in dim_x parameters.
  std::optional<PointSet> sample_points;
  std::vector<Polynomial> parametrization;

  int codimension() const { return dimension - dim_x; }

  // Seeded points of X(R). Stored samples are returned as-is (cycled when
  // more are requested); parametrizations are evaluated at seeded rational
  // parameter values.
  PointSet sample(std::size_t count, std::uint64_t seed) const;

  // Throws PrecondError when the declared invariants are inconsistent
  // (degree_inequalities failure, bad codimension, delta ordering).
  void validate() const;
};

// Structured text loader; see docs/formats in the README. Keys:
//   dimension, dim_x, deg_x, delta1, delta2  (integers)
//   defining      = <polynomial-list file>   (optional)
//   sampler_points = <point file>            (one of the two samplers)
//   sampler_param  = <polynomial-list file>
// Relative paths resolve against the spec file's directory.
VarietySpec load_variety_spec(const std::string& path);

}  // namespace ppart
