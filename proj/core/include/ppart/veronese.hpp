#pragma once

#include <optional>
#include <vector>

#include "ppart/poly.hpp"
#include "ppart/rational.hpp"

namespace ppart {

// Binomial coefficient with the convention that out-of-range indices give 0.
Int binomial(const Int& n, const Int& i);

// All exponent vectors a with 1 <= |a| <= degree, in graded-lex order.
// The list has binomial(degree + dimension, dimension) - 1 entries.
struct VeroneseBasis {
  int dimension;
  int degree;
  std::vector<Monomial> monomials;

  VeroneseBasis(int dimension, int degree);
  std::size_t size() const { return monomials.size(); }
};

// The monomial vector (p^a)_a of p in basis order.
std::vector<Rat> veronese_lift(const Point& p, const VeroneseBasis& basis);
std::vector<Rat> veronese_lift(const Point& p, int degree);

struct HilbertEstimate {
  int degree = 0;
  int value = 0;        // 1 + affine dimension of the lifted image
  int rank_source = 0;  // number of sample points consumed
  bool saturated = false;
};

// Hilbert function of the ideal of E at `degree`, read off point data: the
// rank of the matrix with rows (1, v(p)) over the rationals, computed by
// fraction-free elimination. `saturated` is set when the rank either hits
// its combinatorial ceiling or survives at least two further rows unchanged.
HilbertEstimate hilbert_from_points(const PointSet& e, int degree);

// True iff hilbert_from_points(e, degree).value >= target. Uses a modular
// rank as a fast certificate (a full-rank minor mod p proves rank over Q);
// only the failing direction falls back to exact elimination.
bool hilbert_value_at_least(const PointSet& e, int degree, int target);

// A nonzero affine functional c with c . (1, v(p)) = 0 for every p in E,
// i.e. a polynomial of degree <= basis.degree vanishing on all of E.
// Returns nullopt when the lifted rows span everything (no such functional).
std::optional<std::vector<Rat>> affine_kernel_functional(
    const PointSet& e, const VeroneseBasis& basis);

// Converts affine-functional coefficients (constant first, then basis
// order) into the corresponding polynomial.
Polynomial functional_to_polynomial(const std::vector<Rat>& coeffs,
                                    const VeroneseBasis& basis);

namespace detail {

// Incremental exact rank accumulator over integer rows (gcd-normalized
// fraction-free elimination). Row order does not affect the final rank.
class ExactRankAccumulator {
 public:
  explicit ExactRankAccumulator(std::size_t cols) : cols_(cols) {}
  // Returns true when the row increased the rank.
  bool add_row(std::vector<Int> row);
  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  std::size_t cols_;
  struct PivotRow {
    std::size_t col;
    std::vector<Int> row;
  };
  std::vector<PivotRow> pivots_;
};

std::vector<Int> clear_denominators(const std::vector<Rat>& row);

}  // namespace detail

}  // namespace ppart
