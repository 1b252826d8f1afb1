#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppart/rational.hpp"

namespace ppart {

// Exponent vector of one monomial x^a. Length equals the ambient dimension.
struct Monomial {
  std::vector<int> exponents;

  int total_degree() const {
    int s = 0;
    for (int e : exponents) s += e;
    return s;
  }
  bool operator==(const Monomial& o) const { return exponents == o.exponents; }
};

// Graded lexicographic order: lower total degree first, then lexicographic
// with x1 ranked highest. This is the fixed monomial order used for every
// canonical serialization and basis enumeration in the library.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Within a degree: larger leading exponents come first.
    return a.exponents > b.exponents;
  }
};

// Sparse multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored; the zero polynomial has an empty term map
// and no degree (optional sentinel, never an integer stand-in).
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexLess>;

  explicit Polynomial(int dimension) : dim_(dimension) {}
  Polynomial(int dimension, TermMap terms);

  static Polynomial constant(int dimension, const Rat& c);
  // The variable x_{index+1} as a polynomial.
  static Polynomial variable(int dimension, int index);

  int dimension() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<int> degree() const;

  void add_term(const Monomial& m, const Rat& coeff);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

 private:
  int dim_;
  TermMap terms_;
};

struct Point {
  std::vector<Rat> coordinates;
  int dimension() const { return static_cast<int>(coordinates.size()); }
  bool operator==(const Point& o) const { return coordinates == o.coordinates; }
};

struct PointSet {
  int dimension = 0;
  std::vector<Point> points;
  std::vector<std::string> labels;  // optional, empty or per-point

  std::size_t size() const { return points.size(); }
  bool has_duplicates() const;
};

// Exact value of f at p. Throws PrecondError on dimension mismatch.
Rat evaluate(const Polynomial& f, const Point& p);

// Exact sign of f(p) in {-1, 0, +1}.
int sign_at(const Polynomial& f, const Point& p);

// Exact product; the empty product is the constant 1 (dimension taken from
// `dimension` when the list is empty).
Polynomial product(std::span<const Polynomial> fs, int dimension);

// Text format, one term per line: "<coeff> <e1> ... <ed>" with coeff given
// as p/q, integer, or decimal. Lines starting with '#' are ignored.
Polynomial parse_polynomial(std::istream& in, int dimension = -1);
Polynomial parse_polynomial_string(const std::string& text, int dimension = -1);
std::string serialize_polynomial(const Polynomial& f);

// Several polynomials in one stream, separated by blank lines.
std::vector<Polynomial> parse_polynomial_list(std::istream& in,
                                              int dimension = -1);
std::string serialize_polynomial_list(std::span<const Polynomial> fs);

// Point file: one point per line, d whitespace-separated rationals or
// decimals (decimals are converted exactly).
PointSet parse_points(std::istream& in, int dimension = -1);
std::string serialize_points(const PointSet& ps);

PointSet load_points_file(const std::string& path);
Polynomial load_polynomial_file(const std::string& path, int dimension = -1);
std::vector<Polynomial> load_polynomial_list_file(const std::string& path,
                                                  int dimension = -1);

}  // namespace ppart
