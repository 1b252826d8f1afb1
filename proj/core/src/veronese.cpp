#include "ppart/veronese.hpp"

#include <algorithm>
#include <cstdint>

#include "ppart/errors.hpp"

namespace ppart {

Int binomial(const Int& n, const Int& i) {
  if (i < 0 || i > n || n < 0) return 0;
  Int k = i;
  if (n - k < k) k = n - k;
  Int r = 1;
  for (Int j = 1; j <= k; ++j) {
    r *= n - k + j;
    r /= j;
  }
  return r;
}

namespace {

void enumerate_degree(int dimension, int remaining, std::vector<int>& acc,
                      std::vector<Monomial>& out) {
  if (static_cast<int>(acc.size()) == dimension - 1) {
    acc.push_back(remaining);
    out.push_back(Monomial{acc});
    acc.pop_back();
    return;
  }
  // Larger exponent on the earlier variable first (grlex within a degree).
  for (int e = remaining; e >= 0; --e) {
    acc.push_back(e);
    enumerate_degree(dimension, remaining - e, acc, out);
    acc.pop_back();
  }
}

}  // namespace

VeroneseBasis::VeroneseBasis(int dimension, int degree)
    : dimension(dimension), degree(degree) {
  if (dimension < 1 || degree < 1)
    throw PrecondError("VeroneseBasis needs dimension >= 1 and degree >= 1");
  std::vector<int> acc;
  for (int k = 1; k <= degree; ++k)
    enumerate_degree(dimension, k, acc, monomials);
}

std::vector<Rat> veronese_lift(const Point& p, const VeroneseBasis& basis) {
  if (p.dimension() != basis.dimension)
    throw PrecondError("veronese_lift: dimension mismatch");
  const int d = basis.dimension;
  std::vector<std::vector<Rat>> powers(d);
  for (int i = 0; i < d; ++i) {
    powers[i].resize(basis.degree + 1);
    powers[i][0] = Rat(1);
    for (int e = 1; e <= basis.degree; ++e)
      powers[i][e] = powers[i][e - 1] * p.coordinates[i];
  }
  std::vector<Rat> out;
  out.reserve(basis.size());
  for (const auto& m : basis.monomials) {
    Rat v(1);
    for (int i = 0; i < d; ++i)
      if (m.exponents[i] > 0) v *= powers[i][m.exponents[i]];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Rat> veronese_lift(const Point& p, int degree) {
  return veronese_lift(p, VeroneseBasis(p.dimension(), degree));
}

namespace detail {

std::vector<Int> clear_denominators(const std::vector<Rat>& row) {
  Int lcm = 1;
  for (const auto& x : row) {
    Int d = denominator(x);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<Int> out;
  out.reserve(row.size());
  for (const auto& x : row)
    out.push_back(numerator(x) * (lcm / denominator(x)));
  return out;
}

bool ExactRankAccumulator::add_row(std::vector<Int> row) {
  if (row.size() != cols_) throw PrecondError("rank: row length mismatch");
  for (const auto& pv : pivots_) {
    const Int& lead = row[pv.col];
    if (lead == 0) continue;
    const Int& plead = pv.row[pv.col];
    Int g = gcd(lead, plead);
    Int a = plead / g, b = lead / g;
    for (std::size_t j = 0; j < cols_; ++j)
      row[j] = row[j] * a - pv.row[j] * b;
  }
  std::size_t col = cols_;
  Int g = 0;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (row[j] != 0) {
      if (col == cols_) col = j;
      g = gcd(g, row[j]);
    }
  }
  if (col == cols_) return false;
  if (g > 1)
    for (auto& x : row) x /= g;
  pivots_.push_back(PivotRow{col, std::move(row)});
  return true;
}

namespace {

// Modular rank accumulator over F_p with p = 2^61 - 1.
constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_of(const Int& x) {
  Int m = x % Int(kPrime);
  if (m < 0) m += Int(kPrime);
  return m.convert_to<std::uint64_t>();
}

class ModularRankAccumulator {
 public:
  explicit ModularRankAccumulator(std::size_t cols) : cols_(cols) {}

  // Returns false when a denominator vanishes mod p (caller must fall back
  // to the exact path).
  bool add_row(const std::vector<Rat>& rats, bool* grew) {
    std::vector<std::uint64_t> row(cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
      std::uint64_t den = mod_of(denominator(rats[j]));
      if (den == 0) return false;
      row[j] = mulmod(mod_of(numerator(rats[j])), powmod(den, kPrime - 2));
    }
    *grew = reduce_and_store(std::move(row));
    return true;
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

 private:
  bool reduce_and_store(std::vector<std::uint64_t> row) {
    for (const auto& pv : pivots_) {
      std::uint64_t lead = row[pv.col];
      if (lead == 0) continue;
      // pv.row is normalized with leading 1.
      for (std::size_t j = pv.col; j < cols_; ++j) {
        std::uint64_t s = mulmod(lead, pv.row[j]);
        row[j] = (row[j] >= s) ? row[j] - s : row[j] + kPrime - s;
      }
    }
    std::size_t col = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j] != 0) {
        col = j;
        break;
      }
    if (col == cols_) return false;
    std::uint64_t inv = powmod(row[col], kPrime - 2);
    for (std::size_t j = col; j < cols_; ++j) row[j] = mulmod(row[j], inv);
    pivots_.push_back(Pivot{col, std::move(row)});
    return true;
  }

  std::size_t cols_;
  struct Pivot {
    std::size_t col;
    std::vector<std::uint64_t> row;
  };
  std::vector<Pivot> pivots_;
};

}  // namespace

}  // namespace detail

HilbertEstimate hilbert_from_points(const PointSet& e, int degree) {
  if (e.points.empty()) throw PrecondError("hilbert_from_points: empty set");
  VeroneseBasis basis(e.dimension, degree);
  const std::size_t cols = basis.size() + 1;
  const Int ceiling = binomial(Int(degree + e.dimension), Int(e.dimension));

  detail::ExactRankAccumulator acc(cols);
  HilbertEstimate est;
  est.degree = degree;
  std::size_t last_growth = 0;
  std::size_t used = 0;
  for (const auto& p : e.points) {
    std::vector<Rat> row;
    row.reserve(cols);
    row.push_back(Rat(1));
    for (auto& v : veronese_lift(p, basis)) row.push_back(std::move(v));
    ++used;
    if (acc.add_row(detail::clear_denominators(row))) last_growth = used;
    if (Int(acc.rank()) == ceiling) break;  // combinatorial ceiling
  }
  est.value = acc.rank();
  est.rank_source = static_cast<int>(used);
  est.saturated =
      Int(est.value) == ceiling || used - last_growth >= 2;
  return est;
}

bool hilbert_value_at_least(const PointSet& e, int degree, int target) {
  if (target <= 0) return true;
  if (e.points.empty()) return false;
  VeroneseBasis basis(e.dimension, degree);
  const std::size_t cols = basis.size() + 1;
  if (Int(target) > binomial(Int(degree + e.dimension), Int(e.dimension)))
    return false;

  detail::ModularRankAccumulator mod(cols);
  bool modular_ok = true;
  for (const auto& p : e.points) {
    std::vector<Rat> row;
    row.reserve(cols);
    row.push_back(Rat(1));
    for (auto& v : veronese_lift(p, basis)) row.push_back(std::move(v));
    bool grew = false;
    if (!mod.add_row(row, &grew)) {
      modular_ok = false;
      break;
    }
    if (mod.rank() >= target) return true;  // exact certificate
  }
  if (modular_ok && mod.rank() < target) {
    // Modular rank can only undercount; confirm exactly.
    detail::ExactRankAccumulator acc(cols);
    for (const auto& p : e.points) {
      std::vector<Rat> row;
      row.reserve(cols);
      row.push_back(Rat(1));
      for (auto& v : veronese_lift(p, basis)) row.push_back(std::move(v));
      acc.add_row(detail::clear_denominators(row));
      if (acc.rank() >= target) return true;
    }
    return false;
  }
  if (!modular_ok) return hilbert_from_points(e, degree).value >= target;
  return true;
}

std::optional<std::vector<Rat>> affine_kernel_functional(
    const PointSet& e, const VeroneseBasis& basis) {
  const std::size_t cols = basis.size() + 1;
  // Reduced row echelon form over the rationals; intended for small inputs
  // (the kernel branch of the partitioners).
  struct Pivot {
    std::size_t col;
    std::vector<Rat> row;
  };
  std::vector<Pivot> pivots;
  for (const auto& p : e.points) {
    std::vector<Rat> row;
    row.reserve(cols);
    row.push_back(Rat(1));
    for (auto& v : veronese_lift(p, basis)) row.push_back(std::move(v));
    for (const auto& pv : pivots) {
      if (row[pv.col] == 0) continue;
      Rat f = row[pv.col];
      for (std::size_t j = 0; j < cols; ++j) row[j] -= f * pv.row[j];
    }
    std::size_t col = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (row[j] != 0) {
        col = j;
        break;
      }
    if (col == cols) continue;
    Rat inv = Rat(1) / row[col];
    for (std::size_t j = col; j < cols; ++j) row[j] *= inv;
    // Back-eliminate into earlier pivots to keep RREF.
    for (auto& pv : pivots) {
      if (pv.row[col] == 0) continue;
      Rat f = pv.row[col];
      for (std::size_t j = 0; j < cols; ++j) pv.row[j] -= f * row[j];
    }
    pivots.push_back(Pivot{col, std::move(row)});
  }
  if (pivots.size() >= cols) return std::nullopt;

  std::vector<bool> is_pivot(cols, false);
  for (const auto& pv : pivots) is_pivot[pv.col] = true;
  std::size_t free_col = cols;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) {
      free_col = j;
      break;
    }
  std::vector<Rat> kernel(cols, Rat(0));
  kernel[free_col] = Rat(1);
  for (const auto& pv : pivots) kernel[pv.col] = -pv.row[free_col];
  return kernel;
}

Polynomial functional_to_polynomial(const std::vector<Rat>& coeffs,
                                    const VeroneseBasis& basis) {
  if (coeffs.size() != basis.size() + 1)
    throw PrecondError("functional length does not match basis");
  Polynomial f(basis.dimension);
  if (coeffs[0] != 0)
    f.add_term(Monomial{std::vector<int>(basis.dimension, 0)}, coeffs[0]);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i + 1] != 0) f.add_term(basis.monomials[i], coeffs[i + 1]);
  return f;
}

}  // namespace ppart
