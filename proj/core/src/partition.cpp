#include "ppart/partition.hpp"

#include <algorithm>
#include <cmath>

#include "ppart/errors.hpp"
#include "ppart/hamsandwich.hpp"
#include "ppart/rng.hpp"
#include "ppart/veronese.hpp"

namespace ppart {

namespace {

Int pow_int(Int base, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Rat pow_rat(const Rat& base, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Largest t with 2^t <= v; v > 0.
int floor_log2(const Rat& v) {
  int t = 0;
  Rat w = 1;
  while (w * 2 <= v) {
    w *= 2;
    ++t;
  }
  while (w > v) {
    w /= 2;
    --t;
  }
  return t;
}

// Largest n >= 0 with n^k <= x; x >= 0, k >= 1.
int floor_root(const Rat& x, int k) {
  if (x < 0) throw PrecondError("floor_root: negative radicand");
  long long n = static_cast<long long>(std::pow(to_double(x), 1.0 / k));
  n = std::max(0LL, n - 2);
  while (pow_rat(Rat(n + 1), k) <= x) ++n;
  while (n > 0 && pow_rat(Rat(n), k) > x) --n;
  return static_cast<int>(n);
}

}  // namespace

std::vector<ScheduleEntry> schedule_full_space(int d, int ell) {
  if (d < 1 || ell < 1)
    throw PrecondError("schedule_full_space: need d >= 1, ell >= 1");
  std::vector<ScheduleEntry> out;
  Int target = 1;
  int sum = 0;
  int deg = 1;
  for (int i = 0;; ++i) {
    while (binomial(Int(deg + d), Int(d)) - 1 < target) ++deg;
    if (sum + deg > ell) break;
    out.push_back(ScheduleEntry{i, target, deg, Regime::full, false});
    sum += deg;
    target *= 2;
  }
  return out;
}

VarietySchedule schedule_variety(int d, int delta1, int delta2, int ell,
                                 const Rat& c1) {
  if (d < 3) throw PrecondError("schedule_variety: need d >= 3");
  if (delta1 < 1 || delta2 < delta1)
    throw PrecondError("schedule_variety: need 1 <= delta1 <= delta2");
  if (ell < 6 * d * delta2)
    throw PrecondError("schedule_variety: need ell >= 6*d*delta2 = " +
                       std::to_string(6 * d * delta2));
  if (c1 <= 0 || c1 > Rat(Int(1), pow_int(2, d)))
    throw PrecondError("schedule_variety: need 0 < c1 <= 2^-d");

  VarietySchedule vs;
  vs.eta = Rat(ell, 2 * d) - Rat(2 * delta2);
  const Rat bound1 = c1 * Rat(pow_int(delta1, d));
  const Rat bound2 = c1 * Rat(delta1) * Rat(pow_int(delta2, d - 1));
  vs.s0 = std::log2(to_double(bound1));
  vs.s1 = std::log2(to_double(bound2));
  vs.t = floor_log2(c1 * Rat(delta1) * Rat(delta2) * pow_rat(vs.eta, d - 2));

  const int eta_floor = floor_root(vs.eta, 1);
  int sum = 0;
  Int target = 1;
  for (int i = 0; i <= vs.t; ++i) {
    ScheduleEntry e;
    e.stage = i;
    e.target = target;
    int raw, lo, hi;
    if (Rat(target) <= bound1) {
      e.regime = Regime::full;
      raw = floor_root(Rat(target) / c1, d);
      lo = 1;
      hi = delta1 - 1;
    } else if (Rat(target) <= bound2) {
      e.regime = Regime::hypersurface;
      raw = floor_root(Rat(target) / (c1 * Rat(delta1)), d - 1);
      lo = delta1;
      hi = delta2 - 1;
    } else {
      e.regime = Regime::codim2;
      raw = floor_root(Rat(target) / (c1 * Rat(delta1) * Rat(delta2)), d - 2);
      lo = delta2;
      hi = eta_floor;
    }
    if (hi < lo) hi = lo;  // degenerate interval, pin to its lower end
    e.degree = std::clamp(raw, lo, hi);
    e.clamped = e.degree != raw;
    if (sum + e.degree > ell) {
      vs.truncated = true;
      break;
    }
    sum += e.degree;
    vs.entries.push_back(std::move(e));
    target *= 2;
  }
  return vs;
}

namespace {

struct ActiveCell {
  SignVector pattern;
  std::vector<Point> pts;
};

// Splits every active cell by the strict signs of g; zero signs move the
// point to the residue.
void apply_stage(std::vector<ActiveCell>& active, const Polynomial& g,
                 PointSet& residue) {
  std::vector<ActiveCell> next;
  for (auto& cell : active) {
    ActiveCell plus{cell.pattern, {}};
    ActiveCell minus{cell.pattern, {}};
    plus.pattern.pattern.push_back(1);
    minus.pattern.pattern.push_back(-1);
    for (auto& p : cell.pts) {
      const int sg = sign_at(g, p);
      if (sg > 0)
        plus.pts.push_back(std::move(p));
      else if (sg < 0)
        minus.pts.push_back(std::move(p));
      else
        residue.points.push_back(std::move(p));
    }
    if (!plus.pts.empty()) next.push_back(std::move(plus));
    if (!minus.pts.empty()) next.push_back(std::move(minus));
  }
  active = std::move(next);
}

void finalize(PartitionResult& res, std::vector<ActiveCell>& active, int dim) {
  res.residue.dimension = dim;
  for (auto& cell : active) {
    PointSet ps;
    ps.dimension = dim;
    ps.points = std::move(cell.pts);
    res.max_cell = std::max(res.max_cell, ps.points.size());
    res.cells.emplace(std::move(cell.pattern), std::move(ps));
  }
  res.realized_stages = static_cast<int>(res.stage_polynomials.size());
  res.product_degree = 0;
  for (const auto& g : res.stage_polynomials)
    res.product_degree += g.degree().value_or(0);
}

std::vector<std::size_t> big_cells(const std::vector<ActiveCell>& active) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < active.size(); ++i)
    if (active[i].pts.size() >= 2) idx.push_back(i);
  return idx;
}

PointSet union_of(const std::vector<ActiveCell>& active, int dim) {
  PointSet u;
  u.dimension = dim;
  for (const auto& c : active)
    for (const auto& p : c.pts) u.points.push_back(p);
  return u;
}

// Cut polynomial vanishing on all the given points; the degree budget
// guarantees one exists whenever the lifted rows fail to span.
std::optional<Polynomial> kernel_cut(const PointSet& pts, int dim,
                                     int degree) {
  VeroneseBasis basis(dim, degree);
  auto f = affine_kernel_functional(pts, basis);
  if (!f) return std::nullopt;
  return functional_to_polynomial(*f, basis);
}

}  // namespace

PartitionResult partition(const PointSet& p, int ell, std::uint64_t seed) {
  if (p.points.empty()) throw PrecondError("partition: empty point set");
  if (ell < 1) throw PrecondError("partition: need ell >= 1");
  const int dim = p.dimension;
  const auto sched = schedule_full_space(dim, ell);

  PartitionResult res;
  res.budget = ell;
  res.residue.dimension = dim;
  Rng root(seed);
  std::vector<ActiveCell> active{{SignVector{}, p.points}};

  for (const auto& entry : sched) {
    const auto big = big_cells(active);
    if (big.empty()) break;
    std::vector<PointSet> sets;
    for (std::size_t i : big) {
      PointSet s;
      s.dimension = dim;
      s.points = active[i].pts;
      sets.push_back(std::move(s));
    }
    Polynomial g(dim);
    try {
      auto [poly, cut] = lift_and_bisect(
          sets, entry.degree, root.derive(entry.stage).next());
      g = std::move(poly);
    } catch (const CapacityTooSmall&) {
      // Degenerate data: absorb the active points into the residue with a
      // vanishing cut instead of failing.
      auto k = kernel_cut(union_of(active, dim), dim, entry.degree);
      if (!k) {
        // Fall back to the bisection sets only; their deficiency is what
        // raised the error, so a kernel over them always exists.
        PointSet bu;
        bu.dimension = dim;
        for (const auto& s : sets)
          for (const auto& q : s.points) bu.points.push_back(q);
        k = kernel_cut(bu, dim, entry.degree);
      }
      if (!k) throw;
      g = std::move(*k);
      res.kernel_fired = true;
    } catch (const SearchExhausted&) {
      if (res.stage_polynomials.empty()) throw;
      res.truncated = true;
      break;
    }
    res.stage_polynomials.push_back(g);
    apply_stage(active, g, res.residue);
  }
  finalize(res, active, dim);
  return res;
}

PartitionResult partition_on_variety(const PointSet& p, const VarietySpec& x,
                                     int ell, std::uint64_t seed) {
  if (p.points.empty())
    throw PrecondError("partition_on_variety: empty point set");
  const int dim = x.dimension;
  if (p.dimension != dim)
    throw PrecondError("partition_on_variety: point dimension mismatch");
  for (const auto& f : x.defining)
    for (const auto& q : p.points)
      if (sign_at(f, q) != 0)
        throw PrecondError(
            "partition_on_variety: a point misses a defining polynomial");

  auto vs = schedule_variety(dim, x.delta1, x.delta2, ell,
                             Rat(Int(1), pow_int(2, dim)));
  auto entries = vs.entries;
  if (entries.empty())
    entries.push_back(ScheduleEntry{0, 1, x.delta2, Regime::codim2, false});

  PartitionResult res;
  res.budget = ell;
  res.residue.dimension = dim;
  Rng root(seed);
  std::vector<ActiveCell> active{{SignVector{}, p.points}};

  for (const auto& entry : entries) {
    if (active.empty()) break;
    const PointSet current = union_of(active, dim);
    const int needed = static_cast<int>(entry.target.convert_to<long long>()) + 1;
    if (!hilbert_value_at_least(current, entry.degree, needed)) {
      // Kernel branch: the data cannot host the scheduled number of cuts,
      // so return a polynomial vanishing on all of P instead.
      auto k = kernel_cut(p, dim, entry.degree);
      if (!k)
        throw PrecondError(
            "partition_on_variety: capacity deficit on active points but "
            "full data spans the lifted space");
      res.kernel_fired = true;
      res.stage_polynomials.push_back(std::move(*k));
      res.cells.clear();
      res.residue = p;
      active.clear();
      if (x.sample_points || !x.parametrization.empty()) {
        const auto samples = x.sample(32, root.derive(999).next());
        res.dim_check_pass = false;
        for (const auto& s : samples.points)
          if (sign_at(res.stage_polynomials.back(), s) != 0) {
            res.dim_check_pass = true;
            break;
          }
      }
      res.max_cell = 0;
      res.realized_stages = static_cast<int>(res.stage_polynomials.size());
      res.product_degree = 0;
      for (const auto& g : res.stage_polynomials)
        res.product_degree += g.degree().value_or(0);
      return res;
    }

    const auto big = big_cells(active);
    if (big.empty()) break;
    std::vector<PointSet> sets;
    for (std::size_t i : big) {
      PointSet s;
      s.dimension = dim;
      s.points = active[i].pts;
      sets.push_back(std::move(s));
    }
    Polynomial g(dim);
    try {
      auto [poly, cut] = lift_and_bisect(
          sets, entry.degree, root.derive(entry.stage).next());
      g = std::move(poly);
    } catch (const SearchExhausted&) {
      if (res.stage_polynomials.empty()) throw;
      res.truncated = true;
      break;
    }
    res.stage_polynomials.push_back(g);
    apply_stage(active, g, res.residue);
  }
  finalize(res, active, dim);
  return res;
}

std::pair<std::map<SignVector, PointSet>, PointSet> classify(
    const PointSet& p, std::span<const Polynomial> polys) {
  std::map<SignVector, PointSet> cells;
  PointSet residue;
  residue.dimension = p.dimension;
  for (const auto& q : p.points) {
    SignVector sv;
    bool zero = false;
    for (const auto& g : polys) {
      const int sg = sign_at(g, q);
      if (sg == 0) {
        zero = true;
        break;
      }
      sv.pattern.push_back(sg);
    }
    if (zero) {
      residue.points.push_back(q);
    } else {
      auto& cell = cells[sv];
      cell.dimension = p.dimension;
      cell.points.push_back(q);
    }
  }
  return {std::move(cells), std::move(residue)};
}

}  // namespace ppart
