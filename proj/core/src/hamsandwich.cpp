#include "ppart/hamsandwich.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <limits>
#include <numeric>

#include "ppart/errors.hpp"
#include "ppart/rng.hpp"
#include "ppart/veronese.hpp"

namespace ppart {

bool Cut::valid(std::span<const std::size_t> set_sizes) const {
  if (counts.size() != set_sizes.size()) return false;
  bool nonzero = false;
  for (const auto& c : coefficients)
    if (c != 0) nonzero = true;
  if (!nonzero) return false;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const int half = static_cast<int>(set_sizes[j] / 2);
    if (counts[j].positive > half || counts[j].negative > half) return false;
  }
  return true;
}

namespace {

using RatVec = std::vector<Rat>;

struct Workspace {
  int r = 0;                            // working dimension
  bool identity = false;                // projection is the identity
  std::vector<std::vector<Int>> proj;   // r x N when not identity
  std::vector<std::vector<RatVec>> sets;         // projected points
  std::vector<std::vector<std::vector<double>>> dsets;  // scaled doubles
  double spread = 1.0;
};

RatVec project_point(const Workspace& ws, const RatVec& v) {
  RatVec y(ws.r, Rat(0));
  for (int i = 0; i < ws.r; ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (ws.proj[i][j] != 0) y[i] += Rat(ws.proj[i][j]) * v[j];
  return y;
}

Workspace make_workspace(const BisectionProblem& pb, Rng& rng) {
  Workspace ws;
  const int n = pb.lifted_dimension;
  ws.r = static_cast<int>(pb.sets.size());
  ws.identity = ws.r == n;
  if (!ws.identity) {
    ws.proj.assign(ws.r, std::vector<Int>(n));
    for (auto& row : ws.proj)
      for (auto& x : row) x = Int(rng.range(-9, 9));
  }
  ws.sets.resize(pb.sets.size());
  for (std::size_t s = 0; s < pb.sets.size(); ++s)
    for (const auto& v : pb.sets[s])
      ws.sets[s].push_back(ws.identity ? v : project_point(ws, v));

  // Per-coordinate scaling keeps the double search well conditioned.
  std::vector<double> scale(ws.r, 0.0);
  for (const auto& set : ws.sets)
    for (const auto& y : set)
      for (int i = 0; i < ws.r; ++i)
        scale[i] = std::max(scale[i], std::fabs(to_double(y[i])));
  for (auto& s : scale)
    if (s == 0.0) s = 1.0;
  ws.dsets.resize(ws.sets.size());
  double spread = 0.0;
  for (std::size_t s = 0; s < ws.sets.size(); ++s)
    for (const auto& y : ws.sets[s]) {
      std::vector<double> dy(ws.r);
      for (int i = 0; i < ws.r; ++i) dy[i] = to_double(y[i]) / scale[i];
      for (double x : dy) spread = std::max(spread, std::fabs(x));
      ws.dsets[s].push_back(std::move(dy));
    }
  ws.spread = spread > 0 ? spread : 1.0;
  return ws;
}

// Exact per-set counts of an affine functional in the working space.
std::vector<Cut::Counts> exact_counts(const Workspace& ws, const RatVec& f) {
  std::vector<Cut::Counts> out(ws.sets.size());
  for (std::size_t s = 0; s < ws.sets.size(); ++s) {
    for (const auto& y : ws.sets[s]) {
      Rat v = f[0];
      for (int i = 0; i < ws.r; ++i)
        if (f[i + 1] != 0) v += f[i + 1] * y[i];
      int sg = sign_of(v);
      if (sg > 0)
        ++out[s].positive;
      else if (sg < 0)
        ++out[s].negative;
      else
        ++out[s].zero;
    }
  }
  return out;
}

bool counts_valid(const std::vector<Cut::Counts>& counts,
                  const Workspace& ws) {
  for (std::size_t s = 0; s < counts.size(); ++s) {
    const int half = static_cast<int>(ws.sets[s].size() / 2);
    if (counts[s].positive > half || counts[s].negative > half) return false;
  }
  return true;
}

double imbalance_of(const std::vector<Cut::Counts>& counts,
                    const Workspace& ws) {
  double total = 0;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    const int half = static_cast<int>(ws.sets[s].size() / 2);
    total += std::max(0, counts[s].positive - half);
    total += std::max(0, counts[s].negative - half);
  }
  return total;
}

// Hyperplane through the given working-space points; degenerate supports
// are pinned with canonical unit directions so the kernel is unique up to
// scale. Returns the affine functional (constant first) or nullopt.
std::optional<RatVec> solve_support(const Workspace& ws,
                                    const std::vector<const RatVec*>& pts) {
  const std::size_t cols = static_cast<std::size_t>(ws.r) + 1;
  struct Pivot {
    std::size_t col;
    RatVec row;
  };
  std::vector<Pivot> pivots;
  auto reduce_insert = [&](RatVec row) {
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
    if (col == cols) return false;
    Rat inv = Rat(1) / row[col];
    for (std::size_t j = col; j < cols; ++j) row[j] *= inv;
    for (auto& pv : pivots) {
      if (pv.row[col] == 0) continue;
      Rat f = pv.row[col];
      for (std::size_t j = 0; j < cols; ++j) pv.row[j] -= f * row[j];
    }
    pivots.push_back(Pivot{col, std::move(row)});
    return true;
  };
  for (const RatVec* p : pts) {
    RatVec row(cols);
    row[0] = Rat(1);
    for (int i = 0; i < ws.r; ++i) row[i + 1] = (*p)[i];
    reduce_insert(std::move(row));
  }
  for (int j = 0; j < ws.r && pivots.size() + 1 < cols; ++j) {
    RatVec row(cols, Rat(0));
    row[static_cast<std::size_t>(j) + 1] = Rat(1);
    reduce_insert(std::move(row));
  }
  if (pivots.size() + 1 != cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& pv : pivots) is_pivot[pv.col] = true;
  std::size_t free_col = cols;
  for (std::size_t j = 0; j < cols; ++j)
    if (!is_pivot[j]) {
      free_col = j;
      break;
    }
  RatVec kernel(cols, Rat(0));
  kernel[free_col] = Rat(1);
  for (const auto& pv : pivots) kernel[pv.col] = -pv.row[free_col];
  return kernel;
}

struct Incumbent {
  std::vector<double> w;  // length r
  double b = 0;
};

double functional_at(const Incumbent& inc, const std::vector<double>& p) {
  double v = inc.b;
  for (std::size_t i = 0; i < inc.w.size(); ++i) v += inc.w[i] * p[i];
  return v;
}

// Smoothed descent: minimize sum_j (sum_p tanh(f(p)/tau))^2 while
// annealing tau toward the floor.
Incumbent descend(const Workspace& ws, Rng& rng, int max_iterations,
                  const SmoothingSchedule& sched) {
  const int r = ws.r;
  Incumbent inc;
  inc.w.resize(r);
  double norm = 0;
  for (auto& x : inc.w) {
    x = rng.real01() * 2.0 - 1.0;
    norm += x * x;
  }
  norm = std::sqrt(std::max(norm, 1e-12));
  for (auto& x : inc.w) x /= norm;
  // Start on the data centroid.
  double cb = 0;
  std::size_t total = 0;
  for (const auto& set : ws.dsets)
    for (const auto& p : set) {
      cb += functional_at(Incumbent{inc.w, 0.0}, p);
      ++total;
    }
  inc.b = -cb / static_cast<double>(total);

  double tau = sched.initial_scale * ws.spread;
  const double floor_tau = sched.floor * ws.spread;
  int iters_left = max_iterations;
  std::vector<double> grad(r + 1);
  while (tau > floor_tau && iters_left > 0) {
    const int chunk = std::min(iters_left, 60);
    for (int it = 0; it < chunk; ++it) {
      std::fill(grad.begin(), grad.end(), 0.0);
      double loss = 0;
      for (const auto& set : ws.dsets) {
        double s = 0;
        std::vector<double> gs(r + 1, 0.0);
        for (const auto& p : set) {
          double u = functional_at(inc, p) / tau;
          double t = std::tanh(u);
          s += t;
          double dsig = (1.0 - t * t) / tau;
          for (int i = 0; i < r; ++i) gs[i] += dsig * p[i];
          gs[r] += dsig;
        }
        loss += s * s;
        for (int i = 0; i <= r; ++i) grad[i] += 2.0 * s * gs[i];
      }
      double gnorm = 0;
      for (double g : grad) gnorm += g * g;
      gnorm = std::sqrt(gnorm);
      if (gnorm < 1e-14 || loss < 1e-10) break;
      const double step = 0.1 * std::max(tau, 0.05 * ws.spread) / gnorm;
      for (int i = 0; i < r; ++i) inc.w[i] -= step * grad[i];
      inc.b -= step * grad[r];
      double wn = 0;
      for (double x : inc.w) wn += x * x;
      wn = std::sqrt(wn);
      if (wn > 1e-12) {
        for (auto& x : inc.w) x /= wn;
        inc.b /= wn;
      }
    }
    iters_left -= chunk;
    tau *= sched.decay;
  }
  return inc;
}

struct CandidateSearch {
  const Workspace& ws;
  std::optional<RatVec> found;
  double best_imbalance = 1e300;

  bool try_functional(const RatVec& f) {
    auto counts = exact_counts(ws, f);
    double imb = imbalance_of(counts, ws);
    best_imbalance = std::min(best_imbalance, imb);
    if (counts_valid(counts, ws)) {
      found = f;
      return true;
    }
    return false;
  }
};

// Orders each set's points by distance to the incumbent hyperplane.
std::vector<std::vector<std::size_t>> nearest_orders(const Workspace& ws,
                                                     const Incumbent& inc) {
  std::vector<std::vector<std::size_t>> orders(ws.dsets.size());
  for (std::size_t s = 0; s < ws.dsets.size(); ++s) {
    auto& ord = orders[s];
    ord.resize(ws.dsets[s].size());
    std::iota(ord.begin(), ord.end(), std::size_t{0});
    std::stable_sort(ord.begin(), ord.end(), [&](std::size_t a, std::size_t b) {
      return std::fabs(functional_at(inc, ws.dsets[s][a])) <
             std::fabs(functional_at(inc, ws.dsets[s][b]));
    });
  }
  return orders;
}

// Two independent affine functionals vanishing on the pinned point of every
// set except `skip`; their span is the pencil of hyperplanes through the pins.
std::optional<std::pair<RatVec, RatVec>> pencil_basis(
    const Workspace& ws, const std::vector<std::size_t>& pins,
    std::size_t skip) {
  const std::size_t cols = static_cast<std::size_t>(ws.r) + 1;
  struct Pivot {
    std::size_t col;
    RatVec row;
  };
  std::vector<Pivot> pivots;
  auto reduce_insert = [&](RatVec row) {
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
    if (col == cols) return;
    Rat inv = Rat(1) / row[col];
    for (std::size_t j = col; j < cols; ++j) row[j] *= inv;
    for (auto& pv : pivots) {
      if (pv.row[col] == 0) continue;
      Rat f = pv.row[col];
      for (std::size_t j = 0; j < cols; ++j) pv.row[j] -= f * row[j];
    }
    pivots.push_back(Pivot{col, std::move(row)});
  };
  for (std::size_t s = 0; s < pins.size(); ++s) {
    if (s == skip) continue;
    RatVec row(cols);
    row[0] = Rat(1);
    const auto& y = ws.sets[s][pins[s]];
    for (int i = 0; i < ws.r; ++i) row[i + 1] = y[i];
    reduce_insert(std::move(row));
  }
  for (int j = 0; j < ws.r && pivots.size() + 2 < cols; ++j) {
    RatVec row(cols, Rat(0));
    row[static_cast<std::size_t>(j) + 1] = Rat(1);
    reduce_insert(std::move(row));
  }
  if (pivots.size() + 2 != cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& pv : pivots) is_pivot[pv.col] = true;
  std::array<RatVec, 2> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < cols && k < 2; ++j) {
    if (is_pivot[j]) continue;
    RatVec kernel(cols, Rat(0));
    kernel[j] = Rat(1);
    for (const auto& pv : pivots) kernel[pv.col] = -pv.row[j];
    out[k++] = std::move(kernel);
  }
  return std::make_pair(std::move(out[0]), std::move(out[1]));
}

// Frees one set at a time and sweeps the pencil through the other pins.
// Along the pencil each point crosses the hyperplane at one parameter
// value, so the freed set can be balanced exactly by scanning its
// crossings; the scan also tracks every other set's counts and keeps the
// candidate with the least total violation.
bool pencil_search(CandidateSearch& cs, const Workspace& ws, Rng& rng,
                   std::vector<std::size_t> pins) {
  const std::size_t r = ws.sets.size();
  if (r < 2) return false;
  auto half = [&](std::size_t s) {
    return static_cast<int>(ws.sets[s].size() / 2);
  };
  std::size_t freej = 0;
  const int rounds = static_cast<int>(12 * r);
  for (int round = 0; round < rounds; ++round) {
    auto basis = pencil_basis(ws, pins, freej);
    if (!basis) {
      freej = (freej + 1) % r;
      continue;
    }
    const RatVec& f0 = basis->first;
    const RatVec& f1 = basis->second;
    struct Moving {
      Rat t;       // parameter where the point meets the hyperplane
      int dir;     // sign for parameters above t
      std::size_t set;
      std::size_t idx;
    };
    std::vector<Moving> ev;
    std::vector<Cut::Counts> counts(r);  // state at parameter -infinity
    bool free_has_crossing = false;
    for (std::size_t s = 0; s < r; ++s) {
      for (std::size_t i = 0; i < ws.sets[s].size(); ++i) {
        const auto& y = ws.sets[s][i];
        Rat a = f1[0], b = f0[0];
        for (int c = 0; c < ws.r; ++c) {
          if (f1[c + 1] != 0) a += f1[c + 1] * y[c];
          if (f0[c + 1] != 0) b += f0[c + 1] * y[c];
        }
        if (a == 0) {
          int sg = sign_of(b);
          if (sg > 0)
            ++counts[s].positive;
          else if (sg < 0)
            ++counts[s].negative;
          else
            ++counts[s].zero;
        } else {
          if (s == freej) free_has_crossing = true;
          if (sign_of(a) > 0)
            ++counts[s].negative;
          else
            ++counts[s].positive;
          ev.push_back(Moving{-b / a, sign_of(a), s, i});
        }
      }
    }
    if (!free_has_crossing) {
      freej = (freej + 1) % r;
      continue;
    }
    std::sort(ev.begin(), ev.end(),
              [](const Moving& x, const Moving& y) { return x.t < y.t; });
    auto excess_total = [&]() {
      int tot = 0;
      for (std::size_t s = 0; s < r; ++s) {
        tot += std::max(0, counts[s].positive - half(s));
        tot += std::max(0, counts[s].negative - half(s));
      }
      return tot;
    };
    std::optional<Rat> best_t;
    std::size_t best_pin = 0;
    int best_excess = std::numeric_limits<int>::max();
    std::size_t i = 0;
    while (i < ev.size()) {
      std::size_t g = i;
      while (g < ev.size() && ev[g].t == ev[i].t) ++g;
      bool has_free = false;
      std::size_t pin_idx = 0;
      for (std::size_t k = i; k < g; ++k) {
        const auto& m = ev[k];
        if (m.dir > 0)
          --counts[m.set].negative;
        else
          --counts[m.set].positive;
        ++counts[m.set].zero;
        if (m.set == freej) {
          has_free = true;
          pin_idx = m.idx;
        }
      }
      if (has_free && counts[freej].positive <= half(freej) &&
          counts[freej].negative <= half(freej)) {
        const int ex = excess_total();
        if (ex < best_excess) {
          best_excess = ex;
          best_t = ev[i].t;
          best_pin = pin_idx;
        }
      }
      for (std::size_t k = i; k < g; ++k) {
        const auto& m = ev[k];
        --counts[m.set].zero;
        if (m.dir > 0)
          ++counts[m.set].positive;
        else
          ++counts[m.set].negative;
      }
      i = g;
    }
    if (!best_t) {
      freej = (freej + 1) % r;
      continue;
    }
    RatVec f(f0.size());
    for (std::size_t c = 0; c < f.size(); ++c) f[c] = f0[c] + *best_t * f1[c];
    pins[freej] = best_pin;
    if (cs.try_functional(f)) return true;
    // Hand the free slot to the worst remaining offender.
    auto cts = exact_counts(ws, f);
    std::size_t worst = r;
    int worst_excess = 0;
    for (std::size_t s = 0; s < r; ++s) {
      const int ex = std::max(0, cts[s].positive - half(s)) +
                     std::max(0, cts[s].negative - half(s));
      if (ex > worst_excess) {
        worst = s;
        worst_excess = ex;
      }
    }
    freej = worst == r ? (freej + 1) % r : worst;
    if (round % 7 == 6) freej = rng.below(r);
  }
  return false;
}

bool snap_search(CandidateSearch& cs, const Workspace& ws,
                 const Incumbent& inc, Rng& rng) {
  const auto orders = nearest_orders(ws, inc);
  const std::size_t r = ws.sets.size();
  std::vector<std::size_t> combo(r, 0);
  auto solve_and_try = [&]() {
    std::vector<const RatVec*> support;
    support.reserve(r);
    for (std::size_t s = 0; s < r; ++s)
      support.push_back(&ws.sets[s][orders[s][combo[s]]]);
    auto f = solve_support(ws, support);
    return f && cs.try_functional(*f);
  };

  if (solve_and_try()) return true;

  {
    std::vector<std::size_t> pins(r);
    for (std::size_t s = 0; s < r; ++s) pins[s] = orders[s][0];
    if (pencil_search(cs, ws, rng, std::move(pins))) return true;
  }

  // Local repair: advance the support choice of a violating set.
  std::vector<std::size_t> limits(r);
  for (std::size_t s = 0; s < r; ++s)
    limits[s] = std::min<std::size_t>(ws.sets[s].size(), 8);
  for (int pass = 0; pass < 64; ++pass) {
    auto counts = exact_counts(
        ws, *solve_support(ws,
                           [&] {
                             std::vector<const RatVec*> sup;
                             for (std::size_t s = 0; s < r; ++s)
                               sup.push_back(
                                   &ws.sets[s][orders[s][combo[s]]]);
                             return sup;
                           }()
                               ));
    // Pick the worst offender; break ties with the seeded stream.
    std::size_t worst = r;
    int worst_excess = 0;
    for (std::size_t s = 0; s < r; ++s) {
      const int half = static_cast<int>(ws.sets[s].size() / 2);
      int excess = std::max(counts[s].positive - half, 0) +
                   std::max(counts[s].negative - half, 0);
      if (excess > worst_excess) {
        worst = s;
        worst_excess = excess;
      }
    }
    if (worst == r) break;  // counts valid; handled below
    combo[worst] = (combo[worst] + 1) % limits[worst];
    if (rng.below(4) == 0) {
      std::size_t other = rng.below(r);
      combo[other] = (combo[other] + 1) % limits[other];
    }
    if (solve_and_try()) return true;
  }

  // Exhaustive sweep for small instances; guarantees oracle-scope inputs.
  unsigned long long product = 1;
  bool small = true;
  for (std::size_t s = 0; s < r; ++s) {
    product *= ws.sets[s].size();
    if (product > 4000) {
      small = false;
      break;
    }
  }
  if (small) {
    std::vector<std::size_t> idx(r, 0);
    while (true) {
      std::vector<const RatVec*> support;
      for (std::size_t s = 0; s < r; ++s)
        support.push_back(&ws.sets[s][orders[s % r].size() == ws.sets[s].size()
                                          ? orders[s][idx[s]]
                                          : idx[s]]);
      auto f = solve_support(ws, support);
      if (f && cs.try_functional(*f)) return true;
      std::size_t k = 0;
      while (k < r && ++idx[k] == ws.sets[k].size()) idx[k++] = 0;
      if (k == r) break;
    }
  }
  return false;
}

RatVec pull_back(const Workspace& ws, const RatVec& f, int lifted_dim) {
  if (ws.identity) return f;
  RatVec full(static_cast<std::size_t>(lifted_dim) + 1, Rat(0));
  full[0] = f[0];
  for (int i = 0; i < ws.r; ++i) {
    if (f[i + 1] == 0) continue;
    for (int j = 0; j < lifted_dim; ++j)
      if (ws.proj[i][j] != 0)
        full[j + 1] += f[i + 1] * Rat(ws.proj[i][j]);
  }
  return full;
}

}  // namespace

Cut bisect(const BisectionProblem& pb) {
  const int n = pb.lifted_dimension;
  const int r = static_cast<int>(pb.sets.size());
  if (r < 1) throw PrecondError("bisect: need at least one set");
  if (r > n) throw PrecondError("bisect: more sets than lifted dimensions");
  for (const auto& set : pb.sets) {
    if (set.empty()) throw PrecondError("bisect: empty set");
    for (const auto& v : set)
      if (static_cast<int>(v.size()) != n)
        throw PrecondError("bisect: lifted vector length mismatch");
  }

  Rng root = Rng(pb.seed);
  double best_imbalance = 1e300;
  const int restarts = 16;
  for (int restart = 0; restart < restarts; ++restart) {
    Rng rng = root.derive(static_cast<std::uint64_t>(restart));
    Workspace ws = make_workspace(pb, rng);
    CandidateSearch cs{ws, std::nullopt, best_imbalance};

    if (r == 1) {
      // Median cut along the working axis: exact and always valid.
      std::vector<Rat> vals;
      for (const auto& y : ws.sets[0]) vals.push_back(y[0]);
      std::sort(vals.begin(), vals.end());
      RatVec f(static_cast<std::size_t>(ws.r) + 1, Rat(0));
      f[0] = -vals[(vals.size() - 1) / 2];
      f[1] = Rat(1);
      cs.try_functional(f);
    }

    if (!cs.found) {
      Incumbent inc = descend(ws, rng, pb.max_iterations, pb.smoothing);
      // Plain rational rounding of the incumbent (no points pinned).
      RatVec rounded(static_cast<std::size_t>(ws.r) + 1);
      rounded[0] = rational_approx(inc.b, Int(1000000));
      for (int i = 0; i < ws.r; ++i)
        rounded[i + 1] = rational_approx(inc.w[i], Int(1000000));
      bool any = false;
      for (const auto& c : rounded) any = any || c != 0;
      if (any) cs.try_functional(rounded);
      if (!cs.found) snap_search(cs, ws, inc, rng);
    }

    best_imbalance = std::min(best_imbalance, cs.best_imbalance);
    if (cs.found) {
      Cut cut;
      cut.coefficients = pull_back(ws, *cs.found, n);
      // Final verification in the full lifted space.
      cut.counts.resize(pb.sets.size());
      for (std::size_t s = 0; s < pb.sets.size(); ++s) {
        for (const auto& v : pb.sets[s]) {
          Rat val = cut.coefficients[0];
          for (int j = 0; j < n; ++j)
            if (cut.coefficients[j + 1] != 0)
              val += cut.coefficients[j + 1] * v[j];
          int sg = sign_of(val);
          if (sg > 0)
            ++cut.counts[s].positive;
          else if (sg < 0)
            ++cut.counts[s].negative;
          else
            ++cut.counts[s].zero;
        }
      }
      std::vector<std::size_t> sizes;
      for (const auto& set : pb.sets) sizes.push_back(set.size());
      if (!cut.valid(sizes))
        continue;  // projection artifact; try the next restart
      return cut;
    }
  }
  throw SearchExhausted(best_imbalance);
}

std::pair<Polynomial, Cut> lift_and_bisect(std::span<const PointSet> sets,
                                           int degree, std::uint64_t seed) {
  if (sets.empty()) throw PrecondError("lift_and_bisect: no sets");
  const int d = sets[0].dimension;
  for (const auto& s : sets) {
    if (s.points.empty()) throw PrecondError("lift_and_bisect: empty set");
    if (s.dimension != d)
      throw PrecondError("lift_and_bisect: dimension mismatch");
  }
  VeroneseBasis basis(d, degree);
  const int r = static_cast<int>(sets.size());

  PointSet all;
  all.dimension = d;
  for (const auto& s : sets)
    for (const auto& p : s.points) all.points.push_back(p);
  if (!hilbert_value_at_least(all, degree, r + 1)) {
    // Singleton sets need no bisection: a hypersurface through every point
    // gives all-zero counts, which the cut contract allows.
    bool all_singletons = true;
    for (const auto& s : sets) all_singletons = all_singletons && s.points.size() == 1;
    if (all_singletons) {
      if (auto kern = affine_kernel_functional(all, basis)) {
        Cut cut;
        cut.coefficients = *kern;
        cut.counts.resize(sets.size());
        for (std::size_t s = 0; s < sets.size(); ++s)
          cut.counts[s].zero = static_cast<int>(sets[s].points.size());
        return {functional_to_polynomial(*kern, basis), cut};
      }
    }
    int cap = hilbert_from_points(all, degree).value - 1;
    throw CapacityTooSmall(cap, r);
  }

  BisectionProblem pb;
  pb.lifted_dimension = static_cast<int>(basis.size());
  pb.seed = seed;
  pb.sets.resize(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (const auto& p : sets[s].points)
      pb.sets[s].push_back(veronese_lift(p, basis));

  Cut cut = bisect(pb);
  std::vector<Rat> coeffs = cut.coefficients;
  return {functional_to_polynomial(coeffs, basis), std::move(cut)};
}

}  // namespace ppart
