#include "bisect_oracle.hpp"

#include <vector>

namespace ppart::testing {

namespace {

using RatVec = std::vector<Rat>;

// Dense Gauss-Jordan nullspace of the rows (1, p) over Q, padded with unit
// rows so the kernel is one dimensional. Deliberately naive.
RatVec hyperplane_through(const std::vector<const RatVec*>& support, int n) {
  const int cols = n + 1;
  std::vector<RatVec> rows;
  for (const RatVec* p : support) {
    RatVec row(cols, Rat(0));
    row[0] = 1;
    for (int j = 0; j < n; ++j) row[j + 1] = (*p)[j];
    rows.push_back(std::move(row));
  }
  for (int j = 1; j <= n; ++j) {
    RatVec row(cols, Rat(0));
    row[j] = 1;
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  std::vector<RatVec> reduced;
  for (auto& row : rows) {
    if (static_cast<int>(reduced.size()) + 1 == cols) break;
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (row[pivot_col[i]] != 0) {
        Rat f = row[pivot_col[i]];
        for (int j = 0; j < cols; ++j) row[j] -= f * reduced[i][j];
      }
    int col = -1;
    for (int j = 0; j < cols; ++j)
      if (row[j] != 0) {
        col = j;
        break;
      }
    if (col < 0) continue;
    Rat inv = Rat(1) / row[col];
    for (int j = 0; j < cols; ++j) row[j] *= inv;
    for (std::size_t i = 0; i < reduced.size(); ++i)
      if (reduced[i][col] != 0) {
        Rat f = reduced[i][col];
        for (int j = 0; j < cols; ++j) reduced[i][j] -= f * row[j];
      }
    pivot_col.push_back(col);
    reduced.push_back(std::move(row));
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = -1;
  for (int j = 0; j < cols; ++j)
    if (!is_pivot[j]) {
      free_col = j;
      break;
    }
  RatVec kernel(cols, Rat(0));
  kernel[free_col] = 1;
  for (std::size_t i = 0; i < reduced.size(); ++i)
    kernel[pivot_col[i]] = -reduced[i][free_col];
  return kernel;
}

Cut evaluate_cut(const BisectionProblem& pb, const RatVec& f) {
  Cut cut;
  cut.coefficients = f;
  cut.counts.resize(pb.sets.size());
  for (std::size_t s = 0; s < pb.sets.size(); ++s)
    for (const auto& p : pb.sets[s]) {
      Rat v = f[0];
      for (int j = 0; j < pb.lifted_dimension; ++j) v += f[j + 1] * p[j];
      const int sg = sign_of(v);
      if (sg > 0)
        ++cut.counts[s].positive;
      else if (sg < 0)
        ++cut.counts[s].negative;
      else
        ++cut.counts[s].zero;
    }
  return cut;
}

}  // namespace

Cut bisect_oracle(const BisectionProblem& pb) {
  const int n = pb.lifted_dimension;
  const std::size_t r = pb.sets.size();
  if (r < 1 || r > 3 || n < 1 || n > 6 ||
      static_cast<int>(r) > n)
    throw OracleScopeExceeded();
  std::vector<std::size_t> sizes;
  for (const auto& set : pb.sets) {
    if (set.empty() || set.size() > 9 || set.size() % 2 == 0)
      throw OracleScopeExceeded();
    sizes.push_back(set.size());
  }

  std::vector<const RatVec*> all;
  for (const auto& set : pb.sets)
    for (const auto& p : set) all.push_back(&p);

  std::vector<std::size_t> combo(r, 0);
  auto try_support = [&](const std::vector<const RatVec*>& support)
      -> std::optional<Cut> {
    const Cut cut = evaluate_cut(pb, hyperplane_through(support, n));
    bool nonzero = false;
    for (const auto& c : cut.coefficients) nonzero = nonzero || c != 0;
    if (nonzero && cut.valid(sizes)) return cut;
    return std::nullopt;
  };

  while (true) {
    std::vector<const RatVec*> support;
    for (std::size_t s = 0; s < r; ++s)
      support.push_back(&pb.sets[s][combo[s]]);
    if (auto cut = try_support(support)) return *cut;
    if (static_cast<int>(r) < n)
      for (const RatVec* extra : all) {
        auto wide = support;
        wide.push_back(extra);
        if (auto cut = try_support(wide)) return *cut;
      }
    std::size_t k = 0;
    while (k < r && ++combo[k] == sizes[k]) combo[k++] = 0;
    if (k == r) break;
  }
  throw NoCutFound();
}

}  // namespace ppart::testing
