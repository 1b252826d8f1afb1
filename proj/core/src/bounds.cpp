#include "ppart/bounds.hpp"

#include <sstream>

#include "ppart/errors.hpp"
#include "ppart/variety.hpp"
#include "ppart/veronese.hpp"

namespace ppart {

Int chardin_upper(int deg_x, int e, int ell) {
  if (deg_x < 1 || e < 0 || ell < 0)
    throw PrecondError("chardin_upper: need deg_x >= 1, e >= 0, ell >= 0");
  return Int(deg_x) * binomial(Int(ell + e), Int(e));
}

Int chardin_philippon_lower(int deg_x, int delta, int d, int e, int ell) {
  const int shift = (d - e) * (delta - 1);
  if (ell < shift + 1)
    throw PrecondError(
        "chardin_philippon_lower: ell below validity threshold " +
        std::to_string(shift + 1));
  return Int(deg_x) * binomial(Int(ell - shift + e), Int(e));
}

Rat prop2_lower(int d, int delta1, int delta2, int ell, const Rat& c) {
  if (delta1 < 1 || delta2 < delta1)
    throw PrecondError("prop2_lower: need 1 <= delta1 <= delta2");
  if (ell < 1 || c <= 0)
    throw PrecondError("prop2_lower: need ell >= 1 and c > 0");
  auto pow_int = [](Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
  };
  const Int lp1 = ell + 1;
  if (ell <= delta1 - 1) return c * Rat(pow_int(lp1, d)) + 1;
  if (ell <= delta2 - 1)
    return c * Rat(Int(delta1) * pow_int(lp1, d - 1)) + 1;
  return c * Rat(Int(delta1) * Int(delta2) * pow_int(lp1, d - 2)) + 1;
}

Int coprime_pair_bound(int d, int deg_x) {
  if (d < 2 || deg_x < 1)
    throw PrecondError("coprime_pair_bound: need d >= 2, deg_x >= 1");
  return Int(d) * Int(d - 1) * Int(deg_x);
}

Int betti_bound(std::span<const int> degs_f, int deg_g, int d) {
  const int e = static_cast<int>(degs_f.size());
  if (e > d) throw PrecondError("betti_bound: more polynomials than d");
  for (int i = 0; i + 1 < e; ++i)
    if (degs_f[i] > degs_f[i + 1])
      throw PrecondError("betti_bound: degrees must be sorted nondecreasing");
  if (e > 0 && deg_g < degs_f[e - 1])
    throw PrecondError("betti_bound: deg_g must dominate the f-degrees");
  Int r = 1;
  for (int deg : degs_f) r *= deg;
  for (int i = 0; i < d - e; ++i) r *= deg_g;
  return r;
}

DegreeCheckReport degree_inequalities(const VarietySpec& spec) {
  DegreeCheckReport rep;
  auto add = [&](std::string name, std::string detail, bool pass) {
    rep.checks.push_back(DegreeCheck{std::move(name), std::move(detail), pass});
  };

  const int codim = spec.codimension();
  {
    std::ostringstream os;
    os << "dim_x = " << spec.dim_x << " within {d-2, d-1, d} for d = "
       << spec.dimension;
    add("codimension_range", os.str(), codim >= 0 && codim <= 2);
  }
  {
    std::ostringstream os;
    os << spec.delta1 << " <= " << spec.delta2;
    add("delta_ordering", os.str(), spec.delta1 <= spec.delta2);
  }
  {
    std::ostringstream os;
    os << spec.delta2 << " <= " << spec.deg_x;
    add("delta_le_deg", os.str(), Int(spec.delta2) <= Int(spec.deg_x));
  }
  {
    Int cap = 1;
    for (int i = 0; i < codim && codim >= 0; ++i) cap *= spec.delta2;
    std::ostringstream os;
    os << spec.deg_x << " <= delta2^(d-e) = " << cap;
    add("deg_le_delta_power", os.str(), Int(spec.deg_x) <= cap);
  }
  if (codim == 2) {
    Int cap = Int(spec.delta1) * Int(spec.delta2);
    std::ostringstream os;
    os << spec.deg_x << " <= delta1*delta2 = " << cap;
    add("deg_le_delta1_delta2", os.str(), Int(spec.deg_x) <= cap);
  }
  return rep;
}

}  // namespace ppart
