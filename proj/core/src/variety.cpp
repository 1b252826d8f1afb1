#include "ppart/variety.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ppart/bounds.hpp"
#include "ppart/errors.hpp"
#include "ppart/rng.hpp"

namespace ppart {

PointSet VarietySpec::sample(std::size_t count, std::uint64_t seed) const {
  PointSet out;
  out.dimension = dimension;
  if (sample_points) {
    if (sample_points->points.empty())
      throw PrecondError("variety sampler: empty stored sample list");
    for (std::size_t i = 0; i < count; ++i)
      out.points.push_back(
          sample_points->points[i % sample_points->points.size()]);
    return out;
  }
  if (parametrization.empty())
    throw PrecondError("variety spec has no sampler");
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Point param;
    for (int j = 0; j < dim_x; ++j)
      param.coordinates.push_back(rng.rat(-12, 12, 7));
    Point p;
    for (const auto& coord : parametrization)
      p.coordinates.push_back(evaluate(coord, param));
    out.points.push_back(std::move(p));
  }
  return out;
}

void VarietySpec::validate() const {
  if (dimension < 1) throw PrecondError("variety spec: dimension must be >= 1");
  auto rep = degree_inequalities(*this);
  if (!rep.all_pass()) {
    std::string msg = "variety spec rejected:";
    for (const auto& c : rep.checks)
      if (!c.pass) msg += " [" + c.name + ": " + c.detail + "]";
    throw PrecondError(msg);
  }
  for (const auto& f : defining)
    if (f.dimension() != dimension)
      throw PrecondError("defining polynomial dimension mismatch");
  if (!parametrization.empty()) {
    if (static_cast<int>(parametrization.size()) != dimension)
      throw PrecondError("parametrization needs one polynomial per coordinate");
    for (const auto& f : parametrization)
      if (f.dimension() != dim_x)
        throw PrecondError("parametrization polynomials must use dim_x vars");
  }
}

VarietySpec load_variety_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open variety spec: " + path);
  const auto base = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp.string() : (base / fp).string();
  };

  VarietySpec spec;
  bool have_sampler = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      bool blank = true;
      for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
      if (blank) continue;
      throw ParseError("variety spec line " + std::to_string(lineno) +
                       ": expected key = value");
    }
    auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.erase(s.begin());
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
      return s;
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    auto as_int = [&](const std::string& v) {
      try {
        std::size_t pos = 0;
        int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return x;
      } catch (const std::exception&) {
        throw ParseError("variety spec: bad integer for " + key + ": " + v);
      }
    };
    if (key == "dimension")
      spec.dimension = as_int(val);
    else if (key == "dim_x")
      spec.dim_x = as_int(val);
    else if (key == "deg_x")
      spec.deg_x = as_int(val);
    else if (key == "delta1")
      spec.delta1 = as_int(val);
    else if (key == "delta2")
      spec.delta2 = as_int(val);
    else if (key == "defining") {
      for (auto& f :
           load_polynomial_list_file(resolve(val), spec.dimension))
        spec.defining.push_back(std::move(f));
    } else if (key == "sampler_points") {
      spec.sample_points = load_points_file(resolve(val));
      have_sampler = true;
    } else if (key == "sampler_param") {
      spec.parametrization = load_polynomial_list_file(resolve(val), -1);
      have_sampler = true;
    } else {
      throw ParseError("variety spec: unknown key " + key);
    }
  }
  if (!have_sampler)
    throw ParseError("variety spec: a sampler_points or sampler_param entry "
                     "is required");
  spec.validate();
  return spec;
}

}  // namespace ppart
