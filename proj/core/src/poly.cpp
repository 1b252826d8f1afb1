#include "ppart/poly.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "ppart/errors.hpp"

namespace ppart {

Polynomial::Polynomial(int dimension, TermMap terms)
    : dim_(dimension), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (static_cast<int>(it->first.exponents.size()) != dim_)
      throw PrecondError("monomial length does not match dimension");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Polynomial Polynomial::constant(int dimension, const Rat& c) {
  Polynomial f(dimension);
  f.add_term(Monomial{std::vector<int>(dimension, 0)}, c);
  return f;
}

Polynomial Polynomial::variable(int dimension, int index) {
  if (index < 0 || index >= dimension)
    throw PrecondError("variable index out of range");
  std::vector<int> e(dimension, 0);
  e[index] = 1;
  Polynomial f(dimension);
  f.add_term(Monomial{std::move(e)}, Rat(1));
  return f;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Graded order: the last term has maximal total degree.
  return terms_.rbegin()->first.total_degree();
}

void Polynomial::add_term(const Monomial& m, const Rat& coeff) {
  if (static_cast<int>(m.exponents.size()) != dim_)
    throw PrecondError("monomial length does not match dimension");
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (dim_ != o.dim_) throw PrecondError("polynomial dimension mismatch");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  if (dim_ != o.dim_) throw PrecondError("polynomial dimension mismatch");
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (dim_ != o.dim_) throw PrecondError("polynomial dimension mismatch");
  Polynomial r(dim_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      m.exponents.resize(dim_);
      for (int i = 0; i < dim_; ++i)
        m.exponents[i] = ma.exponents[i] + mb.exponents[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

bool PointSet::has_duplicates() const {
  std::set<std::vector<Rat>> seen;
  for (const auto& p : points)
    if (!seen.insert(p.coordinates).second) return true;
  return false;
}

Rat evaluate(const Polynomial& f, const Point& p) {
  if (f.dimension() != p.dimension())
    throw PrecondError("evaluate: dimension mismatch");
  const int d = f.dimension();
  // Coordinate powers are shared across terms.
  std::vector<std::vector<Rat>> powers(d);
  for (int i = 0; i < d; ++i) powers[i].push_back(Rat(1));
  Rat acc(0);
  for (const auto& [m, c] : f.terms()) {
    Rat term = c;
    for (int i = 0; i < d; ++i) {
      int e = m.exponents[i];
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(powers[i].back() * p.coordinates[i]);
      if (e > 0) term *= powers[i][e];
    }
    acc += term;
  }
  return acc;
}

int sign_at(const Polynomial& f, const Point& p) {
  return sign_of(evaluate(f, p));
}

Polynomial product(std::span<const Polynomial> fs, int dimension) {
  Polynomial r = Polynomial::constant(dimension, Rat(1));
  for (const auto& f : fs) {
    if (f.dimension() != dimension)
      throw PrecondError("product: dimension mismatch");
    r = r * f;
  }
  return r;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

bool skippable(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '#';
  return true;  // blank
}

}  // namespace

Polynomial parse_polynomial(std::istream& in, int dimension) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_polynomial_string(text, dimension);
}

Polynomial parse_polynomial_string(const std::string& text, int dimension) {
  std::istringstream in(text);
  std::string line;
  std::optional<Polynomial> f;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    auto toks = split_ws(line);
    if (toks.size() < 2)
      throw ParseError("polynomial term needs a coefficient and exponents: " +
                       line);
    int d = static_cast<int>(toks.size()) - 1;
    if (dimension >= 0 && d != dimension)
      throw ParseError("polynomial term has " + std::to_string(d) +
                       " exponents, expected " + std::to_string(dimension));
    if (!f) f.emplace(d);
    if (f->dimension() != d)
      throw ParseError("inconsistent exponent count in polynomial file");
    auto coeff = parse_rational(toks[0]);
    if (!coeff) throw ParseError("bad coefficient: " + toks[0]);
    Monomial m;
    for (int i = 0; i < d; ++i) {
      try {
        std::size_t pos = 0;
        int e = std::stoi(toks[i + 1], &pos);
        if (pos != toks[i + 1].size() || e < 0) throw std::invalid_argument("");
        m.exponents.push_back(e);
      } catch (const std::exception&) {
        throw ParseError("bad exponent: " + toks[i + 1]);
      }
    }
    f->add_term(m, *coeff);
  }
  if (!f) {
    if (dimension < 0)
      throw ParseError("empty polynomial input with unknown dimension");
    return Polynomial(dimension);
  }
  return *f;
}

std::string serialize_polynomial(const Polynomial& f) {
  std::ostringstream out;
  for (const auto& [m, c] : f.terms()) {
    out << format_rational(c);
    for (int e : m.exponents) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

std::vector<Polynomial> parse_polynomial_list(std::istream& in, int dimension) {
  std::vector<Polynomial> out;
  std::string line, block;
  auto flush = [&] {
    if (!block.empty()) {
      out.push_back(parse_polynomial_string(block, dimension));
      block.clear();
    }
  };
  while (std::getline(in, line)) {
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) {
      flush();
    } else {
      block += line;
      block += '\n';
    }
  }
  flush();
  return out;
}

std::string serialize_polynomial_list(std::span<const Polynomial> fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += '\n';
    out += serialize_polynomial(fs[i]);
  }
  return out;
}

PointSet parse_points(std::istream& in, int dimension) {
  PointSet ps;
  ps.dimension = dimension;
  std::string line;
  while (std::getline(in, line)) {
    if (skippable(line)) continue;
    auto toks = split_ws(line);
    int d = static_cast<int>(toks.size());
    if (ps.dimension <= 0) ps.dimension = d;
    if (d != ps.dimension)
      throw ParseError("point has " + std::to_string(d) +
                       " coordinates, expected " +
                       std::to_string(ps.dimension));
    Point p;
    for (const auto& t : toks) {
      auto r = parse_rational(t);
      if (!r) throw ParseError("bad coordinate: " + t);
      p.coordinates.push_back(*r);
    }
    ps.points.push_back(std::move(p));
  }
  if (ps.dimension <= 0)
    throw ParseError("empty point file with unknown dimension");
  return ps;
}

std::string serialize_points(const PointSet& ps) {
  std::ostringstream out;
  for (const auto& p : ps.points) {
    for (int i = 0; i < ps.dimension; ++i) {
      if (i) out << ' ';
      out << format_rational(p.coordinates[i]);
    }
    out << '\n';
  }
  return out.str();
}

PointSet load_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open point file: " + path);
  return parse_points(in, -1);
}

Polynomial load_polynomial_file(const std::string& path, int dimension) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polynomial file: " + path);
  return parse_polynomial(in, dimension);
}

std::vector<Polynomial> load_polynomial_list_file(const std::string& path,
                                                  int dimension) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polynomial file: " + path);
  return parse_polynomial_list(in, dimension);
}

}  // namespace ppart
