#include "ppart/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace ppart {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& token) {
  if (token.empty()) return std::nullopt;

  auto slash = token.find('/');
  if (slash != std::string::npos) {
    std::string num = token.substr(0, slash);
    std::string den = token.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    Int d(den);
    if (d == 0) return std::nullopt;
    Rat r(Int(num), d);
    return r;
  }

  auto dot = token.find('.');
  if (dot != std::string::npos) {
    std::string ip = token.substr(0, dot);
    std::string fp = token.substr(dot + 1);
    if (ip.empty() || ip == "+" || ip == "-") ip += "0";
    if (!is_integer_token(ip)) return std::nullopt;
    if (fp.empty()) fp = "0";
    for (char c : fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    Int scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Int whole(ip);
    Int frac(fp);
    bool neg = token[0] == '-';
    Int num = abs(whole) * scale + frac;
    if (neg) num = -num;
    return Rat(num, scale);
  }

  if (!is_integer_token(token)) return std::nullopt;
  return Rat(Int(token));
}

std::string format_rational(const Rat& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rat rational_from_double(double x) {
  if (x == 0.0) return Rat(0);
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  Int num = Int(std::ldexp(m, 53));
  exp -= 53;
  Rat r(num);
  if (exp > 0) {
    r *= Rat(Int(1) << exp);
  } else if (exp < 0) {
    r /= Rat(Int(1) << (-exp));
  }
  return r;
}

Rat rational_approx(double x, const Int& max_den) {
  Rat exact = rational_from_double(x);
  if (denominator(exact) <= max_den) return exact;
  // Continued-fraction convergents of |exact|.
  Rat target = abs(exact);
  Int p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Rat rem = target;
  while (true) {
    Int a = numerator(rem) / denominator(rem);
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rat frac = rem - Rat(a);
    if (frac == 0) break;
    rem = Rat(1) / frac;
  }
  Rat best(p1, q1 == 0 ? Int(1) : q1);
  return exact < 0 ? -best : best;
}

}  // namespace ppart
