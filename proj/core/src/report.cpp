#include "ppart/report.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ppart/errors.hpp"

namespace ppart {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void Report::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : items_)
    if (k == key) {
      v = value;
      return;
    }
  items_.emplace_back(key, value);
}

void Report::set(const std::string& key, long long value) {
  set(key, std::to_string(value));
}

void Report::set(const std::string& key, double value) {
  set(key, format_double(value));
}

bool Report::has(const std::string& key) const {
  for (const auto& [k, v] : items_)
    if (k == key) return true;
  return false;
}

const std::string& Report::get(const std::string& key) const {
  for (const auto& [k, v] : items_)
    if (k == key) return v;
  throw ParseError("report: missing key " + key);
}

std::string Report::serialize() const {
  std::string out;
  for (const auto& [k, v] : items_) {
    out += k;
    out += " = ";
    out += v;
    out += '\n';
  }
  return out;
}

Report Report::parse(std::istream& in) {
  Report r;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.pop_back();
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("report line " + std::to_string(lineno) +
                       ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty())
      throw ParseError("report line " + std::to_string(lineno) + ": empty key");
    r.items_.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return r;
}

Report Report::parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

void Report::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write report: " + path);
  out << serialize();
}

Report Report::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open report: " + path);
  return parse(in);
}

}  // namespace ppart
