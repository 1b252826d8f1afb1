#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace ppart {

// Ordered key = value report. Serialization is byte-deterministic: insertion
// order is preserved and doubles are printed with %.17g.
class Report {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, long long value);
  void set(const std::string& key, double value);

  bool has(const std::string& key) const;
  // Throws ParseError when the key is absent.
  const std::string& get(const std::string& key) const;

  const std::vector<std::pair<std::string, std::string>>& items() const {
    return items_;
  }

  std::string serialize() const;
  static Report parse(std::istream& in);
  static Report parse_string(const std::string& text);

  void save(const std::string& path) const;
  static Report load(const std::string& path);

  bool operator==(const Report& o) const { return items_ == o.items_; }

 private:
  std::vector<std::pair<std::string, std::string>> items_;
};

// Fixed decimal-round-trip formatting used everywhere a double is reported.
std::string format_double(double x);

}  // namespace ppart
