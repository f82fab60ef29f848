#ifndef SEMIPART_REPORT_HPP
#define SEMIPART_REPORT_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace semipart {

/// One failed check: the inputs, what the property demanded, and what came out.
struct Violation {
  std::string kind;
  std::string x;
  std::string y;
  std::string expected;
  std::string got;

  bool operator==(const Violation&) const = default;
};

/// Double-quotes a field for line records, escaping '"' and '\'.
inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

inline void write_record(std::ostream& os, const Violation& v) {
  os << "violation " << v.kind << ' ' << quote(v.x) << ' ' << quote(v.y) << ' '
     << quote(v.expected) << ' ' << quote(v.got) << '\n';
}

/// Outcome of a property suite: how many times each check ran, and what failed.
struct CheckReport {
  std::string module;
  std::map<std::string, std::uint64_t> checks;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  void count(const std::string& check, std::uint64_t n = 1) { checks[check] += n; }

  /// Counts `check` and records a violation when `holds` is false.
  bool expect(bool holds, const std::string& check, Violation v) {
    count(check);
    if (!holds) {
      if (v.kind.empty()) v.kind = check;
      violations.push_back(std::move(v));
    }
    return holds;
  }
};

inline void write_records(std::ostream& os, const CheckReport& r) {
  for (const auto& [name, n] : r.checks) os << "check " << r.module << ' ' << name << ' ' << n << '\n';
  for (const auto& v : r.violations) write_record(os, v);
}

}  // namespace semipart

#endif
