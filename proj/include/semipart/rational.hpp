#ifndef SEMIPART_RATIONAL_HPP
#define SEMIPART_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semipart {

/// Exact rational of unbounded size, always kept in lowest terms.
using Rational = mpq_class;

/// Malformed textual input. `position` is a 0-based offset into the parsed text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A value outside the domain of an operation (x = 0 where x != 0 is needed, etc).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

namespace detail {

inline void skip_spaces(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline std::string read_digits(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (start == pos) throw ParseError("expected digits", start);
  return std::string(s.substr(start, pos - start));
}

}  // namespace detail

/// Reads `int ('/' posint)?` starting at `pos`; `int` may carry a leading '-'.
inline Rational read_rational(std::string_view s, std::size_t& pos, bool allow_sign = true) {
  std::size_t start = pos;
  std::string text;
  if (allow_sign && pos < s.size() && s[pos] == '-') {
    text.push_back('-');
    ++pos;
  }
  text += detail::read_digits(s, pos);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    std::size_t den_pos = pos;
    std::string den = detail::read_digits(s, pos);
    if (den.find_first_not_of('0') == std::string::npos)
      throw ParseError("zero denominator", den_pos);
    text += '/';
    text += den;
  }
  Rational q;
  if (q.set_str(text, 10) != 0) throw ParseError("bad rational", start);
  q.canonicalize();
  return q;
}

/// Parses a complete rational literal such as "-7", "5/6".
inline Rational parse_rational(std::string_view s) {
  std::size_t pos = 0;
  detail::skip_spaces(s, pos);
  Rational q = read_rational(s, pos);
  detail::skip_spaces(s, pos);
  if (pos != s.size()) throw ParseError("trailing input", pos);
  return q;
}

}  // namespace semipart

#endif
