#include "nilfree/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nilfree {

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational literal: " + std::string(text));
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q(s, 10);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

}  // namespace nilfree
