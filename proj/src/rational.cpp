#include "elemdiff/rational.hpp"

#include "elemdiff/error.hpp"

namespace elemdiff {

Rational parseRational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ArgumentError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ArgumentError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string toString(const Rational& q) { return q.get_str(); }

}  // namespace elemdiff
