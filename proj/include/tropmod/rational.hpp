#pragma once

#include <gmpxx.h>

#include <optional>
#include <regex>
#include <string>
#include <string_view>

#include "tropmod/error.hpp"

namespace tropmod {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact textual form: "5/2", "-3", "0".
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

/// Parses "a", "a/b" (b != 0). Whitespace around the token is ignored.
inline Rational parse_rational(std::string_view text) {
  static const std::regex re(R"(^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("not a rational number: '" + s + "'");
  BigInt num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  BigInt den(1);
  if (m[2].matched) den = BigInt(m[2].str());
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses a valuation given either as a rational or as a monomial in the
/// uniformizer: "t", "t^3", "t^(5/2)", "t^-1". Returns the exponent.
inline Rational parse_valuation(std::string_view text) {
  static const std::regex mono(R"(^\s*t\s*(?:\^\s*(?:\(([^()]*)\)|([+-]?\d+)))?\s*$)");
  std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, mono)) {
    if (m[1].matched) return parse_rational(m[1].str());
    if (m[2].matched) return parse_rational(m[2].str());
    return Rational(1);
  }
  return parse_rational(s);
}

/// Positive rational or infinity.
class ExtendedLength {
 public:
  ExtendedLength() = default;
  explicit ExtendedLength(Rational value) : value_(std::move(value)) { value_->canonicalize(); }

  static ExtendedLength infinity() { return ExtendedLength(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Rational& value() const {
    if (!value_) throw ExtendedCurveError("infinite length has no finite value");
    return *value_;
  }

  friend bool operator==(const ExtendedLength& a, const ExtendedLength& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
  }

 private:
  std::optional<Rational> value_;
};

inline std::string to_string(const ExtendedLength& l) {
  return l.is_infinite() ? std::string("inf") : to_string(l.value());
}

/// "inf" / "infinity" / "∞" map to infinity; anything else goes through
/// parse_valuation.
inline ExtendedLength parse_length(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  std::string t = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  if (t == "inf" || t == "infinity" || t == "∞") return ExtendedLength::infinity();
  return ExtendedLength(parse_valuation(t));
}

}  // namespace tropmod
