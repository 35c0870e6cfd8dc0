#ifndef HKMONO_RATIONAL_HPP
#define HKMONO_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hkmono {

/// Arbitrary-precision rational; every quantity in the library is exact.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Malformed input (bad JSON, unparsable rationals, wrong shapes).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a mathematical precondition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p/q in lowest terms.
inline Rational make_rational(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Throws InputError on anything else.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("not a rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Rational r;
  r.get_num() = BigInt(num);
  r.get_den() = BigInt(den);
  if (r.get_den() == 0) throw InputError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when q = 1.
inline std::string format_rational(const Rational& r) { return r.get_str(); }

/// A value in (1/2)Z stored as twice itself. Used for weight coordinates.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }
  static constexpr HalfInt from_int(std::int64_t v) { return from_twice(2 * v); }
  static HalfInt from_rational(const Rational& r) {
    Rational t = r * 2;
    if (t.get_den() != 1) throw InputError("not a half-integer: " + format_rational(r));
    if (!t.get_num().fits_slong_p()) throw InputError("half-integer out of range");
    return from_twice(t.get_num().get_si());
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool is_zero() const { return twice_ == 0; }
  Rational to_rational() const { return make_rational(static_cast<long>(twice_), 2L); }
  std::string str() const { return format_rational(to_rational()); }

  constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }
  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  std::int64_t twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.str(); }

}  // namespace hkmono

#endif
