#pragma once

#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>

#include "didp/errors.hpp"

namespace didp {

// A numeric value: an exact 64-bit integer or a double. The infinities are
// stored as doubles and act as sentinels for infeasible / unbounded values.
class Number {
 public:
  Number() : v_(std::int64_t{0}) {}
  Number(std::int64_t i) : v_(i) {}  // NOLINT(google-explicit-constructor)
  Number(int i) : v_(static_cast<std::int64_t>(i)) {}  // NOLINT
  Number(double d) : v_(d) {  // NOLINT
    if (std::isnan(d)) throw EvalError("NaN is not a valid numeric value");
  }

  static Number infinity() { return Number(std::numeric_limits<double>::infinity()); }
  static Number neg_infinity() { return Number(-std::numeric_limits<double>::infinity()); }

  bool is_integer() const { return std::holds_alternative<std::int64_t>(v_); }
  bool is_infinite() const { return !is_integer() && std::isinf(std::get<double>(v_)); }
  bool is_pos_infinity() const { return is_infinite() && std::get<double>(v_) > 0; }
  bool is_neg_infinity() const { return is_infinite() && std::get<double>(v_) < 0; }

  std::int64_t as_int() const {
    if (is_integer()) return std::get<std::int64_t>(v_);
    double d = std::get<double>(v_);
    if (d != std::floor(d) || std::isinf(d) || d < -9.2e18 || d > 9.2e18)
      throw EvalError("value " + to_string() + " is not an integer");
    return static_cast<std::int64_t>(d);
  }
  double as_double() const {
    return is_integer() ? static_cast<double>(std::get<std::int64_t>(v_)) : std::get<double>(v_);
  }

  std::string to_string() const {
    if (is_integer()) return std::to_string(std::get<std::int64_t>(v_));
    double d = std::get<double>(v_);
    if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), d);
    std::string s(buf, res.ptr);
    // Keep continuous literals distinguishable from integer ones.
    if (s.find_first_of(".en") == std::string::npos) s += ".0";
    return s;
  }

  friend std::weak_ordering operator<=>(const Number& a, const Number& b) {
    if (a.is_integer() && b.is_integer()) return std::get<std::int64_t>(a.v_) <=> std::get<std::int64_t>(b.v_);
    long double x = a.is_integer() ? static_cast<long double>(std::get<std::int64_t>(a.v_))
                                   : static_cast<long double>(std::get<double>(a.v_));
    long double y = b.is_integer() ? static_cast<long double>(std::get<std::int64_t>(b.v_))
                                   : static_cast<long double>(std::get<double>(b.v_));
    if (x < y) return std::weak_ordering::less;
    if (x > y) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }
  friend bool operator==(const Number& a, const Number& b) { return (a <=> b) == 0; }

  friend Number operator+(const Number& a, const Number& b) {
    if (a.is_integer() && b.is_integer()) {
      std::int64_t r;
      if (__builtin_add_overflow(a.as_int(), b.as_int(), &r)) throw EvalError("integer overflow in addition");
      return r;
    }
    return checked(a.as_double() + b.as_double());
  }
  friend Number operator-(const Number& a, const Number& b) {
    if (a.is_integer() && b.is_integer()) {
      std::int64_t r;
      if (__builtin_sub_overflow(a.as_int(), b.as_int(), &r)) throw EvalError("integer overflow in subtraction");
      return r;
    }
    return checked(a.as_double() - b.as_double());
  }
  friend Number operator*(const Number& a, const Number& b) {
    if (a.is_integer() && b.is_integer()) {
      std::int64_t r;
      if (__builtin_mul_overflow(a.as_int(), b.as_int(), &r)) throw EvalError("integer overflow in multiplication");
      return r;
    }
    return checked(a.as_double() * b.as_double());
  }
  // Always real-valued; exact integer quotients go through floor_div/ceil_div.
  friend Number operator/(const Number& a, const Number& b) {
    if (b.as_double() == 0.0) throw EvalError("division by zero");
    return checked(a.as_double() / b.as_double());
  }
  Number operator-() const { return Number(0) - *this; }

  std::size_t hash() const {
    if (is_integer()) return std::hash<std::int64_t>()(std::get<std::int64_t>(v_));
    double d = std::get<double>(v_);
    if (d == std::floor(d) && std::abs(d) < 9e18) return std::hash<std::int64_t>()(static_cast<std::int64_t>(d));
    return std::hash<double>()(d);
  }

 private:
  static Number checked(double d) {
    if (std::isnan(d)) throw EvalError("arithmetic produced NaN");
    return Number(d);
  }
  std::variant<std::int64_t, double> v_;
};

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw EvalError("division by zero");
  if (a == std::numeric_limits<std::int64_t>::min() && b == -1) throw EvalError("integer overflow in division");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw EvalError("division by zero");
  if (a == std::numeric_limits<std::int64_t>::min() && b == -1) throw EvalError("integer overflow in division");
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Number min(const Number& a, const Number& b) { return b < a ? b : a; }
inline Number max(const Number& a, const Number& b) { return a < b ? b : a; }

}  // namespace didp
