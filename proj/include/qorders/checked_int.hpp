#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qorders {

// Signed 128-bit integer with overflow checking. All arithmetic in this
// project routes through Int; an operation that would wrap throws
// std::overflow_error instead of returning garbage.
class Int {
 public:
  constexpr Int() : v_(0) {}
  constexpr Int(int v) : v_(v) {}            // NOLINT(google-explicit-constructor)
  constexpr Int(long v) : v_(v) {}           // NOLINT(google-explicit-constructor)
  constexpr Int(long long v) : v_(v) {}      // NOLINT(google-explicit-constructor)

  static constexpr Int raw(__int128 v) {
    Int r;
    r.v_ = v;
    return r;
  }
  constexpr __int128 value() const { return v_; }

  friend Int operator+(Int a, Int b) {
    __int128 r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Int: addition overflow");
    return raw(r);
  }
  friend Int operator-(Int a, Int b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Int: subtraction overflow");
    return raw(r);
  }
  friend Int operator*(Int a, Int b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw std::overflow_error("Int: multiplication overflow");
    return raw(r);
  }
  friend Int operator/(Int a, Int b) {
    if (b.v_ == 0) throw std::domain_error("Int: division by zero");
    if (b.v_ == -1 && a.v_ == kMin) throw std::overflow_error("Int: division overflow");
    return raw(a.v_ / b.v_);
  }
  friend Int operator%(Int a, Int b) {
    if (b.v_ == 0) throw std::domain_error("Int: modulo by zero");
    if (b.v_ == -1) return Int(0);
    return raw(a.v_ % b.v_);
  }
  Int operator-() const {
    if (v_ == kMin) throw std::overflow_error("Int: negation overflow");
    return raw(-v_);
  }

  Int& operator+=(Int o) { return *this = *this + o; }
  Int& operator-=(Int o) { return *this = *this - o; }
  Int& operator*=(Int o) { return *this = *this * o; }
  Int& operator/=(Int o) { return *this = *this / o; }
  Int& operator%=(Int o) { return *this = *this % o; }

  friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend constexpr auto operator<=>(Int a, Int b) { return a.v_ <=> b.v_; }

  constexpr bool is_zero() const { return v_ == 0; }
  Int abs() const { return v_ < 0 ? -*this : *this; }
  constexpr bool is_even() const { return (v_ & 1) == 0; }

  // Exact conversion; throws if out of the 64-bit range.
  long long to_long_long() const {
    if (v_ > static_cast<__int128>(INT64_MAX) || v_ < static_cast<__int128>(INT64_MIN))
      throw std::overflow_error("Int: value does not fit in 64 bits");
    return static_cast<long long>(v_);
  }

  std::string to_string() const;

 private:
  static constexpr __int128 kMin = static_cast<__int128>(1) << 127;
  __int128 v_;
};

std::string to_string(Int v);
std::ostream& operator<<(std::ostream& os, Int v);

}  // namespace qorders
