#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "csn/errors.hpp"

namespace csn {

/// Exact rational number.
///
/// Values are always kept in lowest terms with a positive denominator.
/// Small values live in a pair of 64-bit words; anything that overflows
/// is promoted to a GMP rational and demoted again as soon as it fits,
/// so equal values always have identical representations and identical
/// printed form.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d);
  explicit Rat(const mpq_class& q) { set_mpq(q); }

  Rat(const Rat& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rat(Rat&&) noexcept = default;
  Rat& operator=(const Rat& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rat& operator=(Rat&&) noexcept = default;

  /// Parses "p", "p/q" or a decimal string like "-2.375"; all exact.
  static Rat parse(std::string_view text);

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;  // throws DomainError on zero divisor
  Rat operator-() const;

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return compare(o) == 0; }
  bool operator!=(const Rat& o) const { return compare(o) != 0; }
  bool operator<(const Rat& o) const { return compare(o) < 0; }
  bool operator<=(const Rat& o) const { return compare(o) <= 0; }
  bool operator>(const Rat& o) const { return compare(o) > 0; }
  bool operator>=(const Rat& o) const { return compare(o) >= 0; }

  /// Three-way comparison, exact.
  int compare(const Rat& o) const;

  int sign() const;
  bool is_zero() const { return big_ ? big_->get_num() == 0 : num_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
  bool is_integer() const;

  Rat abs() const { return sign() < 0 ? -*this : *this; }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string str() const;
  double to_double() const;
  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

 private:
  using GmpBinary = void (*)(mpq_ptr, mpq_srcptr, mpq_srcptr);

  void set_mpq(const mpq_class& q);  // canonicalizes and demotes if possible
  void demote_if_small();
  Rat gmp_binary(GmpBinary op, const Rat& o) const;
  mpq_srcptr view_into(mpq_t scratch) const;

  // Small representation: num_/den_ reduced, den_ > 0. Unused when big_ set.
  long long num_;
  long long den_;
  std::unique_ptr<mpq_class> big_;
};

inline Rat operator+(long long a, const Rat& b) { return Rat(a) + b; }
inline Rat operator-(long long a, const Rat& b) { return Rat(a) - b; }
inline Rat operator*(long long a, const Rat& b) { return Rat(a) * b; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace csn
