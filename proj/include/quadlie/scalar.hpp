#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace quadlie {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
public:
  Scalar() = default;
  template <std::integral T>
  Scalar(T v) : v_(static_cast<long>(v)) {}
  Scalar(long num, long den);
  explicit Scalar(mpq_class v);

  /// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument.
  static Scalar parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class &raw() const { return v_; }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Scalar &operator+=(const Scalar &o) { v_ += o.v_; return *this; }
  Scalar &operator-=(const Scalar &o) { v_ -= o.v_; return *this; }
  Scalar &operator*=(const Scalar &o) { v_ *= o.v_; return *this; }
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
  Scalar operator-() const { return Scalar(mpq_class(-v_)); }

  friend bool operator==(const Scalar &a, const Scalar &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Scalar &a, const Scalar &b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Scalar inverse() const;

private:
  mpq_class v_{0};
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

} // namespace quadlie
