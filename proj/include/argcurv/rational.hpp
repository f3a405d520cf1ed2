#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace argcurv {

// Exact fraction of 64-bit integers. Always stored reduced with positive
// denominator; intermediate products go through 128-bit arithmetic and any
// result that cannot be reduced back into 64 bits throws.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

  Rational& operator+=(const Rational& o) {
    __int128 g = std::gcd(den_, o.den_);
    __int128 lhs = static_cast<__int128>(num_) * (o.den_ / g);
    __int128 rhs = static_cast<__int128>(o.num_) * (den_ / g);
    __int128 d = static_cast<__int128>(den_) / g * o.den_;
    assign128(lhs + rhs, d);
    return *this;
  }
  Rational& operator-=(const Rational& o) { return *this += -o; }
  Rational& operator*=(const Rational& o) {
    long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
    assign128(n, d);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this *= Rational(o.den_, o.num_, skip_normalize{});
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Rendered "num/den", reduced, denominator always explicit ("0/1", "-2/3").
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct already_reduced {};
  struct skip_normalize {};
  Rational(long long n, long long d, already_reduced) : num_(n), den_(d) {}
  Rational(long long n, long long d, skip_normalize) : num_(n), den_(d) {
    normalize();
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  void assign128(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    constexpr __int128 lo = -static_cast<__int128>(INT64_MAX);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("rational overflow");
    num_ = static_cast<long long>(n);
    den_ = static_cast<long long>(d);
  }

  long long num_;
  long long den_;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

// Ceiling of p/q for integer p and positive q.
inline long long ceil_div(long long p, long long q) {
  if (q <= 0) throw std::domain_error("ceil_div needs positive divisor");
  long long d = p / q;
  return d + ((p % q != 0 && p > 0) ? 1 : 0);
}

}  // namespace argcurv
