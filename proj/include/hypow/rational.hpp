#ifndef HYPOW_RATIONAL_HPP
#define HYPOW_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hypow {

// Exact rational over int64 with denominator > 0 and gcd(num, den) == 1.
// All threshold comparisons in this library go through Rat; doubles are
// never used for acceptance decisions.  Intermediate products are widened
// to 128 bits and narrowing back is overflow-checked.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static long long checked_narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: overflow");
    return static_cast<long long>(v);
  }

  static Rat make128(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rat r;
    r.num = checked_narrow(n);
    r.den = checked_narrow(d);
    return r;
  }

  friend Rat operator+(const Rat& x, const Rat& y) {
    return make128((__int128)x.num * y.den + (__int128)y.num * x.den,
                   (__int128)x.den * y.den);
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    return make128((__int128)x.num * y.den - (__int128)y.num * x.den,
                   (__int128)x.den * y.den);
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    return make128((__int128)x.num * y.num, (__int128)x.den * y.den);
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.num == 0) throw std::invalid_argument("Rat: division by zero");
    return make128((__int128)x.num * y.den, (__int128)x.den * y.num);
  }
  Rat operator-() const {
    Rat r;
    r.num = -num;
    r.den = den;
    return r;
  }

  friend bool operator==(const Rat& x, const Rat& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
  friend bool operator<(const Rat& x, const Rat& y) {
    return (__int128)x.num * y.den < (__int128)y.num * x.den;
  }
  friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
  friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
  friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

  Rat pow(int e) const {
    if (e < 0) throw std::invalid_argument("Rat::pow: negative exponent");
    Rat r(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  bool is_integer() const { return den == 1; }

  // floor/ceil as exact integers.
  long long floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
  }
  long long ceil() const {
    long long q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // Parses "p" or "p/q".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(std::stoll(s));
      return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rat: cannot parse '" + s + "'");
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("Rat: out of range '" + s + "'");
    }
  }
};

// n choose r as exact int64 (throws on overflow).
inline long long binom(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  if (r > n - r) r = n - r;
  __int128 acc = 1;
  for (long long i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > INT64_MAX) throw std::overflow_error("binom: overflow");
  }
  return static_cast<long long>(acc);
}

}  // namespace hypow

#endif
