#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace heegaard {

// Exact rational arithmetic for boundary parameters and chord endpoints.
// Magnitudes stay tiny (fixture data), so int64 components with __int128
// cross products are exact throughout.
struct Rational {
  long long num = 0;
  long long den = 1;  // > 0 always

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::invalid_argument("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Sign of the 2x2 determinant | bx-ax  cx-ax ; by-ay  cy-ay |, i.e. the
// orientation of the point triple (a, b, c). Exact.
inline int orient(const Rational& ax, const Rational& ay,
                  const Rational& bx, const Rational& by,
                  const Rational& cx, const Rational& cy) {
  Rational ux = bx - ax, uy = by - ay;
  Rational vx = cx - ax, vy = cy - ay;
  // sign of ux*vy - vx*uy; denominators are positive so cross-multiply.
  __int128 l = (__int128)ux.num * vy.num * (__int128)(uy.den * vx.den);
  __int128 r = (__int128)vx.num * uy.num * (__int128)(ux.den * vy.den);
  if (l == r) return 0;
  return l < r ? -1 : 1;
}

Rational parse_rational(const std::string& s);

}  // namespace heegaard
