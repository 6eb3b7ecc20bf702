#pragma once

#include <span>
#include <vector>

#include "caforge/coeff.hpp"

namespace caforge {

// Dense univariate polynomial over a fixed field; coeff(i) multiplies X^i,
// trailing zeros are trimmed so degree() is exact (-1 for the zero poly).
class UPoly {
 public:
  explicit UPoly(const Field& f) : field_(f) {}

  static UPoly zero(const Field& f) { return UPoly(f); }
  static UPoly constant(const Coeff& c);
  static UPoly from_int(const Field& f, long v);
  static UPoly x(const Field& f);
  static UPoly from_coeffs(const Field& f, std::vector<Coeff> c);
  // X - a
  static UPoly linear_root(const Coeff& a);

  const Field& field() const { return field_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  bool is_constant() const { return c_.size() <= 1; }

  Coeff coeff(long i) const;
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff leading_coeff() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly scaled(const Coeff& c) const;
  UPoly pow(unsigned e) const;
  UPoly monic() const;  // throws on zero

  bool operator==(const UPoly& o) const;
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  Coeff eval(const Coeff& x) const;

  // Euclidean division; returns {quotient, remainder}.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

 private:
  void trim();

  Field field_;
  std::vector<Coeff> c_;
};

// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
UPoly upoly_gcd(const UPoly& f, const UPoly& g);

}  // namespace caforge
