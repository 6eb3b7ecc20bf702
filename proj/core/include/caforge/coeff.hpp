#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace caforge {

// Base field of a computation: the rationals or a prime field F_p with
// p < 2^31 so that products of residues fit in 64-bit intermediates.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }

  // "Q" or "F<p>", used in reports and config echoes.
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

// Immutable exact field element. Rationals are GMP-backed and always kept
// reduced with positive denominator; prime-field elements are least
// non-negative residues.
class Coeff {
 public:
  Coeff() = default;  // rational zero

  static Coeff zero(const Field& f);
  static Coeff one(const Field& f);
  static Coeff from_int(const Field& f, long v);
  static Coeff from_mpz(const Field& f, const mpz_class& v);
  // Requires den invertible in f (always for Q, den % p != 0 for F_p).
  static Coeff from_mpq(const Field& f, const mpq_class& v);

  Field field() const { return p_ ? Field::prime(p_) : Field::rationals(); }

  bool is_zero() const;
  bool is_one() const;

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;  // throws on division by zero
  Coeff operator-() const;
  Coeff inverse() const;

  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }

  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  // Rational value; only valid over Q.
  const mpq_class& rational() const;
  // Residue in [0, p); only valid over F_p.
  std::uint64_t residue() const;

  // Canonical text: "a" or "a/b" with b > 1 over Q, least residue over F_p.
  std::string str() const;

  // Total order used only for deterministic serialization tie-breaks.
  static int compare(const Coeff& a, const Coeff& b);

 private:
  void check_same_field(const Coeff& o) const;

  mpq_class q_;
  std::uint64_t v_ = 0;
  std::uint32_t p_ = 0;
};

// Deterministic primality test for moduli (p < 2^31).
bool is_small_prime(std::uint32_t p);

// a^e mod p and modular inverse via extended Euclid.
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace caforge
