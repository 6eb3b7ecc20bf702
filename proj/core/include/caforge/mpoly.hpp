#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "caforge/coeff.hpp"

namespace caforge {

inline constexpr int kMaxVars = 16;

// Exponent vector with 16-bit entries and cached total degree.
struct ExpVec {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  std::uint16_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

  void set(int i, std::uint16_t v) {
    deg = deg - e[static_cast<std::size_t>(i)] + v;
    e[static_cast<std::size_t>(i)] = v;
  }

  bool operator==(const ExpVec& o) const { return deg == o.deg && e == o.e; }

  bool divides(const ExpVec& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<std::size_t>(i)] > o.e[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  static ExpVec lcm(const ExpVec& a, const ExpVec& b);
  static ExpVec sum(const ExpVec& a, const ExpVec& b);
  // a - b, requires b.divides(a)
  static ExpVec diff(const ExpVec& a, const ExpVec& b);
  static bool coprime(const ExpVec& a, const ExpVec& b);

  // Bitmask of variables with positive exponent.
  std::uint32_t support() const;
};

// grevlex compare restricted to variable window [lo, hi): sign of a - b.
int grevlex_cmp(const ExpVec& a, const ExpVec& b, int lo, int hi);
int lex_cmp(const ExpVec& a, const ExpVec& b, int lo, int hi);

enum class OrderKind { grevlex, lex, block };

// Term order on a ring of nvars variables. The block order compares the
// elimination block [elim_begin, nvars) first (grevlex), then the inner
// variables [0, elim_begin) with the inner kind; it is an elimination order
// for the trailing block.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  int elim_begin = 0;
  OrderKind inner = OrderKind::grevlex;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {OrderKind::lex, 0, OrderKind::grevlex}; }
  static MonomialOrder block_elim_last(int elim_begin,
                                       OrderKind inner = OrderKind::grevlex) {
    return {OrderKind::block, elim_begin, inner};
  }

  int compare(const ExpVec& a, const ExpVec& b, int nvars) const;
  bool less(const ExpVec& a, const ExpVec& b, int nvars) const {
    return compare(a, b, nvars) < 0;
  }
  std::string name() const;
};

struct Term {
  ExpVec m;
  Coeff c;
};

// Sparse multivariate polynomial over a fixed field, canonically stored with
// terms in descending grevlex order and no zero coefficients.
class MPoly {
 public:
  MPoly() : MPoly(0, Field::rationals()) {}
  MPoly(int nvars, const Field& f);

  static MPoly zero(int nvars, const Field& f) { return MPoly(nvars, f); }
  static MPoly constant(int nvars, const Coeff& c);
  static MPoly from_int(int nvars, const Field& f, long v);
  static MPoly variable(int nvars, const Field& f, int i);
  static MPoly monomial(int nvars, const Coeff& c, const ExpVec& m);
  static MPoly from_terms(int nvars, const Field& f, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.deg == 0);
  }
  // Constant term (zero coefficient if absent).
  Coeff constant_term() const;

  long total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  struct WDegree {
    enum class Kind { zero, homogeneous, inhomogeneous } kind;
    long degree = 0;  // meaningful only when homogeneous
  };
  WDegree weighted_degree(std::span<const long> weights) const;

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly scaled(const Coeff& c) const;
  MPoly mul_term(const Coeff& c, const ExpVec& m) const;
  MPoly pow(unsigned e) const;

  bool operator==(const MPoly& o) const;
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  // Leading term under an arbitrary order (constant-time for grevlex).
  const Term& leading_term(const MonomialOrder& ord) const;

  Coeff eval(std::span<const Coeff> point) const;
  // Fast prime-field evaluation; requires a prime-field polynomial.
  std::uint64_t eval_fp(std::span<const std::uint32_t> point) const;

  // Image under reduction mod p; requires rational coefficients with
  // p-invertible denominators.
  MPoly reduce_mod(std::uint32_t p) const;

  // Substitute one variable by a polynomial in the same ring.
  MPoly substitute(int var, const MPoly& value) const;

  // Reinterpret in a ring with new_nvars variables, variable i mapped to
  // var_map[i] (or dropped when var_map[i] < 0, requiring absence).
  MPoly remap_vars(int new_nvars, std::span<const int> var_map) const;

  // Exact division; throws std::domain_error when not exactly divisible.
  MPoly divide_exact(const MPoly& d) const;

  // Over Q: content (gcd of numerators / lcm of denominators) with the sign
  // of the grevlex-leading coefficient; primitive_part() = *this / content.
  mpq_class content() const;
  MPoly primitive_part() const;

  static void check_compatible(const MPoly& a, const MPoly& b);

 private:
  void normalize();

  int nvars_;
  Field field_;
  std::vector<Term> terms_;
};

}  // namespace caforge
