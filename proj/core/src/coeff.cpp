#include "caforge/coeff.hpp"

namespace caforge {

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero residue");
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt; newt = tmp;
    tmp = r - q * newr;
    r = newr; newr = tmp;
  }
  if (r != 1) throw std::domain_error("residue not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_small_prime(p))
    throw std::invalid_argument("field modulus must be a prime below 2^31");
  return Field(p);
}

std::string Field::name() const {
  return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

Coeff Coeff::zero(const Field& f) {
  Coeff c;
  c.p_ = f.modulus();
  return c;
}

Coeff Coeff::one(const Field& f) { return from_int(f, 1); }

Coeff Coeff::from_int(const Field& f, long v) {
  Coeff c;
  c.p_ = f.modulus();
  if (c.p_ == 0) {
    c.q_ = v;
  } else {
    long m = v % static_cast<long>(c.p_);
    if (m < 0) m += c.p_;
    c.v_ = static_cast<std::uint64_t>(m);
  }
  return c;
}

Coeff Coeff::from_mpz(const Field& f, const mpz_class& v) {
  Coeff c;
  c.p_ = f.modulus();
  if (c.p_ == 0) {
    c.q_ = v;
  } else {
    mpz_class m = v % mpz_class(c.p_);
    if (m < 0) m += c.p_;
    c.v_ = m.get_ui();
  }
  return c;
}

Coeff Coeff::from_mpq(const Field& f, const mpq_class& v) {
  if (f.is_rationals()) {
    Coeff c;
    mpq_class t = v;
    t.canonicalize();
    c.q_ = t;
    return c;
  }
  Coeff num = from_mpz(f, mpq_class(v).get_num());
  Coeff den = from_mpz(f, mpq_class(v).get_den());
  if (den.is_zero())
    throw std::domain_error("coefficient denominator vanishes in F_" +
                            std::to_string(f.modulus()));
  return num / den;
}

bool Coeff::is_zero() const { return p_ ? v_ == 0 : q_ == 0; }
bool Coeff::is_one() const { return p_ ? v_ == 1 % p_ : q_ == 1; }

void Coeff::check_same_field(const Coeff& o) const {
  if (p_ != o.p_) throw std::invalid_argument("mixed-field coefficient arithmetic");
}

Coeff Coeff::operator+(const Coeff& o) const {
  check_same_field(o);
  Coeff r;
  r.p_ = p_;
  if (p_) {
    r.v_ = v_ + o.v_;
    if (r.v_ >= p_) r.v_ -= p_;
  } else {
    r.q_ = q_ + o.q_;
  }
  return r;
}

Coeff Coeff::operator-(const Coeff& o) const {
  check_same_field(o);
  Coeff r;
  r.p_ = p_;
  if (p_) {
    r.v_ = v_ + p_ - o.v_;
    if (r.v_ >= p_) r.v_ -= p_;
  } else {
    r.q_ = q_ - o.q_;
  }
  return r;
}

Coeff Coeff::operator*(const Coeff& o) const {
  check_same_field(o);
  Coeff r;
  r.p_ = p_;
  if (p_)
    r.v_ = v_ * o.v_ % p_;
  else
    r.q_ = q_ * o.q_;
  return r;
}

Coeff Coeff::operator/(const Coeff& o) const {
  check_same_field(o);
  if (o.is_zero()) throw std::domain_error("division by zero coefficient");
  Coeff r;
  r.p_ = p_;
  if (p_)
    r.v_ = v_ * inv_mod(o.v_, p_) % p_;
  else
    r.q_ = q_ / o.q_;
  return r;
}

Coeff Coeff::operator-() const {
  Coeff r;
  r.p_ = p_;
  if (p_)
    r.v_ = v_ == 0 ? 0 : p_ - v_;
  else
    r.q_ = -q_;
  return r;
}

Coeff Coeff::inverse() const {
  return one(field()) / *this;
}

bool Coeff::operator==(const Coeff& o) const {
  return p_ == o.p_ && (p_ ? v_ == o.v_ : q_ == o.q_);
}

const mpq_class& Coeff::rational() const {
  if (p_) throw std::logic_error("rational() on a prime-field element");
  return q_;
}

std::uint64_t Coeff::residue() const {
  if (!p_) throw std::logic_error("residue() on a rational element");
  return v_;
}

std::string Coeff::str() const {
  if (p_) return std::to_string(v_);
  return q_.get_str();
}

int Coeff::compare(const Coeff& a, const Coeff& b) {
  a.check_same_field(b);
  if (a.p_) return a.v_ < b.v_ ? -1 : a.v_ > b.v_ ? 1 : 0;
  return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
}

}  // namespace caforge
