#include "caforge/upoly.hpp"

#include <stdexcept>

namespace caforge {

UPoly UPoly::constant(const Coeff& c) {
  UPoly p(c.field());
  if (!c.is_zero()) p.c_.push_back(c);
  return p;
}

UPoly UPoly::from_int(const Field& f, long v) {
  return constant(Coeff::from_int(f, v));
}

UPoly UPoly::x(const Field& f) {
  UPoly p(f);
  p.c_ = {Coeff::zero(f), Coeff::one(f)};
  return p;
}

UPoly UPoly::from_coeffs(const Field& f, std::vector<Coeff> c) {
  UPoly p(f);
  p.c_ = std::move(c);
  p.trim();
  return p;
}

UPoly UPoly::linear_root(const Coeff& a) {
  UPoly p(a.field());
  p.c_ = {-a, Coeff::one(a.field())};
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Coeff UPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return Coeff::zero(field_);
  return c_[static_cast<std::size_t>(i)];
}

Coeff UPoly::leading_coeff() const {
  if (c_.empty()) return Coeff::zero(field_);
  return c_.back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch");
  UPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Coeff::zero(field_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    if (i < c_.size()) r.c_[i] += c_[i];
    if (i < o.c_.size()) r.c_[i] += o.c_[i];
  }
  r.trim();
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r(field_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch");
  if (is_zero() || o.is_zero()) return UPoly(field_);
  UPoly r(field_);
  r.c_.assign(c_.size() + o.c_.size() - 1, Coeff::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

UPoly UPoly::scaled(const Coeff& c) const {
  UPoly r(field_);
  if (c.is_zero()) return r;
  r.c_.reserve(c_.size());
  for (const auto& a : c_) r.c_.push_back(a * c);
  r.trim();
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r = from_int(field_, 1);
  UPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) throw std::domain_error("monic of zero polynomial");
  return scaled(leading_coeff().inverse());
}

bool UPoly::operator==(const UPoly& o) const {
  if (!(field_ == o.field_) || c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

Coeff UPoly::eval(const Coeff& x) const {
  Coeff acc = Coeff::zero(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (!(field_ == d.field_)) throw std::invalid_argument("field mismatch");
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  UPoly q(field_), r = *this;
  if (degree() < d.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(degree() - d.degree() + 1), Coeff::zero(field_));
  Coeff dl = d.leading_coeff();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    long k = r.degree() - d.degree();
    Coeff c = r.leading_coeff() / dl;
    q.c_[static_cast<std::size_t>(k)] = c;
    // r -= c * X^k * d
    for (long i = 0; i <= d.degree(); ++i)
      r.c_[static_cast<std::size_t>(i + k)] -= c * d.c_[static_cast<std::size_t>(i)];
    r.trim();
  }
  q.trim();
  return {q, r};
}

UPoly upoly_gcd(const UPoly& f, const UPoly& g) {
  UPoly a = f, b = g;
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

}  // namespace caforge
