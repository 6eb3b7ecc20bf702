#include "caforge/mpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace caforge {

ExpVec ExpVec::lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  std::uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

ExpVec ExpVec::sum(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kMaxVars; ++i) {
    std::uint32_t s = static_cast<std::uint32_t>(a.e[i]) + b.e[i];
    if (s > 0xffffu) throw std::overflow_error("exponent overflow (16-bit cap)");
    r.e[i] = static_cast<std::uint16_t>(s);
  }
  r.deg = a.deg + b.deg;
  return r;
}

ExpVec ExpVec::diff(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

bool ExpVec::coprime(const ExpVec& a, const ExpVec& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

std::uint32_t ExpVec::support() const {
  std::uint32_t m = 0;
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i]) m |= 1u << i;
  return m;
}

int grevlex_cmp(const ExpVec& a, const ExpVec& b, int lo, int hi) {
  std::uint32_t da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

int lex_cmp(const ExpVec& a, const ExpVec& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

int MonomialOrder::compare(const ExpVec& a, const ExpVec& b, int nvars) const {
  switch (kind) {
    case OrderKind::grevlex:
      return grevlex_cmp(a, b, 0, nvars);
    case OrderKind::lex:
      return lex_cmp(a, b, 0, nvars);
    case OrderKind::block: {
      int c = grevlex_cmp(a, b, elim_begin, nvars);
      if (c) return c;
      return inner == OrderKind::lex ? lex_cmp(a, b, 0, elim_begin)
                                     : grevlex_cmp(a, b, 0, elim_begin);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::block:
      return "block(elim_begin=" + std::to_string(elim_begin) + "," +
             (inner == OrderKind::lex ? "lex" : "grevlex") + ")";
  }
  return "?";
}

MPoly::MPoly(int nvars, const Field& f) : nvars_(nvars), field_(f) {
  if (nvars < 0 || nvars > kMaxVars)
    throw std::invalid_argument("variable count out of range [0,16]");
}

MPoly MPoly::constant(int nvars, const Coeff& c) {
  MPoly p(nvars, c.field());
  if (!c.is_zero()) p.terms_.push_back({ExpVec{}, c});
  return p;
}

MPoly MPoly::from_int(int nvars, const Field& f, long v) {
  return constant(nvars, Coeff::from_int(f, v));
}

MPoly MPoly::variable(int nvars, const Field& f, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  MPoly p(nvars, f);
  ExpVec m;
  m.set(i, 1);
  p.terms_.push_back({m, Coeff::one(f)});
  return p;
}

MPoly MPoly::monomial(int nvars, const Coeff& c, const ExpVec& m) {
  MPoly p(nvars, c.field());
  for (int i = nvars; i < kMaxVars; ++i)
    if (m.e[i]) throw std::invalid_argument("exponent outside declared ring");
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(int nvars, const Field& f, std::vector<Term> terms) {
  MPoly p(nvars, f);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return grevlex_cmp(a.m, b.m, 0, nvars_) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  terms_ = std::move(out);
}

Coeff MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().m.deg == 0) return terms_.back().c;
  return Coeff::zero(field_);
}

long MPoly::total_degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.m.deg));
  return d;
}

bool MPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.m.deg != terms_[0].m.deg) return false;
  return true;
}

MPoly::WDegree MPoly::weighted_degree(std::span<const long> weights) const {
  if (static_cast<int>(weights.size()) != nvars_)
    throw std::invalid_argument("weight vector length mismatch");
  if (terms_.empty()) return {WDegree::Kind::zero, 0};
  std::optional<long> wd;
  for (const auto& t : terms_) {
    long d = 0;
    for (int i = 0; i < nvars_; ++i) d += weights[i] * t.m.e[i];
    if (!wd)
      wd = d;
    else if (*wd != d)
      return {WDegree::Kind::inhomogeneous, 0};
  }
  return {WDegree::Kind::homogeneous, *wd};
}

void MPoly::check_compatible(const MPoly& a, const MPoly& b) {
  if (a.nvars_ != b.nvars_ || !(a.field_ == b.field_))
    throw std::invalid_argument("polynomial ring mismatch");
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_compatible(*this, o);
  MPoly r(nvars_, field_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_cmp(terms_[i].m, o.terms_[j].m, 0, nvars_);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = terms_[i].c + o.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].m, s});
      ++i; ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_, field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, -t.c});
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::mul_term(const Coeff& c, const ExpVec& m) const {
  if (c.is_zero()) return MPoly(nvars_, field_);
  MPoly r(nvars_, field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff cc = t.c * c;
    if (!cc.is_zero()) r.terms_.push_back({ExpVec::sum(t.m, m), cc});
  }
  return r;
}

MPoly MPoly::scaled(const Coeff& c) const { return mul_term(c, ExpVec{}); }

MPoly MPoly::operator*(const MPoly& o) const {
  check_compatible(*this, o);
  if (is_zero() || o.is_zero()) return MPoly(nvars_, field_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].c, o.terms_[0].m);
  if (terms_.size() == 1) return o.mul_term(terms_[0].c, terms_[0].m);
  std::map<ExpVec, Coeff, bool (*)(const ExpVec&, const ExpVec&)> acc(
      [](const ExpVec& a, const ExpVec& b) { return grevlex_cmp(a, b, 0, kMaxVars) > 0; });
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      ExpVec m = ExpVec::sum(a.m, b.m);
      Coeff c = a.c * b.c;
      auto [it, inserted] = acc.emplace(m, c);
      if (!inserted) it->second += c;
    }
  MPoly r(nvars_, field_);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r = from_int(nvars_, field_, 1);
  MPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (nvars_ != o.nvars_ || !(field_ == o.field_) || terms_.size() != o.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

const Term& MPoly::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  if (ord.kind == OrderKind::grevlex) return terms_.front();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (ord.compare(terms_[i].m, terms_[best].m, nvars_) > 0) best = i;
  return terms_[best];
}

Coeff MPoly::eval(std::span<const Coeff> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point arity mismatch");
  Coeff acc = Coeff::zero(field_);
  for (const auto& t : terms_) {
    Coeff v = t.c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

std::uint64_t MPoly::eval_fp(std::span<const std::uint32_t> point) const {
  std::uint64_t p = field_.modulus();
  if (p == 0) throw std::logic_error("eval_fp on a rational polynomial");
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluation point arity mismatch");
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t v = t.c.residue();
    for (int i = 0; i < nvars_; ++i)
      if (t.m.e[i]) v = v * pow_mod(point[i], t.m.e[i], p) % p;
    acc = (acc + v) % p;
  }
  return acc;
}

MPoly MPoly::reduce_mod(std::uint32_t p) const {
  Field fp = Field::prime(p);
  if (!field_.is_rationals()) throw std::logic_error("reduce_mod on a prime-field polynomial");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff c = Coeff::from_mpq(fp, t.c.rational());
    if (!c.is_zero()) out.push_back({t.m, c});
  }
  return from_terms(nvars_, fp, std::move(out));
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
  check_compatible(*this, value);
  if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
  MPoly acc(nvars_, field_);
  for (const auto& t : terms_) {
    ExpVec rest = t.m;
    std::uint16_t k = rest.e[var];
    rest.set(var, 0);
    acc += value.pow(k).mul_term(t.c, rest);
  }
  return acc;
}

MPoly MPoly::remap_vars(int new_nvars, std::span<const int> var_map) const {
  if (static_cast<int>(var_map.size()) != nvars_)
    throw std::invalid_argument("variable map length mismatch");
  MPoly r(new_nvars, field_);
  r.terms_.reserve(terms_.size());
  std::vector<Term> out;
  for (const auto& t : terms_) {
    ExpVec m;
    for (int i = 0; i < nvars_; ++i) {
      if (t.m.e[i] == 0) continue;
      if (var_map[i] < 0)
        throw std::domain_error("polynomial involves a dropped variable");
      if (var_map[i] >= new_nvars)
        throw std::invalid_argument("variable map target out of range");
      m.set(var_map[i], static_cast<std::uint16_t>(m[var_map[i]] + t.m.e[i]));
    }
    out.push_back({m, t.c});
  }
  return from_terms(new_nvars, field_, std::move(out));
}

MPoly MPoly::divide_exact(const MPoly& d) const {
  check_compatible(*this, d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly rem = *this;
  MPoly quot(nvars_, field_);
  const Term& dl = d.terms_.front();
  while (!rem.is_zero()) {
    const Term& rl = rem.terms_.front();
    if (!dl.m.divides(rl.m))
      throw std::domain_error("inexact polynomial division");
    Coeff c = rl.c / dl.c;
    ExpVec m = ExpVec::diff(rl.m, dl.m);
    quot.terms_.push_back({m, c});
    rem -= d.mul_term(c, m);
  }
  // terms were appended in strictly decreasing grevlex order already
  return quot;
}

mpq_class MPoly::content() const {
  if (!field_.is_rationals()) throw std::logic_error("content over a prime field");
  if (terms_.empty()) return 0;
  mpz_class num = 0, den = 1;
  for (const auto& t : terms_) {
    const mpq_class& q = t.c.rational();
    num = gcd(num, q.get_num());
    den = lcm(den, q.get_den());
  }
  mpq_class c(num, den);
  c.canonicalize();
  if (terms_.front().c.rational() < 0) c = -c;
  return c;
}

MPoly MPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpq_class c = content();
  return scaled(Coeff::from_mpq(field_, mpq_class(1) / c));
}

}  // namespace caforge
