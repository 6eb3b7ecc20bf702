#include "caforge/poly_io.hpp"

#include <cctype>

namespace caforge {

std::string RingNames::name(int i) const {
  if (with_T && i == nvars - 1) return "T";
  return std::string(1, scheme) + std::to_string(i + 1);
}

int RingNames::lookup(std::string_view id) const {
  if (id == "T") return with_T ? nvars - 1 : -1;
  if (id == "X") return base_vars() == 1 ? 0 : -1;
  if (id.size() < 2 || (id[0] != 'x' && id[0] != 'y')) return -1;
  int k = 0;
  for (std::size_t i = 1; i < id.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return -1;
    k = k * 10 + (id[i] - '0');
    if (k > kMaxVars) return -1;
  }
  if (id[1] == '0') return -1;  // no leading zeros, no x0
  return k >= 1 && k <= base_vars() ? k - 1 : -1;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingNames& names, const Field& f)
      : s_(text), names_(names), field_(f) {}

  MPoly run() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MPoly expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    MPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }

  MPoly factor() {
    MPoly base = atom();
    if (eat('^')) {
      unsigned long e = read_uint();
      if (e > 0xffffu) fail("exponent exceeds 16-bit range");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MPoly atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("expected coefficient, variable or '('");
  }

  unsigned long read_uint() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer");
    unsigned long v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (pos_ - start > 18) fail("integer literal too long for exponent");
      ++pos_;
    }
    return v;
  }

  mpz_class read_mpz() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  MPoly number() {
    mpz_class num = read_mpz();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      mpz_class den = read_mpz();
      if (den == 0) fail("zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return MPoly::constant(names_.nvars, Coeff::from_mpq(field_, q));
    }
    return MPoly::constant(names_.nvars, Coeff::from_mpz(field_, num));
  }

  MPoly identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])))) ++pos_;
    std::string_view id = s_.substr(start, pos_ - start);
    int v = names_.lookup(id);
    if (v < 0) {
      pos_ = start;
      fail("unknown variable '" + std::string(id) + "'");
    }
    return MPoly::variable(names_.nvars, field_, v);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  RingNames names_;
  Field field_;
};

void append_monomial(std::string& out, const ExpVec& m, int nvars,
                     const RingNames& names, bool lead_coeff_one) {
  bool first = lead_coeff_one;
  for (int i = 0; i < nvars; ++i) {
    if (!m.e[static_cast<std::size_t>(i)]) continue;
    if (!first) out += '*';
    first = false;
    out += names.name(i);
    if (m.e[static_cast<std::size_t>(i)] >= 2) {
      out += '^';
      out += std::to_string(m.e[static_cast<std::size_t>(i)]);
    }
  }
}

}  // namespace

MPoly parse_poly(std::string_view text, int nvars, const Field& f) {
  return parse_poly(text, RingNames::xs(nvars), f);
}

MPoly parse_poly(std::string_view text, const RingNames& names, const Field& f) {
  if (names.nvars < 0 || names.nvars > kMaxVars)
    throw std::invalid_argument("variable count out of range [0,16]");
  return Parser(text, names, f).run();
}

UPoly parse_upoly(std::string_view text, const Field& f) {
  MPoly p = parse_poly(text, RingNames::xs(1), f);
  std::vector<Coeff> c(static_cast<std::size_t>(p.total_degree() + 1), Coeff::zero(f));
  for (const auto& t : p.terms()) c[t.m.e[0]] = t.c;
  return UPoly::from_coeffs(f, std::move(c));
}

Coeff parse_coeff(std::string_view text, const Field& f) {
  MPoly p = parse_poly(text, RingNames::xs(0), f);
  return p.constant_term();
}

std::string serialize(const MPoly& p, const RingNames& names) {
  if (names.nvars != p.nvars())
    throw std::invalid_argument("naming scheme arity mismatch");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = false;
    Coeff c = t.c;
    if (p.field().is_rationals() && c.rational() < 0) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = c.is_one() && t.m.deg > 0;
    if (!unit) out += c.str();
    append_monomial(out, t.m, p.nvars(), names, unit);
  }
  return out;
}

std::string serialize(const MPoly& p) { return serialize(p, RingNames::xs(p.nvars())); }

std::string serialize_named(const MPoly& p, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != p.nvars())
    throw std::invalid_argument("one name per variable required");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = false;
    Coeff c = t.c;
    if (p.field().is_rationals() && c.rational() < 0) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = c.is_one() && t.m.deg > 0;
    if (!unit) out += c.str();
    bool lead = unit;
    for (int i = 0; i < p.nvars(); ++i) {
      std::uint16_t e = t.m.e[static_cast<std::size_t>(i)];
      if (!e) continue;
      if (!lead) out += '*';
      lead = false;
      out += names[static_cast<std::size_t>(i)];
      if (e >= 2) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

std::string serialize(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    Coeff c = p.coeff(i);
    if (c.is_zero()) continue;
    bool neg = false;
    if (p.field().is_rationals() && c.rational() < 0) {
      neg = true;
      c = -c;
    }
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit = c.is_one() && i > 0;
    if (!unit) out += c.str();
    if (i > 0) {
      if (!unit) out += '*';
      out += 'X';
      if (i >= 2) out += '^' + std::to_string(i);
    }
  }
  return out;
}

}  // namespace caforge
