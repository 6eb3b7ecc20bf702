#include "caforge/hasse_schmidt.hpp"

namespace caforge {

Coeff binomial_in(const Field& f, unsigned long n, unsigned long k) {
  if (k > n) return Coeff::zero(f);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Coeff::from_mpz(f, b);
}

UPoly hs_uni(const UPoly& f, unsigned i) {
  const Field& k = f.field();
  if (f.degree() < static_cast<long>(i)) return UPoly::zero(k);
  std::vector<Coeff> out(static_cast<std::size_t>(f.degree() - i + 1), Coeff::zero(k));
  for (long m = static_cast<long>(i); m <= f.degree(); ++m)
    out[static_cast<std::size_t>(m - i)] =
        f.coeff(m) * binomial_in(k, static_cast<unsigned long>(m), i);
  return UPoly::from_coeffs(k, std::move(out));
}

namespace {

// Walk compositions (j_t) of `left` over the support positions, multiplying
// the binomial factors as we go.
void hs_term(const Field& f, const ExpVec& a, const std::vector<int>& support,
             std::size_t pos, unsigned left, ExpVec m, const Coeff& factor,
             std::vector<Term>& out) {
  if (factor.is_zero()) return;
  if (pos == support.size()) {
    if (left == 0) out.push_back({m, factor});
    return;
  }
  int v = support[pos];
  unsigned cap = std::min<unsigned>(left, a.e[static_cast<std::size_t>(v)]);
  // leave room: remaining support must absorb `left - j`
  for (unsigned j = 0; j <= cap; ++j) {
    ExpVec m2 = m;
    m2.set(v, static_cast<std::uint16_t>(a.e[static_cast<std::size_t>(v)] - j));
    hs_term(f, a, support, pos + 1, left - j, m2,
            factor * binomial_in(f, a.e[static_cast<std::size_t>(v)], j), out);
  }
}

}  // namespace

MPoly hs_multi(const MPoly& p, unsigned i) {
  if (i == 0) return p;
  const Field& f = p.field();
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.m.deg < i) continue;
    std::vector<int> support;
    for (int v = 0; v < p.nvars(); ++v)
      if (t.m.e[static_cast<std::size_t>(v)]) support.push_back(v);
    hs_term(f, t.m, support, 0, i, t.m, t.c, out);
  }
  return MPoly::from_terms(p.nvars(), f, std::move(out));
}

MPoly d_once(const MPoly& p) {
  const Field& f = p.field();
  std::vector<Term> out;
  for (const auto& t : p.terms())
    for (int v = 0; v < p.nvars(); ++v) {
      std::uint16_t e = t.m.e[static_cast<std::size_t>(v)];
      if (!e) continue;
      ExpVec m = t.m;
      m.set(v, static_cast<std::uint16_t>(e - 1));
      out.push_back({m, t.c * Coeff::from_int(f, e)});
    }
  return MPoly::from_terms(p.nvars(), f, std::move(out));
}

MPoly d_power(const MPoly& p, unsigned i) {
  MPoly q = p;
  for (unsigned k = 0; k < i; ++k) q = d_once(q);
  return q;
}

MPoly elementary_symmetric(int n, int d, const Field& f) {
  if (d < 0) throw std::invalid_argument("negative symmetric degree");
  if (d == 0) return MPoly::from_int(n, f, 1);
  if (d > n) return MPoly::zero(n, f);
  std::vector<Term> out;
  std::vector<int> idx(static_cast<std::size_t>(d));
  // enumerate d-subsets of {0..n-1} in lexicographic order
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    ExpVec m;
    for (int i : idx) m.set(i, 1);
    out.push_back({m, Coeff::one(f)});
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - d + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return MPoly::from_terms(n, f, std::move(out));
}

}  // namespace caforge
