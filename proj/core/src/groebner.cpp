#include "caforge/groebner.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace caforge {

namespace {

// Working polynomials are vectors of terms sorted descending under the run's
// order, kept monic over F_p and integer-primitive with positive lead over Q.
struct Ctx {
  int nvars;
  Field field;
  MonomialOrder ord;
  std::uint64_t budget;
  std::uint64_t spent = 0;

  bool less(const ExpVec& a, const ExpVec& b) const { return ord.compare(a, b, nvars) < 0; }
};

using TermVec = std::vector<Term>;

TermVec to_sorted(const Ctx& c, const MPoly& p) {
  TermVec t = p.terms();
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return c.ord.compare(a.m, b.m, c.nvars) > 0; });
  return t;
}

MPoly to_mpoly(const Ctx& c, TermVec t) {
  return MPoly::from_terms(c.nvars, c.field, std::move(t));
}

void scale_inplace(TermVec& w, const Coeff& s) {
  for (auto& t : w) t.c *= s;
}

// w - c * x^shift * g, both inputs sorted, result sorted; the caller
// guarantees exact cancellation of w's lead when reducing.
TermVec sub_mul(const Ctx& ctx, const TermVec& w, const Coeff& c, const ExpVec& shift,
                const TermVec& g) {
  TermVec out;
  out.reserve(w.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < w.size() && j < g.size()) {
    ExpVec gm = ExpVec::sum(g[j].m, shift);
    int cmp = ctx.ord.compare(w[i].m, gm, ctx.nvars);
    if (cmp > 0) {
      out.push_back(w[i++]);
    } else if (cmp < 0) {
      Coeff v = -(c * g[j].c);
      if (!v.is_zero()) out.push_back({gm, v});
      ++j;
    } else {
      Coeff v = w[i].c - c * g[j].c;
      if (!v.is_zero()) out.push_back({w[i].m, v});
      ++i; ++j;
    }
  }
  for (; i < w.size(); ++i) out.push_back(w[i]);
  for (; j < g.size(); ++j) {
    Coeff v = -(c * g[j].c);
    if (!v.is_zero()) out.push_back({ExpVec::sum(g[j].m, shift), v});
  }
  return out;
}

// Normalize in place: monic over F_p, integer-primitive with positive leading
// coefficient over Q.
void normalize_poly(const Ctx& ctx, TermVec& w) {
  if (w.empty()) return;
  if (ctx.field.is_prime_field()) {
    Coeff inv = w.front().c.inverse();
    if (!inv.is_one()) scale_inplace(w, inv);
    return;
  }
  mpz_class num = 0, den = 1;
  for (const auto& t : w) {
    num = gcd(num, t.c.rational().get_num());
    den = lcm(den, t.c.rational().get_den());
  }
  mpq_class content(num, den);
  content.canonicalize();
  if (w.front().c.rational() < 0) content = -content;
  if (content == 1) return;
  Coeff s = Coeff::from_mpq(ctx.field, mpq_class(1) / content);
  scale_inplace(w, s);
}

void make_monic(const Ctx& ctx, TermVec& w) {
  if (w.empty() || w.front().c.is_one()) return;
  scale_inplace(w, w.front().c.inverse());
}

// Full normal form of w against basis (normalized polys). Over Q the
// remainder is computed with integer cross-multiplication, so it is only
// well-defined up to a positive scalar; callers normalize.
TermVec reduce_full(Ctx& ctx, TermVec w, const std::vector<TermVec>& basis) {
  TermVec done;
  const bool rational = ctx.field.is_rationals();
  while (!w.empty()) {
    const Term& lt = w.front();
    const TermVec* red = nullptr;
    for (const auto& g : basis) {
      if (!g.empty() && g.front().m.divides(lt.m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      done.push_back(lt);
      w.erase(w.begin());
      continue;
    }
    ExpVec shift = ExpVec::diff(lt.m, red->front().m);
    if (rational) {
      const mpq_class& a = red->front().c.rational();  // integer, positive
      const mpq_class& b = lt.c.rational();            // integer
      mpz_class g = gcd(a.get_num(), b.get_num());
      mpz_class mult = a.get_num() / g;
      if (mult < 0) mult = -mult;
      if (mult != 1) {
        Coeff s = Coeff::from_mpz(ctx.field, mult);
        scale_inplace(done, s);
        scale_inplace(w, s);
      }
      Coeff c = w.front().c / red->front().c;
      w = sub_mul(ctx, w, c, shift, *red);
    } else {
      // monic reducer
      w = sub_mul(ctx, w, lt.c, shift, *red);
    }
  }
  return done;
}

struct Pair {
  std::size_t i, j;
  ExpVec lcm;
};

TermVec spair(Ctx& ctx, const TermVec& f, const TermVec& g, const ExpVec& lcm) {
  ExpVec sf = ExpVec::diff(lcm, f.front().m);
  ExpVec sg = ExpVec::diff(lcm, g.front().m);
  TermVec a, b;
  a.reserve(f.size());
  b.reserve(g.size());
  Coeff cf = g.front().c,  // cross coefficients cancel the leads exactly
      cg = f.front().c;
  if (ctx.field.is_rationals()) {
    mpz_class d = gcd(cf.rational().get_num(), cg.rational().get_num());
    Coeff s = Coeff::from_mpz(ctx.field, d).inverse();
    cf *= s;
    cg *= s;
  }
  for (const auto& t : f) a.push_back({ExpVec::sum(t.m, sf), t.c * cf});
  for (const auto& t : g) b.push_back({ExpVec::sum(t.m, sg), t.c * cg});
  // a - b with identical leads
  TermVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = ctx.ord.compare(a[i].m, b[j].m, ctx.nvars);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].m, -b[j].c});
      ++j;
    } else {
      Coeff v = a[i].c - b[j].c;
      if (!v.is_zero()) out.push_back({a[i].m, v});
      ++i; ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].m, -b[j].c});
  return out;
}

// Deterministic whole-polynomial compare for input sorting and tie-breaks.
int poly_cmp(const Ctx& ctx, const TermVec& a, const TermVec& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = ctx.ord.compare(a[i].m, b[i].m, ctx.nvars);
    if (c) return c;
    c = Coeff::compare(a[i].c, b[i].c);
    if (c) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

std::vector<TermVec> buchberger_raw(Ctx& ctx, const std::vector<MPoly>& gens) {
  std::vector<TermVec> b;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    TermVec t = to_sorted(ctx, g);
    normalize_poly(ctx, t);
    b.push_back(std::move(t));
  }
  std::sort(b.begin(), b.end(),
            [&](const TermVec& x, const TermVec& y) { return poly_cmp(ctx, x, y) < 0; });
  b.erase(std::unique(b.begin(), b.end(),
                      [&](const TermVec& x, const TermVec& y) { return poly_cmp(ctx, x, y) == 0; }),
          b.end());

  std::vector<Pair> pending;
  auto push_pairs = [&](std::size_t m) {
    for (std::size_t i = 0; i < m; ++i)
      pending.push_back({i, m, ExpVec::lcm(b[i].front().m, b[m].front().m)});
  };
  for (std::size_t m = 1; m < b.size(); ++m) push_pairs(m);

  // treated(i,j): pair already considered (reduced or discarded)
  auto key = [](std::size_t i, std::size_t j) { return (i << 32) | j; };
  std::vector<std::uint64_t> treated_keys;
  auto treated = [&](std::size_t i, std::size_t j) {
    return std::binary_search(treated_keys.begin(), treated_keys.end(), key(i, j));
  };
  auto mark_treated = [&](std::size_t i, std::size_t j) {
    treated_keys.insert(
        std::lower_bound(treated_keys.begin(), treated_keys.end(), key(i, j)), key(i, j));
  };

  while (!pending.empty()) {
    // normal selection: minimal lcm under the order, ties by index pair
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      int c = ctx.ord.compare(pending[k].lcm, pending[best].lcm, ctx.nvars);
      if (c < 0 || (c == 0 && (pending[k].i < pending[best].i ||
                               (pending[k].i == pending[best].i && pending[k].j < pending[best].j))))
        best = k;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    mark_treated(pr.i, pr.j);

    // product criterion
    if (ExpVec::coprime(b[pr.i].front().m, b[pr.j].front().m)) continue;
    // chain criterion
    bool skip = false;
    for (std::size_t k = 0; k < b.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!b[k].front().m.divides(pr.lcm)) continue;
      std::size_t a1 = std::min(pr.i, k), a2 = std::max(pr.i, k);
      std::size_t c1 = std::min(pr.j, k), c2 = std::max(pr.j, k);
      if (treated(a1, a2) && treated(c1, c2)) skip = true;
    }
    if (skip) continue;

    if (++ctx.spent > ctx.budget) throw BudgetError(ctx.spent - 1);
    TermVec s = spair(ctx, b[pr.i], b[pr.j], pr.lcm);
    TermVec h = reduce_full(ctx, std::move(s), b);
    if (h.empty()) continue;
    normalize_poly(ctx, h);
    b.push_back(std::move(h));
    push_pairs(b.size() - 1);
  }
  return b;
}

std::vector<TermVec> reduce_basis(Ctx& ctx, std::vector<TermVec> b) {
  // minimalize: drop polys whose lead is divisible by another kept lead
  std::vector<bool> keep(b.size(), true);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (b[j].front().m.divides(b[i].front().m) &&
          !(i < j && b[i].front().m == b[j].front().m)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<TermVec> min_basis;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (keep[i]) min_basis.push_back(std::move(b[i]));

  // tail-reduce to the unique reduced basis
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < min_basis.size(); ++i) {
      std::vector<TermVec> others;
      others.reserve(min_basis.size() - 1);
      for (std::size_t j = 0; j < min_basis.size(); ++j)
        if (j != i) others.push_back(min_basis[j]);
      TermVec r = reduce_full(ctx, min_basis[i], others);
      normalize_poly(ctx, r);
      if (poly_cmp(ctx, r, min_basis[i]) != 0) {
        min_basis[i] = std::move(r);
        changed = true;
      }
    }
  }
  for (auto& g : min_basis) make_monic(ctx, g);
  std::sort(min_basis.begin(), min_basis.end(), [&](const TermVec& x, const TermVec& y) {
    int c = ctx.ord.compare(x.front().m, y.front().m, ctx.nvars);
    if (c) return c < 0;
    return poly_cmp(ctx, x, y) < 0;
  });
  return min_basis;
}

Ctx make_ctx(const std::vector<MPoly>& gens, const GBOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  Ctx ctx{gens[0].nvars(), gens[0].field(), opts.order, opts.budget};
  for (const auto& g : gens)
    if (g.nvars() != ctx.nvars || !(g.field() == ctx.field))
      throw std::invalid_argument("generators live in different rings");
  return ctx;
}

}  // namespace

std::vector<MPoly> buchberger(const std::vector<MPoly>& gens, const GBOptions& opts) {
  Ctx ctx = make_ctx(gens, opts);
  std::vector<TermVec> b = reduce_basis(ctx, buchberger_raw(ctx, gens));
  std::vector<MPoly> out;
  out.reserve(b.size());
  for (auto& t : b) out.push_back(to_mpoly(ctx, std::move(t)));
  return out;
}

MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis,
                  const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  Ctx ctx{p.nvars(), p.field(), ord, 0};
  TermVec w = to_sorted(ctx, p);
  std::vector<TermVec> divisors;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.nvars() != p.nvars() || !(g.field() == p.field()))
      throw std::invalid_argument("divisor lives in the wrong ring");
    divisors.push_back(to_sorted(ctx, g));
  }
  // plain field arithmetic keeps the remainder the canonical one
  TermVec done;
  while (!w.empty()) {
    const Term& lt = w.front();
    const TermVec* red = nullptr;
    for (const auto& g : divisors)
      if (g.front().m.divides(lt.m)) {
        red = &g;
        break;
      }
    if (!red) {
      done.push_back(lt);
      w.erase(w.begin());
      continue;
    }
    Coeff c = lt.c / red->front().c;
    w = sub_mul(ctx, w, c, ExpVec::diff(lt.m, red->front().m), *red);
  }
  return to_mpoly(ctx, std::move(done));
}

bool is_unit_ideal(const std::vector<MPoly>& reduced_basis) {
  return reduced_basis.size() == 1 && reduced_basis[0].is_constant() &&
         !reduced_basis[0].is_zero();
}

int dimension_from_basis(const std::vector<MPoly>& reduced_basis, int nvars,
                         const MonomialOrder& ord) {
  if (is_unit_ideal(reduced_basis)) return -1;
  std::vector<std::uint32_t> supports;
  supports.reserve(reduced_basis.size());
  for (const auto& g : reduced_basis)
    supports.push_back(g.leading_term(ord).m.support());
  int best = -1;
  std::uint32_t all = nvars >= 32 ? ~0u : (1u << nvars) - 1;
  for (std::uint32_t s = 0; s <= all; ++s) {
    int pc = std::popcount(s);
    if (pc <= best) continue;
    bool independent = true;
    for (std::uint32_t sup : supports)
      if ((sup & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = pc;
  }
  return best;
}

int ideal_dimension(const std::vector<MPoly>& gens, const GBOptions& opts) {
  std::vector<MPoly> gb = buchberger(gens, opts);
  return dimension_from_basis(gb, gens[0].nvars(), opts.order);
}

std::vector<MPoly> saturate(const std::vector<MPoly>& gens, const MPoly& f,
                            std::uint64_t budget) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  int n = gens[0].nvars();
  if (n + 1 > kMaxVars) throw std::invalid_argument("no room to adjoin a variable");
  const Field& k = gens[0].field();
  std::vector<int> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = i;
  std::vector<MPoly> ext;
  ext.reserve(gens.size() + 1);
  for (const auto& g : gens) ext.push_back(g.remap_vars(n + 1, up));
  MPoly z = MPoly::variable(n + 1, k, n);
  ext.push_back(MPoly::from_int(n + 1, k, 1) - z * f.remap_vars(n + 1, up));

  GBOptions opts;
  opts.order = MonomialOrder::block_elim_last(n);
  opts.budget = budget;
  std::vector<MPoly> gb = buchberger(ext, opts);

  std::vector<int> down(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) down[static_cast<std::size_t>(i)] = i;
  down[static_cast<std::size_t>(n)] = -1;
  std::vector<MPoly> out;
  for (const auto& g : gb) {
    bool has_z = false;
    for (const auto& t : g.terms())
      if (t.m.e[static_cast<std::size_t>(n)]) {
        has_z = true;
        break;
      }
    if (!has_z) out.push_back(g.remap_vars(n, down));
  }
  return out;
}

bool radical_membership(const MPoly& p, const std::vector<MPoly>& gens,
                        std::uint64_t budget) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  if (p.is_zero()) return true;
  int n = p.nvars();
  if (n + 1 > kMaxVars) throw std::invalid_argument("no room to adjoin a variable");
  const Field& k = p.field();
  std::vector<int> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = i;
  std::vector<MPoly> ext;
  ext.reserve(gens.size() + 1);
  for (const auto& g : gens) ext.push_back(g.remap_vars(n + 1, up));
  MPoly z = MPoly::variable(n + 1, k, n);
  ext.push_back(MPoly::from_int(n + 1, k, 1) - z * p.remap_vars(n + 1, up));
  GBOptions opts;
  opts.budget = budget;
  return is_unit_ideal(buchberger(ext, opts));
}

RegSeqResult is_regular_sequence_homogeneous(const std::vector<MPoly>& polys,
                                             int nvars, std::uint64_t budget) {
  if (polys.empty()) throw std::invalid_argument("empty sequence");
  if (static_cast<int>(polys.size()) > nvars)
    throw std::invalid_argument("sequence longer than the variable count");
  for (const auto& p : polys) {
    if (p.is_zero()) throw std::invalid_argument("zero entry in sequence");
    if (p.nvars() != nvars) throw std::invalid_argument("ring arity mismatch");
    if (!p.is_homogeneous()) throw std::invalid_argument("inhomogeneous entry in sequence");
  }
  GBOptions opts;
  opts.budget = budget;
  RegSeqResult r;
  r.expected_dimension = nvars - static_cast<int>(polys.size());
  r.dimension = ideal_dimension(polys, opts);
  r.regular = r.dimension == r.expected_dimension;
  return r;
}

}  // namespace caforge
