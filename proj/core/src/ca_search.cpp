#include "caforge/ca_search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "caforge/ca_geometry.hpp"
#include "caforge/discriminants.hpp"
#include "caforge/hasse_schmidt.hpp"
#include "caforge/parallel.hpp"

namespace caforge {

namespace {

bool is_pure_power(const UPoly& f) {
  const Field& k = f.field();
  long n = f.degree();
  std::uint32_t p = k.characteristic();
  if (p == 0 || n % p != 0) {
    Coeff alpha = -(f.coeff(n - 1) / Coeff::from_int(k, n));
    return f == UPoly::linear_root(alpha).pow(static_cast<unsigned>(n));
  }
  for (std::uint32_t a = 0; a < p; ++a) {
    Coeff alpha = Coeff::from_int(k, static_cast<long>(a));
    if (f == UPoly::linear_root(alpha).pow(static_cast<unsigned>(n))) return true;
  }
  return false;
}

// p^k when it fits the cap, otherwise throws.
std::uint64_t checked_power(std::uint32_t p, int k, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) {
    if (v > cap / p) throw BudgetError(cap);
    v *= p;
  }
  if (v > cap) throw BudgetError(v);
  return v;
}

void check_scan_args(const char* who, int n, std::uint32_t p) {
  if (n < 2 || n > 8)
    throw std::invalid_argument(std::string(who) + ": degree must be in [2, 8]");
  if (!is_small_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be a prime below 2^31");
}

// Ascending odometer step over base-`radix` digit vectors; false on wrap.
bool odometer_next(std::vector<std::uint32_t>& v, std::uint32_t radix) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < radix) return true;
    v[i] = 0;
  }
  return false;
}

std::vector<std::vector<int>> all_tuples(int n, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(length), 1);
  for (;;) {
    out.push_back(t);
    int i = length - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == n) {
      t[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return out;
}

void finish_sweep(SweepReport& rep) {
  rep.all_regular =
      std::all_of(rep.results.begin(), rep.results.end(),
                  [](const TupleResult& r) { return r.outcome == TupleOutcome::regular; });
  rep.any_budget =
      std::any_of(rep.results.begin(), rep.results.end(),
                  [](const TupleResult& r) { return r.outcome == TupleOutcome::budget; });
}

}  // namespace

CAReport ca_check(const UPoly& f) {
  if (!f.is_monic()) throw std::invalid_argument("ca_check: monic polynomial required");
  long n = f.degree();
  if (n < 2) throw std::invalid_argument("ca_check: degree must be at least 2");
  CAReport rep;
  rep.f = f;
  rep.satisfies_hypothesis = true;
  for (unsigned i = 1; i < static_cast<unsigned>(n); ++i) {
    long d = upoly_gcd(f, hs_uni(f, i)).degree();
    rep.gcd_degrees.push_back(d);
    if (d < 1) rep.satisfies_hypothesis = false;
  }
  rep.is_pure_power = is_pure_power(f);
  rep.is_counterexample = rep.satisfies_hypothesis && !rep.is_pure_power;
  return rep;
}

std::vector<std::uint32_t> weighted_canonical(std::span<const std::uint32_t> y,
                                              std::uint32_t p) {
  std::vector<std::uint32_t> best(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) best[i] = y[i] % p;
  std::vector<std::uint32_t> img(y.size());
  for (std::uint64_t lam = 2; lam < p; ++lam) {
    std::uint64_t pw = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
      pw = pw * lam % p;
      img[i] = static_cast<std::uint32_t>(pw * (y[i] % p) % p);
    }
    if (std::lexicographical_compare(img.begin(), img.end(), best.begin(), best.end()))
      best = img;
  }
  return best;
}

std::vector<std::vector<std::uint32_t>> enumerate_xn_points(int n, std::uint32_t p,
                                                            int level,
                                                            std::uint64_t enum_budget) {
  check_scan_args("enumerate_xn_points", n, p);
  if (level < 0 || level > n - 1)
    throw std::invalid_argument("enumerate_xn_points: level must be in [0, n-1]");
  int m = n - 1;
  checked_power(p, m, enum_budget);

  std::vector<MPoly> system;
  if (level > 0) {
    std::vector<MPoly> reduced = xn_defining_system(n);
    for (int i = 0; i < level; ++i)
      system.push_back(reduced[static_cast<std::size_t>(i)].reduce_mod(p));
  }

  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> y(static_cast<std::size_t>(m), 0);
  while (odometer_next(y, p)) {
    if (weighted_canonical(y, p) != y) continue;
    bool on_locus = true;
    for (const MPoly& g : system)
      if (g.eval_fp(y) != 0) {
        on_locus = false;
        break;
      }
    if (on_locus) out.push_back(y);
  }
  return out;
}

SearchResult search_counterexamples(int n, std::uint32_t p, std::uint64_t enum_budget) {
  check_scan_args("search_counterexamples", n, p);
  int m = n - 1;
  checked_power(p, m, enum_budget);

  Field k = Field::prime(p);
  SearchResult res;
  res.n = n;
  res.p = p;

  std::vector<std::uint32_t> a(static_cast<std::size_t>(m), 0);
  std::vector<Coeff> c(static_cast<std::size_t>(n) + 1, Coeff::zero(k));
  do {
    ++res.scanned;
    c.assign(static_cast<std::size_t>(n) + 1, Coeff::zero(k));
    c[static_cast<std::size_t>(n)] = Coeff::one(k);
    for (int j = 1; j <= m; ++j)
      c[static_cast<std::size_t>(n - j)] =
          Coeff::from_int(k, static_cast<long>(a[static_cast<std::size_t>(j - 1)]));
    CAReport rep = ca_check(UPoly::from_coeffs(k, c));
    if (rep.is_counterexample) res.counterexamples.push_back(rep);
  } while (odometer_next(a, p));

  std::set<std::vector<std::uint32_t>> canon;
  for (const CAReport& rep : res.counterexamples) {
    std::vector<std::uint32_t> y(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j)
      y[static_cast<std::size_t>(j - 1)] =
          static_cast<std::uint32_t>(rep.f.coeff(n - j).residue());
    canon.insert(weighted_canonical(y, p));
  }
  std::vector<std::vector<std::uint32_t>> points =
      enumerate_xn_points(n, p, n - 1, enum_budget);
  res.cross_validated =
      canon == std::set<std::vector<std::uint32_t>>(points.begin(), points.end());
  return res;
}

BadPrimeScan bad_prime_scan(int n, std::uint32_t pmax, std::uint64_t enum_budget) {
  BadPrimeScan scan;
  scan.n = n;
  scan.pmax = pmax;
  for (std::uint64_t p = 2; p <= pmax; ++p) {
    if (!is_small_prime(static_cast<std::uint32_t>(p))) continue;
    BadPrimeEntry entry;
    entry.p = static_cast<std::uint32_t>(p);
    try {
      SearchResult r =
          search_counterexamples(n, static_cast<std::uint32_t>(p), enum_budget);
      entry.count = r.counterexamples.size();
      entry.cross_validated = r.cross_validated;
    } catch (const BudgetError&) {
      entry.skipped = true;
    }
    scan.entries.push_back(entry);
  }
  return scan;
}

SweepReport tuple_regularity_sweep(int n, int length, const Field& f,
                                   std::uint64_t budget, int workers) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("tuple_regularity_sweep: degree must be in [2, 8]");
  if (length < 1 || length > n - 1)
    throw std::invalid_argument("tuple_regularity_sweep: length must be in [1, n-1]");
  SweepReport rep;
  rep.kind = "regseq";
  rep.n = n;
  rep.length = length;
  rep.field = f.name();
  std::vector<std::vector<int>> tuples = all_tuples(n, length);
  rep.results.resize(tuples.size());
  parallel_for(tuples.size(), workers, [&](std::size_t idx) {
    TupleResult r;
    r.tuple = tuples[idx];
    try {
      std::vector<MPoly> gens = tuple_ideal_generators(n, r.tuple, false, f);
      RegSeqResult rs = is_regular_sequence_homogeneous(gens, n - 1, budget);
      r.outcome = rs.regular ? TupleOutcome::regular : TupleOutcome::non_regular;
      r.dimension = rs.dimension;
    } catch (const BudgetError&) {
      r.outcome = TupleOutcome::budget;
    }
    rep.results[idx] = r;
  });
  finish_sweep(rep);
  return rep;
}

SweepReport mainprop_verify(int n, std::uint64_t budget, int workers) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("mainprop_verify: degree must be in [2, 8]");
  Field f = Field::rationals();
  SweepReport rep;
  rep.kind = "mainprop";
  rep.n = n;
  rep.length = n - 1;
  rep.field = f.name();
  int nv = n;  // x_1..x_{n-1} and T
  MPoly line = MPoly::from_int(nv, f, 1) -
               MPoly::variable(nv, f, nv - 1).scaled(Coeff::from_int(f, 2));
  std::vector<std::vector<int>> tuples = all_tuples(n, n - 1);
  rep.results.resize(tuples.size());
  parallel_for(tuples.size(), workers, [&](std::size_t idx) {
    TupleResult r;
    r.tuple = tuples[idx];
    try {
      std::vector<MPoly> gens = tuple_ideal_generators(n, r.tuple, true, f);
      std::vector<MPoly> sat = saturate(gens, line, budget);
      r.dimension = dimension_from_basis(sat, nv, MonomialOrder::grevlex());
      r.outcome = r.dimension == 1 ? TupleOutcome::regular : TupleOutcome::non_regular;
    } catch (const BudgetError&) {
      r.outcome = TupleOutcome::budget;
    }
    rep.results[idx] = r;
  });
  finish_sweep(rep);
  return rep;
}

FiberScanReport fiber_scan(int n, const std::vector<int>& tuple,
                           const std::vector<Coeff>& alphas, std::uint64_t budget) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("fiber_scan: degree must be in [2, 8]");
  Field f = Field::rationals();
  FiberScanReport rep;
  rep.n = n;
  rep.tuple = tuple;
  std::vector<MPoly> gens = tuple_ideal_generators(n, tuple, true, f);
  int nv = n;
  std::vector<int> drop_t(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv - 1; ++i) drop_t[static_cast<std::size_t>(i)] = i;
  drop_t[static_cast<std::size_t>(nv - 1)] = -1;
  for (const Coeff& alpha : alphas) {
    FiberResult fr;
    fr.alpha = alpha.str();
    std::vector<MPoly> fiber;
    for (const MPoly& g : gens) {
      MPoly s = g.substitute(nv - 1, MPoly::constant(nv, alpha))
                    .remap_vars(nv - 1, drop_t);
      if (!s.is_zero()) fiber.push_back(s);
    }
    try {
      if (fiber.empty()) {
        fr.dimension = nv - 1;
      } else {
        GBOptions opts;
        opts.budget = budget;
        fr.dimension = ideal_dimension(fiber, opts);
      }
      fr.singular = fr.dimension > 0;
    } catch (const BudgetError&) {
      fr.budget = true;
    }
    rep.fibers.push_back(fr);
  }
  return rep;
}

int q_value(int n) {
  auto prime_power = [](int v) {
    if (v < 2) return v == 1;
    for (int d = 2; static_cast<long>(d) * d <= v; ++d) {
      if (v % d != 0) continue;
      while (v % d == 0) v /= d;
      return v == 1;
    }
    return true;  // v itself is prime
  };
  for (int m = n; m >= 1; --m)
    if (prime_power(m) || (m % 2 == 0 && prime_power(m / 2))) return m;
  return 0;
}

JcReport jc_lower_bound(int n, int lmax, const Field& f, std::uint64_t budget,
                        int workers) {
  if (n < 2 || n > 8)
    throw std::invalid_argument("jc_lower_bound: degree must be in [2, 8]");
  if (lmax < 1) throw std::invalid_argument("jc_lower_bound: lmax must be positive");
  JcReport rep;
  rep.n = n;
  rep.lmax = std::min(lmax, n - 1);
  rep.q = q_value(n);
  for (int l = 1; l <= rep.lmax; ++l) {
    SweepReport sweep = tuple_regularity_sweep(n, l, f, budget, workers);
    if (sweep.any_budget) {
      rep.budget_hit = true;
      break;
    }
    if (!sweep.all_regular) {
      rep.failure_found = true;
      break;
    }
    rep.verified = l;
  }
  return rep;
}

}  // namespace caforge
