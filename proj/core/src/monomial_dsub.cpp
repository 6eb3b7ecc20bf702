#include "caforge/monomial_dsub.hpp"

#include <algorithm>
#include <bit>

#include "caforge/groebner.hpp"
#include "caforge/hasse_schmidt.hpp"
#include "caforge/poly_io.hpp"

namespace caforge {

namespace {

void check_shape(const std::vector<unsigned>& shape) {
  if (shape.empty()) throw std::invalid_argument("empty shape");
  if (static_cast<int>(shape.size()) > kMaxVars)
    throw std::invalid_argument("shape has too many parts");
  for (unsigned r : shape)
    if (r == 0) throw std::invalid_argument("shape parts must be positive");
}

unsigned shape_degree(const std::vector<unsigned>& shape) {
  unsigned n = 0;
  for (unsigned r : shape) n += r;
  return n;
}

MPoly shape_monomial(const std::vector<unsigned>& shape, const Field& f) {
  ExpVec m;
  for (std::size_t i = 0; i < shape.size(); ++i)
    m.set(static_cast<int>(i), static_cast<std::uint16_t>(shape[i]));
  return MPoly::monomial(static_cast<int>(shape.size()), Coeff::one(f), m);
}

}  // namespace

std::vector<MPoly> d_ideal_generators(const std::vector<MPoly>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  std::vector<MPoly> out = gens;
  for (const auto& g : gens) {
    MPoly d = d_once(g);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

std::vector<MPoly> monomial_d_ideal(const std::vector<unsigned>& shape, int j,
                                    const Field& f, DerivKind kind) {
  check_shape(shape);
  unsigned n = shape_degree(shape);
  if (j < 0 || static_cast<unsigned>(j) > n - 1)
    throw std::invalid_argument("derivative order out of range [0, deg-1]");
  MPoly x_r = shape_monomial(shape, f);
  std::vector<MPoly> out;
  out.reserve(static_cast<std::size_t>(j + 1));
  out.push_back(x_r);
  for (int i = 1; i <= j; ++i) {
    MPoly d = kind == DerivKind::directional ? d_power(x_r, static_cast<unsigned>(i))
                                             : hs_multi(x_r, static_cast<unsigned>(i));
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

std::vector<std::vector<int>> component_description(const std::vector<unsigned>& shape,
                                                    int level) {
  check_shape(shape);
  unsigned n = shape_degree(shape);
  if (level < 1 || static_cast<unsigned>(level) > n)
    throw std::invalid_argument("level out of range [1, deg]");
  int k = static_cast<int>(shape.size());
  std::vector<std::uint32_t> qualifying;
  for (std::uint32_t s = 1; s < (1u << k); ++s) {
    int size = std::popcount(s);
    if (size > level) continue;
    unsigned sum = 0;
    for (int i = 0; i < k; ++i)
      if (s & (1u << i)) sum += shape[static_cast<std::size_t>(i)];
    if (sum >= static_cast<unsigned>(level)) qualifying.push_back(s);
  }
  std::vector<std::vector<int>> comps;
  for (std::uint32_t s : qualifying) {
    bool minimal = true;
    for (std::uint32_t t : qualifying)
      if (t != s && (t & s) == t) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    std::vector<int> c;
    for (int i = 0; i < k; ++i)
      if (s & (1u << i)) c.push_back(i);
    comps.push_back(std::move(c));
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return comps;
}

Prop2Report verify_prop2(const std::vector<unsigned>& shape, int level,
                         std::uint64_t budget) {
  check_shape(shape);
  Field q = Field::rationals();
  Prop2Report rep;
  rep.shape = shape;
  rep.level = level;
  rep.components = component_description(shape, level);
  std::vector<MPoly> gens = monomial_d_ideal(shape, level - 1, q);
  int k = static_cast<int>(shape.size());

  // forward: each generator lies in each component's coordinate prime, so
  // each component subspace sits inside the vanishing locus
  for (std::size_t ci = 0; ci < rep.components.size(); ++ci) {
    std::uint32_t mask = 0;
    for (int v : rep.components[ci]) mask |= 1u << v;
    for (const auto& g : gens) {
      bool ok = true;
      for (const auto& t : g.terms())
        if ((t.m.support() & mask) == 0) {
          ok = false;
          break;
        }
      rep.forward.push_back({static_cast<int>(ci), serialize(g), ok});
    }
  }

  // reverse: every choice monomial generating the product of the coordinate
  // primes is in the radical of the thickening ideal
  std::vector<ExpVec> choices{ExpVec{}};
  for (const auto& comp : rep.components) {
    std::vector<ExpVec> next;
    for (const auto& base : choices)
      for (int v : comp) {
        ExpVec m = base;
        m.set(v, static_cast<std::uint16_t>(m[v] + 1));
        next.push_back(m);
      }
    choices = std::move(next);
  }
  std::sort(choices.begin(), choices.end(),
            [](const ExpVec& a, const ExpVec& b) { return grevlex_cmp(a, b, 0, kMaxVars) > 0; });
  choices.erase(std::unique(choices.begin(), choices.end()), choices.end());
  for (const auto& m : choices) {
    MPoly mono = MPoly::monomial(k, Coeff::one(q), m);
    bool ok = radical_membership(mono, gens, budget);
    rep.reverse.push_back({serialize(mono), ok});
  }

  rep.verified = true;
  for (const auto& c : rep.forward) rep.verified = rep.verified && c.ok;
  for (const auto& c : rep.reverse) rep.verified = rep.verified && c.ok;
  return rep;
}

Lemma1Result lemma1_check(const std::vector<unsigned>& shape, int jvar, int m) {
  check_shape(shape);
  int k = static_cast<int>(shape.size());
  if (jvar < 1 || jvar > k) throw std::invalid_argument("variable index out of range");
  if (m < 0) throw std::invalid_argument("negative derivative order");
  Field q = Field::rationals();
  MPoly d = d_power(shape_monomial(shape, q), static_cast<unsigned>(m));
  MPoly restricted = d.substitute(jvar - 1, MPoly::zero(k, q));
  Lemma1Result r;
  r.vanishes = restricted.is_zero();
  r.multiplicity = shape[static_cast<std::size_t>(jvar - 1)] >= static_cast<unsigned>(m) + 1;
  return r;
}

LinearReduction complete_linear_reduction(std::vector<MPoly> gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  int nvars = gens[0].nvars();
  Field f = gens[0].field();
  for (const auto& g : gens)
    if (g.nvars() != nvars || !(g.field() == f))
      throw std::invalid_argument("generators live in different rings");

  LinearReduction out;
  out.remaining.resize(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) out.remaining[static_cast<std::size_t>(i)] = i;

  auto names = [&]() {
    std::vector<std::string> v;
    v.reserve(out.remaining.size());
    for (int orig : out.remaining) v.push_back("x" + std::to_string(orig + 1));
    return v;
  };

  for (;;) {
    std::vector<MPoly> live;
    bool unit = false;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.is_constant()) {
        unit = true;
        break;
      }
      live.push_back(g);
    }
    if (unit) {
      out.unit_ideal = true;
      out.log.push_back("unit ideal: a residue reduced to a nonzero constant");
      out.gens.clear();
      out.nvars = nvars;
      return out;
    }
    gens = std::move(live);

    std::size_t pick = gens.size();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i].total_degree() == 1) {
        pick = i;
        break;
      }
    if (pick == gens.size()) break;

    MPoly lin = gens[static_cast<std::size_t>(pick)];
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(pick));
    int var = -1;
    Coeff a = Coeff::zero(f);
    for (const auto& t : lin.terms())
      if (t.m.deg == 1)
        for (int v = 0; v < nvars; ++v)
          if (t.m.e[static_cast<std::size_t>(v)] && (var < 0 || v < var)) {
            var = v;
            a = t.c;
          }
    // x_var := -(lin - a x_var) / a
    MPoly rest = lin - MPoly::variable(nvars, f, var).scaled(a);
    MPoly value = (-rest).scaled(a.inverse());
    out.log.push_back(names()[static_cast<std::size_t>(var)] + " := " +
                      serialize_named(value, names()));

    std::vector<int> down(static_cast<std::size_t>(nvars));
    for (int i = 0, t = 0; i < nvars; ++i)
      down[static_cast<std::size_t>(i)] = i == var ? -1 : t++;
    for (auto& g : gens)
      g = g.substitute(var, value).remap_vars(nvars - 1, down);
    out.remaining.erase(out.remaining.begin() + var);
    --nvars;
  }

  out.gens = std::move(gens);
  out.nvars = nvars;
  return out;
}

}  // namespace caforge
