#include "caforge/ca_geometry.hpp"

#include "caforge/hasse_schmidt.hpp"

namespace caforge {

namespace {

Field tuple_field(const RootTuple& v) {
  if (v.empty()) throw std::invalid_argument("empty tuple");
  Field f = v[0].field();
  for (const auto& c : v)
    if (!(c.field() == f)) throw std::invalid_argument("mixed-field tuple");
  return f;
}

}  // namespace

std::vector<MPoly> characteristic_kernel(const RootTuple& alphas, int base) {
  Field f = tuple_field(alphas);
  int n = static_cast<int>(alphas.size());
  if (base < 0 || base >= n) throw std::invalid_argument("base index out of range");
  std::vector<MPoly> gens;
  gens.reserve(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n; ++j) {
    if (j == base) continue;
    MPoly g = MPoly::variable(n, f, j) - MPoly::variable(n, f, base) +
              MPoly::constant(n, alphas[static_cast<std::size_t>(j)] -
                                     alphas[static_cast<std::size_t>(base)]);
    gens.push_back(std::move(g));
  }
  return gens;
}

UPoly characteristic_apply(const MPoly& p, const RootTuple& alphas) {
  Field f = tuple_field(alphas);
  if (p.nvars() != static_cast<int>(alphas.size()) || !(p.field() == f))
    throw std::invalid_argument("tuple arity mismatch");
  UPoly acc = UPoly::zero(f);
  for (const auto& t : p.terms()) {
    UPoly prod = UPoly::constant(t.c);
    for (int i = 0; i < p.nvars(); ++i)
      if (t.m.e[static_cast<std::size_t>(i)])
        prod *= UPoly::linear_root(alphas[static_cast<std::size_t>(i)])
                    .pow(t.m.e[static_cast<std::size_t>(i)]);
    acc += prod;
  }
  return acc;
}

UPoly root_map(const RootTuple& alphas) {
  Field f = tuple_field(alphas);
  UPoly acc = UPoly::from_int(f, 1);
  for (const auto& a : alphas) acc *= UPoly::linear_root(-a);
  return acc;
}

RootTuple shift_projection(const RootTuple& v, int j) {
  tuple_field(v);
  if (j < 0 || j >= static_cast<int>(v.size()))
    throw std::invalid_argument("coordinate index out of range");
  RootTuple out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c - v[static_cast<std::size_t>(j)]);
  return out;
}

RootTuple shift_projection_drop(const RootTuple& v, int j) {
  RootTuple s = shift_projection(v, j);
  s.erase(s.begin() + j);
  return s;
}

RingHom phi_endo(int j, int m, const Field& f) {
  if (j < 1) throw std::invalid_argument("involution index is 1-based");
  if (j > m) return RingHom::identity(m, f);
  std::vector<MPoly> im;
  im.reserve(static_cast<std::size_t>(m));
  MPoly xj = MPoly::variable(m, f, j - 1);
  for (int l = 1; l <= m; ++l)
    im.push_back(l == j ? -xj : MPoly::variable(m, f, l - 1) - xj);
  return RingHom(m, m, f, std::move(im));
}

RingHom phi_T_endo(int j, int m, const Field& f) {
  if (j < 1) throw std::invalid_argument("involution index is 1-based");
  std::vector<MPoly> im;
  im.reserve(static_cast<std::size_t>(m));
  if (j > m) {
    for (int l = 0; l < m; ++l) im.push_back(MPoly::variable(m + 1, f, l));
    return RingHom(m, m + 1, f, std::move(im));
  }
  MPoly t = MPoly::variable(m + 1, f, m);
  MPoly xj = MPoly::variable(m + 1, f, j - 1);
  for (int l = 1; l <= m; ++l) {
    if (l == j)
      im.push_back((MPoly::from_int(m + 1, f, 1) - t.scaled(Coeff::from_int(f, 2))) * xj);
    else
      im.push_back(MPoly::variable(m + 1, f, l - 1) - t * xj);
  }
  return RingHom(m, m + 1, f, std::move(im));
}

std::vector<MPoly> tuple_ideal_generators(int n, std::span<const int> tuple,
                                          bool deformed, const Field& f) {
  int m = n - 1;
  if (m < 1) throw std::invalid_argument("degree must be at least 2");
  if (tuple.empty() || static_cast<int>(tuple.size()) > m)
    throw std::invalid_argument("tuple length must be in [1, n-1]");
  for (int j : tuple)
    if (j < 1 || j > n + 1) throw std::invalid_argument("tuple index out of range [1, n+1]");

  ExpVec all;
  for (int v = 0; v < m; ++v) all.set(v, 1);
  MPoly prod = MPoly::monomial(m, Coeff::one(f), all);

  std::vector<MPoly> gens;
  gens.reserve(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    MPoly h = hs_multi(prod, static_cast<unsigned>(i));
    RingHom phi = deformed ? phi_T_endo(tuple[i], m, f) : phi_endo(tuple[i], m, f);
    gens.push_back(phi.apply(h));
  }
  return gens;
}

RootTuple vieta_map(const RootTuple& point) {
  Field f = tuple_field(point);
  UPoly p = UPoly::from_int(f, 1);
  for (const auto& v : point) p *= UPoly::linear_root(v);
  int n = static_cast<int>(point.size());
  RootTuple out;
  out.reserve(point.size());
  for (int i = 1; i <= n; ++i) out.push_back(p.coeff(n - i));
  return out;
}

bool xi_membership(const RootTuple& v, int i) {
  Field f = tuple_field(v);
  int n = static_cast<int>(v.size());
  if (i < 1 || i > n - 1) throw std::invalid_argument("index out of range [1, n-1]");
  MPoly e = elementary_symmetric(n - 1, n - i, f);
  for (int j = 0; j < n; ++j) {
    RootTuple w = shift_projection_drop(v, j);
    if (e.eval(w).is_zero()) return true;
  }
  return false;
}

}  // namespace caforge
