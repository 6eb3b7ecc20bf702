#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "caforge/mpoly.hpp"
#include "caforge/poly_io.hpp"
#include "caforge/rng.hpp"
#include "caforge/upoly.hpp"

namespace tu {

using namespace caforge;

inline MPoly P(std::string_view s, int nvars, const Field& f) {
  return parse_poly(s, nvars, f);
}

inline MPoly Py(std::string_view s, int nvars, const Field& f) {
  return parse_poly(s, RingNames::ys(nvars), f);
}

inline UPoly U(std::string_view s, const Field& f) {
  return parse_upoly(s, f);
}

inline MPoly random_mpoly(Rng& rng, const Field& f, int nvars, int max_deg,
                          int nterms, long span = 9) {
  std::vector<Term> ts;
  for (int t = 0; t < nterms; ++t) {
    ExpVec m{};
    for (int v = 0; v < nvars; ++v)
      m.set(v, static_cast<std::uint16_t>(rng.int_in(0, max_deg)));
    ts.push_back({m, rng.coeff(f, span)});
  }
  return MPoly::from_terms(nvars, f, std::move(ts));
}

inline UPoly random_monic(Rng& rng, const Field& f, int deg, long span = 9) {
  std::vector<Coeff> c;
  for (int i = 0; i < deg; ++i) c.push_back(rng.coeff(f, span));
  c.push_back(Coeff::one(f));
  return UPoly::from_coeffs(f, std::move(c));
}

using FpPoint = std::vector<std::uint32_t>;

inline std::vector<FpPoint> all_points(int nvars, std::uint32_t p) {
  std::vector<FpPoint> pts;
  FpPoint cur(static_cast<std::size_t>(nvars), 0);
  for (;;) {
    pts.push_back(cur);
    int i = nvars - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == p - 1) {
      cur[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  return pts;
}

inline bool vanishes_at(const std::vector<MPoly>& gens, const FpPoint& pt) {
  return std::all_of(gens.begin(), gens.end(),
                     [&](const MPoly& g) { return g.eval_fp(pt) == 0; });
}

inline std::set<FpPoint> variety(const std::vector<MPoly>& gens, int nvars,
                                 std::uint32_t p) {
  std::set<FpPoint> out;
  for (const FpPoint& pt : all_points(nvars, p))
    if (vanishes_at(gens, pt)) out.insert(pt);
  return out;
}

}  // namespace tu
