#pragma once

#include <vector>

#include "caforge/mpoly.hpp"

namespace caforge {

// Resultant of two dense univariate polynomials with MPoly coefficients
// (index = degree in the eliminated variable), computed as the Sylvester
// determinant via fraction-free Bareiss elimination. Declared leading
// coefficients must be nonzero; two constants have no resultant.
MPoly sylvester_resultant(const std::vector<MPoly>& f, const std::vector<MPoly>& g);

// Higher discriminants of the generic monic polynomial
// X^n + y1 X^{n-1} + ... + yn over Q.
//
// entries[i-1] = Res(f, f_i) in Q[y1..yn] for i = 1..n-1, where f_i is the
// i-th divided-power derivative; reduced[i-1] is the same with yn := 0,
// contracted to Q[y1..y_{n-1}]. Both are integer polynomials and weighted
// homogeneous of weighted degree n(n-i) under weights (1, 2, ...).
struct DiscTable {
  int n = 0;
  std::vector<MPoly> entries;
  std::vector<MPoly> reduced;
};

// Fresh computation with construction-time invariant checks; 2 <= n <= 8.
DiscTable disc_table(int n);

// Memoized variant backed by an optional on-disk JSON cache: when the
// CA_FORGE_CACHE environment variable names a directory, tables are loaded
// from disc_<n>.json (validated against the stored content hash and the
// construction invariants) and written there after a fresh computation. A
// fresh computation that disagrees with an existing cache file is an error.
const DiscTable& disc_table_cached(int n);

// Fresh recomputation that must reproduce an existing cache file's content
// hash (mismatch throws); refreshes the file when caching is enabled.
DiscTable disc_table_regen(int n);

// The n-1 reduced discriminants cutting out the coefficient-side scheme.
std::vector<MPoly> xn_defining_system(int n);

// Weights (1, 2, .., k) used for the coefficient ring gradings.
std::vector<long> coefficient_weights(int k);

}  // namespace caforge
