#pragma once

#include "caforge/mpoly.hpp"
#include "caforge/upoly.hpp"

namespace caforge {

// Binomial C(n, k) reduced into f; exact in every characteristic.
Coeff binomial_in(const Field& f, unsigned long n, unsigned long k);

// i-th divided-power derivative of a univariate polynomial:
// X^m |-> C(m, i) X^{m-i}. hs_uni(f, 0) == f; in characteristic 0,
// hs_uni(f, i) == f^(i) / i!.
UPoly hs_uni(const UPoly& f, unsigned i);

// Multivariate analogue: x^a |-> sum over j_1+..+j_k = i of
// prod_t C(a_t, j_t) x^{a-j}.
MPoly hs_multi(const MPoly& p, unsigned i);

// (sum_t d/dx_t)^i p, iterated formal directional derivative.
MPoly d_power(const MPoly& p, unsigned i);

// First-order directional derivative sum_t d/dx_t.
MPoly d_once(const MPoly& p);

// Elementary symmetric polynomial e_d in n variables (e_0 = 1, e_d = 0 for
// d > n).
MPoly elementary_symmetric(int n, int d, const Field& f);

}  // namespace caforge
