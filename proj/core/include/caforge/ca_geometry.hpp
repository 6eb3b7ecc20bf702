#pragma once

#include <span>
#include <vector>

#include "caforge/ring_hom.hpp"
#include "caforge/upoly.hpp"

namespace caforge {

using RootTuple = std::vector<Coeff>;

// Kernel generators of the evaluation x_i -> X - alpha_i relative to a base
// coordinate: x_j - x_base + (alpha_j - alpha_base) for j != base.
std::vector<MPoly> characteristic_kernel(const RootTuple& alphas, int base = 0);

// Substitute x_i := X - alpha_i.
UPoly characteristic_apply(const MPoly& p, const RootTuple& alphas);

// prod_i (X + alpha_i), the monic polynomial attached to a root tuple.
UPoly root_map(const RootTuple& alphas);

// Shift a tuple into the j-th coordinate hyperplane (0-based j): v_l - v_j
// everywhere, so slot j becomes 0. The _drop variant removes slot j.
RootTuple shift_projection(const RootTuple& v, int j);
RootTuple shift_projection_drop(const RootTuple& v, int j);

// Coordinate involution on K[x_1..x_m] (1-based j): x_l -> x_l - x_j for
// l != j and x_j -> -x_j; the identity for j > m.
RingHom phi_endo(int j, int m, const Field& f);

// One-parameter deformation into K[x_1..x_m, T] (T is the last variable):
// x_l -> x_l - T x_j for l != j, x_j -> (1 - 2T) x_j; the plain inclusion
// for j > m. T = 1 recovers phi_endo, T = 0 the inclusion.
RingHom phi_T_endo(int j, int m, const Field& f);

// Generators attached to an index tuple (j_1..j_l), 1 <= l <= n-1, entries
// in [1, n+1]: entry i is the j_i-involution image (deformed: its T-version)
// of the (i-1)-th divided-power derivative of x_1 * .. * x_{n-1}. Entry i is
// homogeneous of degree n-i in the x variables.
std::vector<MPoly> tuple_ideal_generators(int n, std::span<const int> tuple,
                                          bool deformed, const Field& f);

// Slot i = (-1)^i e_i(point), i = 1..n: the coefficient vector of
// prod (X - v_i) below the leading term.
RootTuple vieta_map(const RootTuple& point);

// Root-side membership test: some shift projection of v kills the
// (n - i)-th elementary symmetric polynomial of the other coordinates.
bool xi_membership(const RootTuple& v, int i);

}  // namespace caforge
