#pragma once

#include <string>
#include <vector>

#include "caforge/mpoly.hpp"

namespace caforge {

// Generators together with their directional-derivative images; identically
// zero images are dropped.
std::vector<MPoly> d_ideal_generators(const std::vector<MPoly>& gens);

enum class DerivKind { directional, hasse };

// Generators (x^r, D x^r, .., D^j x^r) of the j-th derivative thickening of
// the monomial x^r, 0 <= j <= deg - 1. The hasse variant substitutes the
// divided-power derivatives for the plain directional powers.
std::vector<MPoly> monomial_d_ideal(const std::vector<unsigned>& shape, int j,
                                    const Field& f,
                                    DerivKind kind = DerivKind::directional);

// Inclusion-minimal coordinate subsets (0-based, sorted) with at most
// `level` elements whose multiplicities sum to at least `level`; the
// components of the level-th thickening's vanishing locus.
std::vector<std::vector<int>> component_description(const std::vector<unsigned>& shape,
                                                    int level);

struct Prop2Report {
  std::vector<unsigned> shape;
  int level = 0;
  std::vector<std::vector<int>> components;
  // union of components inside the vanishing locus: each generator lies in
  // each component's coordinate prime
  struct Containment {
    int component = 0;
    std::string generator;
    bool ok = false;
  };
  // vanishing locus inside the union: each generator of the product of the
  // coordinate primes is in the radical
  struct RadicalCert {
    std::string monomial;
    bool ok = false;
  };
  std::vector<Containment> forward;
  std::vector<RadicalCert> reverse;
  bool verified = false;
};

// Certified two-sided comparison of the level-th thickening against its
// predicted component decomposition, over Q.
Prop2Report verify_prop2(const std::vector<unsigned>& shape, int level,
                         std::uint64_t budget = 200000);

struct Lemma1Result {
  bool vanishes = false;      // D^m x^r restricted to {x_j = 0} is zero
  bool multiplicity = false;  // r_j >= m + 1
};

// The two sides of the hyperplane-containment criterion; they must agree.
Lemma1Result lemma1_check(const std::vector<unsigned>& shape, int jvar, int m);

struct LinearReduction {
  std::vector<MPoly> gens;         // surviving generators, contracted ring
  int nvars = 0;                   // surviving variable count
  std::vector<int> remaining;      // original indices of surviving variables
  std::vector<std::string> log;    // one "x_k := ..." entry per elimination
  bool unit_ideal = false;         // a residue degenerated to a nonzero constant
};

// Repeatedly eliminate variables along degree-one generators by exact linear
// substitution, logging each step; detects collapse to the unit ideal.
LinearReduction complete_linear_reduction(std::vector<MPoly> gens);

}  // namespace caforge
