#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "caforge/groebner.hpp"
#include "caforge/upoly.hpp"

namespace caforge {

inline constexpr std::uint64_t kDefaultEnumBudget = 2000000;

struct CAReport {
  UPoly f = UPoly::zero(Field::rationals());
  std::vector<long> gcd_degrees;  // deg gcd(f, f_i) for i = 1..n-1
  bool satisfies_hypothesis = false;
  bool is_pure_power = false;
  bool is_counterexample = false;
};

// Gcd degrees of a monic f (deg >= 2) against all of its divided-power
// derivatives, plus an exact pure-power decision valid in every
// characteristic. is_counterexample = satisfies_hypothesis and not pure.
CAReport ca_check(const UPoly& f);

// Lexicographically least image of y under the weighted scaling
// y_i -> lambda^i y_i, lambda in F_p^*.
std::vector<std::uint32_t> weighted_canonical(std::span<const std::uint32_t> y,
                                              std::uint32_t p);

// Orbit-canonical representatives of the nonzero points of F_p^{n-1} on
// which the first `level` reduced discriminants vanish, ascending lex.
// level = n-1 cuts out the full coefficient-side scheme; level = 0 applies
// no constraint and lists every orbit.
std::vector<std::vector<std::uint32_t>> enumerate_xn_points(
    int n, std::uint32_t p, int level, std::uint64_t enum_budget = kDefaultEnumBudget);

struct SearchResult {
  int n = 0;
  std::uint32_t p = 0;
  std::uint64_t scanned = 0;
  std::vector<CAReport> counterexamples;  // ascending coefficient order
  // the canonicalized coefficient vectors of the counterexamples coincide
  // with the level-(n-1) weighted point enumeration
  bool cross_validated = false;
};

// Exhaustive scan of the monic degree-n polynomials over F_p with f(0) = 0.
SearchResult search_counterexamples(int n, std::uint32_t p,
                                    std::uint64_t enum_budget = kDefaultEnumBudget);

struct BadPrimeEntry {
  std::uint32_t p = 0;
  bool skipped = false;  // scan size exceeded the enumeration budget
  std::uint64_t count = 0;
  bool cross_validated = false;
};

struct BadPrimeScan {
  int n = 0;
  std::uint32_t pmax = 0;
  std::vector<BadPrimeEntry> entries;
};

BadPrimeScan bad_prime_scan(int n, std::uint32_t pmax,
                            std::uint64_t enum_budget = kDefaultEnumBudget);

enum class TupleOutcome { regular, non_regular, budget };

struct TupleResult {
  std::vector<int> tuple;
  TupleOutcome outcome = TupleOutcome::budget;
  int dimension = 0;  // meaningful unless outcome == budget
};

struct SweepReport {
  std::string kind;  // "regseq" or "mainprop"
  int n = 0;
  int length = 0;
  std::string field;
  std::vector<TupleResult> results;  // odometer order over [1, n]^length
  bool all_regular = false;
  bool any_budget = false;  // aggregate verdict inconclusive
};

// Regularity of the undeformed tuple ideals for every index tuple in
// [1, n]^length; "regular" means the homogeneous regular-sequence test holds.
SweepReport tuple_regularity_sweep(int n, int length, const Field& f,
                                   std::uint64_t budget = kDefaultSPairBudget,
                                   int workers = 1);

// For every tuple of length n-1 over Q: saturate the T-deformed tuple ideal
// at 1 - 2T and require dimension exactly 1 (the parameter line). "regular"
// in the report means that equality.
SweepReport mainprop_verify(int n, std::uint64_t budget = kDefaultSPairBudget,
                            int workers = 1);

struct FiberResult {
  std::string alpha;
  int dimension = 0;
  bool singular = false;  // positive-dimensional specialized locus
  bool budget = false;
};

struct FiberScanReport {
  int n = 0;
  std::vector<int> tuple;
  std::vector<FiberResult> fibers;
};

// Specialize the deformed tuple ideal at T := alpha over Q, drop T, and
// measure the fiber dimension in the x variables (0 = the origin only).
FiberScanReport fiber_scan(int n, const std::vector<int>& tuple,
                           const std::vector<Coeff>& alphas,
                           std::uint64_t budget = kDefaultSPairBudget);

// Largest m <= n of the form p^k or 2 p^k.
int q_value(int n);

struct JcReport {
  int n = 0;
  int lmax = 0;
  int q = 0;            // arithmetic expectation marker q_value(n)
  int verified = 0;     // largest length whose sweep came back all-regular
  bool failure_found = false;
  bool budget_hit = false;  // verified is then only a lower bound
};

// Sweeps lengths 1..min(lmax, n-1) in turn, stopping at the first
// non-regular tuple or budget wall.
JcReport jc_lower_bound(int n, int lmax, const Field& f,
                        std::uint64_t budget = kDefaultSPairBudget, int workers = 1);

}  // namespace caforge
