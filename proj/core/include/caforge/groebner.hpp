#pragma once

#include <cstdint>
#include <vector>

#include "caforge/mpoly.hpp"

namespace caforge {

// Raised when a computation exceeds its work budget. Callers either surface
// it (CLI exit code) or record a "budget" outcome; it is never a wrong answer.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(std::uint64_t spent)
      : std::runtime_error("work budget exhausted after " + std::to_string(spent) +
                           " steps"),
        spent_(spent) {}
  std::uint64_t spent() const { return spent_; }

 private:
  std::uint64_t spent_;
};

inline constexpr std::uint64_t kDefaultSPairBudget = 200000;

struct GBOptions {
  MonomialOrder order = MonomialOrder::grevlex();
  std::uint64_t budget = kDefaultSPairBudget;
};

// Unique reduced Groebner basis (monic, tails fully reduced, sorted by
// ascending leading monomial). Zero generators are dropped; the zero ideal
// yields an empty basis and the unit ideal yields {1}.
std::vector<MPoly> buchberger(const std::vector<MPoly>& gens,
                              const GBOptions& opts = {});

// Remainder of full multivariate division by an ordered list of divisors.
MPoly normal_form(const MPoly& p, const std::vector<MPoly>& basis,
                  const MonomialOrder& ord);

bool is_unit_ideal(const std::vector<MPoly>& reduced_basis);

// Krull dimension of R/I via the maximal-independent-set combinatorics of
// the leading-term ideal; -1 for the unit ideal, nvars for the zero ideal.
int dimension_from_basis(const std::vector<MPoly>& reduced_basis, int nvars,
                         const MonomialOrder& ord);
int ideal_dimension(const std::vector<MPoly>& gens, const GBOptions& opts = {});

// I : f^infinity via the adjoined-variable trick (z appended, block
// elimination order). Returns generators back in the original ring.
std::vector<MPoly> saturate(const std::vector<MPoly>& gens, const MPoly& f,
                            std::uint64_t budget = kDefaultSPairBudget);

// p in rad(I), decided through 1 in (I, 1 - z p).
bool radical_membership(const MPoly& p, const std::vector<MPoly>& gens,
                        std::uint64_t budget = kDefaultSPairBudget);

struct RegSeqResult {
  bool regular = false;
  int dimension = 0;           // dim R/I actually computed
  int expected_dimension = 0;  // nvars - length
};

// Homogeneous nonzero polys form a regular sequence iff the codimension of
// their ideal equals the length.
RegSeqResult is_regular_sequence_homogeneous(const std::vector<MPoly>& polys,
                                             int nvars,
                                             std::uint64_t budget = kDefaultSPairBudget);

}  // namespace caforge
