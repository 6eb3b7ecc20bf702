#pragma once

#include <string>
#include <string_view>

#include "caforge/mpoly.hpp"
#include "caforge/upoly.hpp"

namespace caforge {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Naming scheme binding variable indices to the interchange grammar.
// The first `nvars - with_T` indices are x1..xk (y1..yk always accepted as
// aliases on input); when with_T is set the last index reads and prints as T.
// X is accepted for index 0 in one-variable rings.
struct RingNames {
  int nvars = 0;
  bool with_T = false;
  char scheme = 'x';  // print scheme for the indexed variables: 'x' or 'y'

  static RingNames xs(int n) { return {n, false, 'x'}; }
  static RingNames ys(int n) { return {n, false, 'y'}; }
  // n indexed variables plus a trailing T (ring size n + 1)
  static RingNames xs_T(int n) { return {n + 1, true, 'x'}; }

  int base_vars() const { return nvars - (with_T ? 1 : 0); }
  std::string name(int i) const;
  int lookup(std::string_view id) const;  // -1 when unknown in this ring
};

// Parse with the x-scheme on nvars variables.
MPoly parse_poly(std::string_view text, int nvars, const Field& f);
MPoly parse_poly(std::string_view text, const RingNames& names, const Field& f);
UPoly parse_upoly(std::string_view text, const Field& f);
// Signed integer or a/b literal.
Coeff parse_coeff(std::string_view text, const Field& f);

std::string serialize(const MPoly& p, const RingNames& names);
std::string serialize(const MPoly& p);  // x-scheme
std::string serialize(const UPoly& p);
// Serialize with one explicit name per variable (output only).
std::string serialize_named(const MPoly& p, const std::vector<std::string>& names);

}  // namespace caforge
