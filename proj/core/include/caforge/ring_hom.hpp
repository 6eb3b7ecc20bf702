#pragma once

#include <vector>

#include "caforge/mpoly.hpp"

namespace caforge {

// K-algebra map K[x_1..x_s] -> K[x_1..x_t] given by the images of the
// source variables.
class RingHom {
 public:
  RingHom(int source_nvars, int target_nvars, const Field& f,
          std::vector<MPoly> images);

  static RingHom identity(int nvars, const Field& f);
  // x_a <-> x_b, other variables fixed.
  static RingHom transposition(int nvars, const Field& f, int a, int b);

  int source_nvars() const { return source_nvars_; }
  int target_nvars() const { return target_nvars_; }
  const Field& field() const { return field_; }
  const std::vector<MPoly>& images() const { return images_; }

  MPoly apply(const MPoly& p) const;

  bool operator==(const RingHom& o) const;

 private:
  int source_nvars_;
  int target_nvars_;
  Field field_;
  std::vector<MPoly> images_;
};

// Algebra-map composition f after g: x |-> f.apply(g(x)).
RingHom compose(const RingHom& f, const RingHom& g);

}  // namespace caforge
