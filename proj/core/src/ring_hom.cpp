#include "caforge/ring_hom.hpp"

#include <stdexcept>

namespace caforge {

RingHom::RingHom(int source_nvars, int target_nvars, const Field& f,
                 std::vector<MPoly> images)
    : source_nvars_(source_nvars), target_nvars_(target_nvars), field_(f),
      images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_nvars_)
    throw std::invalid_argument("one image per source variable required");
  for (const auto& im : images_)
    if (im.nvars() != target_nvars_ || !(im.field() == field_))
      throw std::invalid_argument("image lives in the wrong ring");
}

RingHom RingHom::identity(int nvars, const Field& f) {
  std::vector<MPoly> im;
  im.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) im.push_back(MPoly::variable(nvars, f, i));
  return RingHom(nvars, nvars, f, std::move(im));
}

RingHom RingHom::transposition(int nvars, const Field& f, int a, int b) {
  RingHom h = identity(nvars, f);
  std::vector<MPoly> im = h.images();
  std::swap(im[static_cast<std::size_t>(a)], im[static_cast<std::size_t>(b)]);
  return RingHom(nvars, nvars, f, std::move(im));
}

MPoly RingHom::apply(const MPoly& p) const {
  if (p.nvars() != source_nvars_ || !(p.field() == field_))
    throw std::invalid_argument("argument lives in the wrong ring");
  MPoly acc(target_nvars_, field_);
  for (const auto& t : p.terms()) {
    MPoly prod = MPoly::constant(target_nvars_, t.c);
    for (int i = 0; i < source_nvars_; ++i)
      if (t.m.e[static_cast<std::size_t>(i)])
        prod *= images_[static_cast<std::size_t>(i)].pow(t.m.e[static_cast<std::size_t>(i)]);
    acc += prod;
  }
  return acc;
}

bool RingHom::operator==(const RingHom& o) const {
  return source_nvars_ == o.source_nvars_ && target_nvars_ == o.target_nvars_ &&
         field_ == o.field_ && images_ == o.images_;
}

RingHom compose(const RingHom& f, const RingHom& g) {
  if (g.target_nvars() != f.source_nvars() || !(f.field() == g.field()))
    throw std::invalid_argument("non-composable homomorphisms");
  std::vector<MPoly> im;
  im.reserve(static_cast<std::size_t>(g.source_nvars()));
  for (const auto& gi : g.images()) im.push_back(f.apply(gi));
  return RingHom(g.source_nvars(), f.target_nvars(), f.field(), std::move(im));
}

}  // namespace caforge
