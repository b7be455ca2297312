// Total coordinate transformations tau : alpha -> alpha, the substitution
// indices of the signature.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pea/config.hpp"

namespace pea {

class Transformation {
public:
  Transformation() = default;
  explicit Transformation(std::vector<std::uint32_t> image)
      : img_(std::move(image)) {
    for (auto v : img_)
      if (v >= img_.size())
        throw Error("Transformation: image value out of range");
  }

  static Transformation identity(std::uint32_t alpha) {
    std::vector<std::uint32_t> img(alpha);
    for (std::uint32_t i = 0; i < alpha; ++i) img[i] = i;
    return Transformation(std::move(img));
  }

  // The map [i|j]: sends i to j and fixes everything else.
  static Transformation replacement(std::uint32_t alpha, std::uint32_t i,
                                    std::uint32_t j) {
    if (i >= alpha || j >= alpha)
      throw Error("Transformation::replacement: index out of range");
    auto t = identity(alpha);
    t.img_[i] = j;
    return t;
  }

  // Sparse entries src->dst; unlisted coordinates are fixed.
  static Transformation from_partial(
      std::uint32_t alpha,
      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries) {
    auto t = identity(alpha);
    std::set<std::uint32_t> seen;
    for (auto [src, dst] : entries) {
      if (src >= alpha || dst >= alpha)
        throw Error("Transformation::from_partial: index out of range");
      if (!seen.insert(src).second)
        throw Error("Transformation::from_partial: duplicate source index");
      t.img_[src] = dst;
    }
    return t;
  }

  std::uint32_t arity() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t operator()(std::uint32_t i) const { return img_.at(i); }
  const std::vector<std::uint32_t>& image() const { return img_; }

  // sup(tau) = { i : tau(i) != i }, always derived from the map itself.
  std::vector<std::uint32_t> support() const {
    std::vector<std::uint32_t> s;
    for (std::uint32_t i = 0; i < arity(); ++i)
      if (img_[i] != i) s.push_back(i);
    return s;
  }

  bool is_identity() const { return support().empty(); }

  bool is_permutation() const {
    std::vector<bool> hit(arity(), false);
    for (auto v : img_) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    return true;
  }

  bool injective_on(const std::vector<std::uint32_t>& dom) const {
    std::set<std::uint32_t> vals;
    for (auto i : dom)
      if (!vals.insert(img_.at(i)).second) return false;
    return true;
  }

  std::vector<std::uint32_t> preimage(
      const std::vector<std::uint32_t>& target) const {
    std::set<std::uint32_t> t(target.begin(), target.end());
    std::vector<std::uint32_t> pre;
    for (std::uint32_t i = 0; i < arity(); ++i)
      if (t.count(img_[i])) pre.push_back(i);
    return pre;
  }

  bool operator==(const Transformation& o) const { return img_ == o.img_; }

private:
  std::vector<std::uint32_t> img_;
};

// (sigma o tau)(i) = sigma(tau(i)); postulate form s_{sigma o tau} = s_sigma o s_tau.
inline Transformation compose(const Transformation& sigma,
                              const Transformation& tau) {
  if (sigma.arity() != tau.arity())
    throw Error("compose: arity mismatch");
  std::vector<std::uint32_t> img(tau.arity());
  for (std::uint32_t i = 0; i < tau.arity(); ++i) img[i] = sigma(tau(i));
  return Transformation(std::move(img));
}

}  // namespace pea
