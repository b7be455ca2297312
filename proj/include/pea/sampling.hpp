// Deterministic sampling for the check suites.  All draws go through integer
// operations on a seeded mt19937_64 so reruns with the same seed are
// byte-identical across platforms (std distributions are avoided on purpose).
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pea/equiv.hpp"
#include "pea/set_algebra.hpp"
#include "pea/transformation.hpp"

namespace pea {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
  bool coin() { return eng_() & 1; }

private:
  std::mt19937_64 eng_;
};

inline Transformation sample_transformation(std::uint32_t alpha, Rng& rng) {
  std::vector<std::uint32_t> img(alpha);
  for (auto& v : img) v = static_cast<std::uint32_t>(rng.below(alpha));
  return Transformation(std::move(img));
}

inline EquivRel sample_equiv(std::uint32_t alpha, Rng& rng) {
  std::vector<std::uint32_t> labels(alpha);
  for (auto& v : labels) v = static_cast<std::uint32_t>(rng.below(alpha));
  return EquivRel::from_labels(std::move(labels));
}

inline Elem sample_bits(const SetAlgebra& alg, Rng& rng) {
  Elem e = alg.zero();
  for (std::uint64_t i = 0; i < alg.points(); ++i)
    if (rng.coin()) e.bits.set(i);
  return e;
}

// Mixed element generator: uniform bit vectors, diagonal elements, their
// cylindrifications, and substitution images.
inline Elem sample_elem(const SetAlgebra& alg, Rng& rng) {
  switch (rng.below(4)) {
    case 0:
      return sample_bits(alg, rng);
    case 1:
      return alg.diag(sample_equiv(alg.alpha(), rng));
    case 2: {
      std::vector<std::uint32_t> gamma;
      for (std::uint32_t i = 0; i < alg.alpha(); ++i)
        if (rng.coin()) gamma.push_back(i);
      return alg.cyl(gamma, sample_bits(alg, rng));
    }
    default:
      return alg.subst(sample_transformation(alg.alpha(), rng),
                       sample_bits(alg, rng));
  }
}

}  // namespace pea
