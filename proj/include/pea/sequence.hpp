// Alpha-ary sequences over {0,...,base-1} and their canonical rank encoding.
// The encoding is mixed-radix with coordinate 0 most significant, so listings
// of ranks are deterministic and documented.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pea/config.hpp"

namespace pea {

struct Sequence {
  std::vector<std::uint32_t> v;

  std::uint32_t size() const { return static_cast<std::uint32_t>(v.size()); }
  std::uint32_t operator[](std::uint32_t i) const { return v[i]; }
  bool operator==(const Sequence& o) const { return v == o.v; }

  static Sequence identity(std::uint32_t alpha) {
    Sequence s;
    s.v.resize(alpha);
    for (std::uint32_t i = 0; i < alpha; ++i) s.v[i] = i;
    return s;
  }

  bool injective() const {
    for (std::uint32_t i = 0; i < size(); ++i)
      for (std::uint32_t j = i + 1; j < size(); ++j)
        if (v[i] == v[j]) return false;
    return true;
  }
};

inline std::uint64_t rank_of(const AlgebraConfig& cfg, const Sequence& s) {
  if (s.size() != cfg.alpha) throw Error("rank_of: wrong sequence length");
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < cfg.alpha; ++i) {
    if (s[i] >= cfg.base) throw Error("rank_of: coordinate value out of range");
    r = r * cfg.base + s[i];
  }
  return r;
}

inline Sequence sequence_of(const AlgebraConfig& cfg, std::uint64_t rank) {
  Sequence s;
  s.v.resize(cfg.alpha);
  for (std::uint32_t i = cfg.alpha; i-- > 0;) {
    s.v[i] = static_cast<std::uint32_t>(rank % cfg.base);
    rank /= cfg.base;
  }
  if (rank != 0) throw Error("sequence_of: rank out of range");
  return s;
}

}  // namespace pea
