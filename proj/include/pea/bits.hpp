// Fixed-length dynamic bit vector used as the carrier for set-algebra elements
// and partition label sets.
#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace pea {

class Bits {
public:
  Bits() = default;
  explicit Bits(std::uint64_t nbits, bool value = false)
      : n_(nbits), w_((nbits + 63) / 64, value ? ~0ull : 0ull) {
    trim();
  }

  static Bits zeros(std::uint64_t n) { return Bits(n, false); }
  static Bits ones(std::uint64_t n) { return Bits(n, true); }

  std::uint64_t size() const { return n_; }

  bool get(std::uint64_t i) const {
    check(i);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint64_t i, bool v = true) {
    check(i);
    if (v)
      w_[i >> 6] |= 1ull << (i & 63);
    else
      w_[i >> 6] &= ~(1ull << (i & 63));
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : w_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return c;
  }

  // Index of the lowest set bit at or after `from`, or size() if none.
  std::uint64_t next_set(std::uint64_t from = 0) const {
    for (std::uint64_t i = from; i < n_;) {
      std::uint64_t word = w_[i >> 6] >> (i & 63);
      if (word) return i + static_cast<std::uint64_t>(__builtin_ctzll(word));
      i = (i | 63) + 1;
    }
    return n_;
  }

  template <typename Fn>
  void for_each_set(Fn fn) const {
    for (std::uint64_t i = next_set(); i < n_; i = next_set(i + 1)) fn(i);
  }

  Bits operator&(const Bits& o) const {
    Bits r = matched(o);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r = matched(o);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] | o.w_[k];
    return r;
  }
  Bits operator^(const Bits& o) const {
    Bits r = matched(o);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] ^ o.w_[k];
    return r;
  }
  Bits operator~() const {
    Bits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = ~w_[k];
    r.trim();
    return r;
  }
  Bits operator-(const Bits& o) const {  // set difference
    Bits r = matched(o);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & ~o.w_[k];
    return r;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  bool subset_of(const Bits& o) const {
    matched(o);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool disjoint_from(const Bits& o) const {
    matched(o);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return false;
    return true;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ n_;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  // Total order (word-lexicographic); used only to canonicalize listings.
  bool operator<(const Bits& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (std::size_t k = w_.size(); k-- > 0;)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

private:
  void check(std::uint64_t i) const {
    if (i >= n_) throw std::out_of_range("Bits: index out of range");
  }
  Bits matched(const Bits& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Bits: size mismatch");
    return Bits(n_);
  }
  void trim() {
    if (n_ & 63) w_.back() &= (1ull << (n_ & 63)) - 1;
  }

  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace pea
