// Full set algebras on the sequence space base^alpha: Boolean operations,
// cylindrifications c_(Gamma), substitutions s_tau, diagonal elements d_E,
// and generated subalgebras.
//
// Elements are bit vectors over rank-encoded sequences; all operations are
// pure and elements are immutable values, so sharing across threads is safe.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pea/bits.hpp"
#include "pea/config.hpp"
#include "pea/equiv.hpp"
#include "pea/sequence.hpp"
#include "pea/transformation.hpp"

namespace pea {

// One element of a full set algebra: the characteristic bit vector of a set
// of sequences, tagged with its space so cross-algebra mixups fail loudly.
struct Elem {
  std::uint32_t alpha = 0;
  std::uint32_t base = 0;
  Bits bits;

  bool same_space(const Elem& o) const {
    return alpha == o.alpha && base == o.base;
  }
  void require_space(const Elem& o) const {
    if (!same_space(o)) throw Error("Elem: algebra mismatch");
  }

  Elem operator&(const Elem& o) const { require_space(o); return {alpha, base, bits & o.bits}; }
  Elem operator|(const Elem& o) const { require_space(o); return {alpha, base, bits | o.bits}; }
  Elem operator-(const Elem& o) const { require_space(o); return {alpha, base, bits - o.bits}; }
  Elem operator~() const { return {alpha, base, ~bits}; }

  bool operator==(const Elem& o) const { return same_space(o) && bits == o.bits; }
  bool operator!=(const Elem& o) const { return !(*this == o); }
  bool operator<=(const Elem& o) const { require_space(o); return bits.subset_of(o.bits); }

  bool any() const { return bits.any(); }
  bool none() const { return bits.none(); }
  std::uint64_t count() const { return bits.count(); }

  std::vector<std::uint64_t> ranks() const {
    std::vector<std::uint64_t> r;
    bits.for_each_set([&](std::uint64_t i) { r.push_back(i); });
    return r;
  }
};

class SetAlgebra {
public:
  using value_type = Elem;

  explicit SetAlgebra(AlgebraConfig cfg) : cfg_(cfg) {
    cfg_.validate();
    points_ = cfg_.points();
  }

  const AlgebraConfig& config() const { return cfg_; }
  std::uint32_t alpha() const { return cfg_.alpha; }
  std::uint32_t base() const { return cfg_.base; }
  std::uint64_t points() const { return points_; }

  Elem zero() const { return {cfg_.alpha, cfg_.base, Bits::zeros(points_)}; }
  Elem one() const { return {cfg_.alpha, cfg_.base, Bits::ones(points_)}; }

  Elem from_ranks(const std::vector<std::uint64_t>& ranks) const {
    Elem e = zero();
    for (auto r : ranks) e.bits.set(r);
    return e;
  }
  Elem singleton(const Sequence& s) const {
    Elem e = zero();
    e.bits.set(rank_of(cfg_, s));
    return e;
  }
  bool member(const Elem& x, const Sequence& s) const {
    own(x);
    return x.bits.get(rank_of(cfg_, s));
  }

  // c_(Gamma) X = { s : exists t in X with t(j) = s(j) for all j not in
  // Gamma }.  Computed as the composition of single-coordinate passes, which
  // coincides with the direct definition (tested against it).
  Elem cyl(const std::vector<std::uint32_t>& gamma, const Elem& x) const {
    own(x);
    check_gamma(gamma);
    Elem out = x;
    std::set<std::uint32_t> dedup(gamma.begin(), gamma.end());
    for (auto i : dedup) out = cyl_one(i, out);
    return out;
  }

  // s_tau X = { s : s o tau in X }.
  Elem subst(const Transformation& tau, const Elem& x) const {
    own(x);
    if (tau.arity() != cfg_.alpha) throw Error("subst: arity mismatch");
    Elem out = zero();
    for (std::uint64_t r = 0; r < points_; ++r) {
      Sequence s = sequence_of(cfg_, r);
      Sequence st;
      st.v.resize(cfg_.alpha);
      for (std::uint32_t i = 0; i < cfg_.alpha; ++i) st.v[i] = s[tau(i)];
      if (x.bits.get(rank_of(cfg_, st))) out.bits.set(r);
    }
    return out;
  }

  // d_E = { s : s_i = s_j for all (i,j) in E }.
  Elem diag(const EquivRel& e) const {
    if (e.arity() != cfg_.alpha) throw Error("diag: arity mismatch");
    // s is in d_E iff s is constant on every class; compare against the
    // least member of each class.
    std::vector<std::uint32_t> rep(cfg_.alpha);
    for (std::uint32_t i = 0; i < cfg_.alpha; ++i) {
      std::uint32_t r = i;
      for (std::uint32_t j = 0; j < i; ++j)
        if (e.related(i, j)) { r = j; break; }
      rep[i] = r;
    }
    Elem out = zero();
    for (std::uint64_t r = 0; r < points_; ++r) {
      Sequence s = sequence_of(cfg_, r);
      bool ok = true;
      for (std::uint32_t i = 0; ok && i < cfg_.alpha; ++i)
        if (s[i] != s[rep[i]]) ok = false;
      if (ok) out.bits.set(r);
    }
    return out;
  }

  Elem diag_pair(std::uint32_t i, std::uint32_t j) const {
    if (i >= cfg_.alpha || j >= cfg_.alpha)
      throw Error("diag_pair: index out of range");
    return diag(EquivRel::pair(cfg_.alpha, i, j));
  }

  // s_[i|j] X; coincides with c_i(d_ij * X), which is kept as a tested
  // property rather than the implementation route.
  Elem replacement(std::uint32_t i, std::uint32_t j, const Elem& x) const {
    if (i == j) throw Error("replacement: i and j must differ");
    return subst(Transformation::replacement(cfg_.alpha, i, j), x);
  }

  // --- generated subalgebras ---------------------------------------------

  // The atoms of the subalgebra generated by `gens` together with 0, 1 and
  // all diagonal elements, computed by refining the partition of the point
  // space to a fixpoint.  The subalgebra itself is exactly the set of unions
  // of these cells.
  std::vector<Bits> generated_cells(const std::vector<Elem>& gens) const {
    std::vector<Bits> cells{Bits::ones(points_)};
    std::vector<Bits> pending;
    for (const auto& g : gens) {
      own(g);
      pending.push_back(g.bits);
    }
    for (const auto& e : all_equiv_rels())
      pending.push_back(diag(e).bits);

    auto refine_by = [&](const Bits& x) {
      std::vector<Bits> next;
      bool changed = false;
      for (const auto& c : cells) {
        Bits in = c & x;
        Bits out = c - x;
        if (in.any() && out.any()) {
          next.push_back(in);
          next.push_back(out);
          changed = true;
        } else {
          next.push_back(c);
        }
      }
      cells = std::move(next);
      return changed;
    };
    for (const auto& p : pending) refine_by(p);

    // Unary-operation images must be unions of cells; the single-coordinate
    // cylindrifications and a generating set of the transformation monoid
    // suffice, since c_(Gamma) and s_tau factor through them.
    std::vector<Transformation> taus = monoid_generators();
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Bits> snapshot = cells;
      for (const auto& cell : snapshot) {
        Elem ce{cfg_.alpha, cfg_.base, cell};
        for (std::uint32_t i = 0; i < cfg_.alpha; ++i)
          changed |= refine_by(cyl_one(i, ce).bits);
        for (const auto& tau : taus) changed |= refine_by(subst(tau, ce).bits);
      }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
  }

  // The generated subalgebra as an explicit finite family, smallest first in
  // a deterministic order.  Throws CapExceededError when 2^#cells exceeds
  // the configured closure cap.
  std::vector<Elem> generated_subalgebra(const std::vector<Elem>& gens) const {
    std::vector<Bits> cells = generated_cells(gens);
    std::size_t k = cells.size();
    if (k >= 63 || (1ull << k) > cfg_.closure_cap)
      throw CapExceededError(
          "generated_subalgebra: closure of 2^" + std::to_string(k) +
          " elements exceeds cap " + std::to_string(cfg_.closure_cap));
    std::vector<Elem> fam;
    fam.reserve(1ull << k);
    for (std::uint64_t m = 0; m < (1ull << k); ++m) {
      Elem e = zero();
      for (std::size_t c = 0; c < k; ++c)
        if ((m >> c) & 1) e.bits = e.bits | cells[c];
      fam.push_back(std::move(e));
    }
    std::sort(fam.begin(), fam.end(),
              [](const Elem& a, const Elem& b) { return a.bits < b.bits; });
    return fam;
  }

  // All equivalence relations on the coordinate set, canonical order.
  std::vector<EquivRel> all_equiv_rels() const {
    std::vector<EquivRel> out;
    std::vector<std::uint32_t> rgs(cfg_.alpha, 0);
    enumerate_rgs(rgs, 1, 1, out);
    return out;
  }

  // All subsets of the coordinate set, by bitmask order.
  std::vector<std::vector<std::uint32_t>> all_gammas() const {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t m = 0; m < (1u << cfg_.alpha); ++m) {
      std::vector<std::uint32_t> g;
      for (std::uint32_t i = 0; i < cfg_.alpha; ++i)
        if ((m >> i) & 1) g.push_back(i);
      out.push_back(std::move(g));
    }
    return out;
  }

private:
  void own(const Elem& x) const {
    if (x.alpha != cfg_.alpha || x.base != cfg_.base || x.bits.size() != points_)
      throw Error("SetAlgebra: element from a different algebra");
  }
  void check_gamma(const std::vector<std::uint32_t>& gamma) const {
    for (auto i : gamma)
      if (i >= cfg_.alpha) throw Error("cyl: coordinate out of range");
  }

  Elem cyl_one(std::uint32_t i, const Elem& x) const {
    std::uint64_t stride = 1;
    for (std::uint32_t k = i + 1; k < cfg_.alpha; ++k) stride *= cfg_.base;
    Elem out = zero();
    // Fibers along coordinate i: ranks r0 + d*stride for d in [0, base).
    std::uint64_t block = stride * cfg_.base;
    for (std::uint64_t hi = 0; hi < points_; hi += block) {
      for (std::uint64_t lo = 0; lo < stride; ++lo) {
        bool hit = false;
        for (std::uint32_t d = 0; d < cfg_.base && !hit; ++d)
          hit = x.bits.get(hi + lo + d * stride);
        if (hit)
          for (std::uint32_t d = 0; d < cfg_.base; ++d)
            out.bits.set(hi + lo + d * stride);
      }
    }
    return out;
  }

  // Generators of the full transformation monoid on alpha points: a
  // transposition, the cycle, and the rank-collapsing map [0|1].
  std::vector<Transformation> monoid_generators() const {
    std::vector<Transformation> gens;
    std::uint32_t n = cfg_.alpha;
    if (n <= 1) return gens;
    {
      auto t = Transformation::identity(n);
      std::vector<std::uint32_t> img = t.image();
      std::swap(img[0], img[1]);
      gens.emplace_back(img);
    }
    {
      std::vector<std::uint32_t> img(n);
      for (std::uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
      gens.emplace_back(img);
    }
    gens.push_back(Transformation::replacement(n, 0, 1));
    return gens;
  }

  static void enumerate_rgs(std::vector<std::uint32_t>& rgs, std::uint32_t pos,
                            std::uint32_t maxv, std::vector<EquivRel>& out) {
    if (pos >= rgs.size()) {
      out.push_back(EquivRel::from_labels(rgs));
      return;
    }
    for (std::uint32_t v = 0; v <= maxv; ++v) {
      rgs[pos] = v;
      enumerate_rgs(rgs, pos + 1, std::max(maxv, v + 1), out);
    }
  }

  AlgebraConfig cfg_;
  std::uint64_t points_ = 0;
};

}  // namespace pea
