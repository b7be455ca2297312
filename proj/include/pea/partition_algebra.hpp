// The symbolic subuniverse of kernel atoms: elements are unions of atoms
// X_R = { s : ker s = R }, one atom per set partition R of the coordinate
// set.  Cylindrification, substitution and diagonals act combinatorially on
// the partition labels, independently of the base set; the representation
// into a concrete set algebra takes the base as a parameter.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pea/bits.hpp"
#include "pea/equiv.hpp"
#include "pea/sequence.hpp"
#include "pea/set_algebra.hpp"

namespace pea {

// A set partition of {0,...,alpha-1}, canonically an equivalence relation in
// restricted-growth form; blocks are ordered by least member.
using Partition = EquivRel;

// All partitions of an alpha-element coordinate set in restricted-growth
// lexicographic order; count = Bell(alpha).  Throws when the count would
// exceed `cap`.
inline std::vector<Partition> enumerate_partitions(std::uint32_t alpha,
                                                   std::uint64_t cap = 1u << 16) {
  if (alpha < 1) throw Error("enumerate_partitions: alpha must be >= 1");
  std::vector<Partition> out;
  std::vector<std::uint32_t> rgs(alpha, 0);
  struct Rec {
    std::vector<std::uint32_t>& rgs;
    std::vector<Partition>& out;
    std::uint64_t cap;
    void go(std::uint32_t pos, std::uint32_t maxv) {
      if (pos >= rgs.size()) {
        if (out.size() >= cap)
          throw CapExceededError("enumerate_partitions: cap exceeded");
        out.push_back(Partition::from_labels(rgs));
        return;
      }
      for (std::uint32_t v = 0; v <= maxv; ++v) {
        rgs[pos] = v;
        go(pos + 1, std::max(maxv, v + 1));
      }
    }
  } rec{rgs, out, cap};
  rec.go(1, 1);
  return out;
}

// The kernel of a sequence: coordinates related iff they carry equal values.
inline Partition kernel_of(const Sequence& s) {
  return EquivRel::from_labels(std::vector<std::uint32_t>(s.v.begin(), s.v.end()));
}

// X_R = { s : ker s = R } inside a concrete algebra; empty iff R has more
// classes than the base supplies values.
inline Elem atom_concrete(const Partition& r, const SetAlgebra& alg) {
  if (r.arity() != alg.alpha()) throw Error("atom_concrete: arity mismatch");
  Elem out = alg.zero();
  for (std::uint64_t p = 0; p < alg.points(); ++p)
    if (kernel_of(sequence_of(alg.config(), p)) == r) out.bits.set(p);
  return out;
}

// An element of the symbolic subuniverse: a set of partition labels L,
// denoting the union of the atoms X_R for R in L.
struct PartitionElement {
  std::uint32_t alpha = 0;
  Bits labels;

  bool same_space(const PartitionElement& o) const {
    return alpha == o.alpha && labels.size() == o.labels.size();
  }
  void require_space(const PartitionElement& o) const {
    if (!same_space(o)) throw Error("PartitionElement: algebra mismatch");
  }

  PartitionElement operator&(const PartitionElement& o) const {
    require_space(o);
    return {alpha, labels & o.labels};
  }
  PartitionElement operator|(const PartitionElement& o) const {
    require_space(o);
    return {alpha, labels | o.labels};
  }
  PartitionElement operator-(const PartitionElement& o) const {
    require_space(o);
    return {alpha, labels - o.labels};
  }
  // Complement flips the label set: ~U_{R in L} X_R = U_{R not in L} X_R.
  PartitionElement operator~() const { return {alpha, ~labels}; }

  bool operator==(const PartitionElement& o) const {
    return same_space(o) && labels == o.labels;
  }
  bool operator!=(const PartitionElement& o) const { return !(*this == o); }
  bool operator<=(const PartitionElement& o) const {
    require_space(o);
    return labels.subset_of(o.labels);
  }

  bool any() const { return labels.any(); }
  bool none() const { return labels.none(); }
  std::uint64_t count() const { return labels.count(); }
};

inline bool is_atom(const PartitionElement& l) { return l.count() == 1; }

class PartitionAlgebra {
public:
  using value_type = PartitionElement;

  explicit PartitionAlgebra(std::uint32_t alpha, std::uint64_t cap = 1u << 16)
      : alpha_(alpha), parts_(enumerate_partitions(alpha, cap)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) index_[parts_[i]] = i;
  }

  std::uint32_t alpha() const { return alpha_; }
  std::uint32_t base() const { return 0; }  // symbolic layer has no base
  const std::vector<Partition>& partitions() const { return parts_; }
  std::size_t num_partitions() const { return parts_.size(); }

  std::size_t index_of(const Partition& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) throw Error("PartitionAlgebra: unknown partition");
    return it->second;
  }

  PartitionElement zero() const { return {alpha_, Bits::zeros(parts_.size())}; }
  PartitionElement one() const { return {alpha_, Bits::ones(parts_.size())}; }

  PartitionElement atom(const Partition& r) const {
    PartitionElement e = zero();
    e.labels.set(index_of(r));
    return e;
  }
  PartitionElement from_labels(const std::vector<Partition>& rs) const {
    PartitionElement e = zero();
    for (const auto& r : rs) e.labels.set(index_of(r));
    return e;
  }

  // c_(Gamma) X_R = U { X_S : S agrees with R on pairs outside Gamma },
  // extended to label sets by complete additivity.
  PartitionElement cyl(const std::vector<std::uint32_t>& gamma,
                       const PartitionElement& l) const {
    own(l);
    for (auto i : gamma)
      if (i >= alpha_) throw Error("cyl: coordinate out of range");
    std::map<std::vector<std::uint32_t>, Bits> groups;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      auto fp = parts_[i].outside_fingerprint(gamma);
      auto [it, fresh] = groups.emplace(fp, Bits::zeros(parts_.size()));
      (void)fresh;
      it->second.set(i);
    }
    PartitionElement out = zero();
    l.labels.for_each_set([&](std::uint64_t i) {
      out.labels = out.labels | groups.at(parts_[i].outside_fingerprint(gamma));
    });
    return out;
  }

  // s_tau X_R = U { X_S : for all i,j   i R j  iff  tau(i) S tau(j) }; the
  // label set on the right may be empty.  Additively: S survives iff its
  // pullback kernel under tau is in L.
  PartitionElement subst(const Transformation& tau,
                         const PartitionElement& l) const {
    own(l);
    if (tau.arity() != alpha_) throw Error("subst: arity mismatch");
    PartitionElement out = zero();
    for (std::size_t s = 0; s < parts_.size(); ++s) {
      Partition pulled = parts_[s].pullback_under(tau);
      if (l.labels.get(index_of(pulled))) out.labels.set(s);
    }
    return out;
  }

  // d_E = U { X_R : E contained in R }: the up-set of E in refinement order.
  PartitionElement diag(const EquivRel& e) const {
    if (e.arity() != alpha_) throw Error("diag: arity mismatch");
    PartitionElement out = zero();
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i].coarsens(e)) out.labels.set(i);
    return out;
  }

  PartitionElement diag_pair(std::uint32_t i, std::uint32_t j) const {
    return diag(EquivRel::pair(alpha_, i, j));
  }

  PartitionElement replacement(std::uint32_t i, std::uint32_t j,
                               const PartitionElement& l) const {
    if (i == j) throw Error("replacement: i and j must differ");
    return subst(Transformation::replacement(alpha_, i, j), l);
  }

  // The concrete set denoted by a label set at a given base.
  Elem represent(const PartitionElement& l, const SetAlgebra& alg) const {
    own(l);
    if (alg.alpha() != alpha_) throw Error("represent: alpha mismatch");
    Elem out = alg.zero();
    l.labels.for_each_set([&](std::uint64_t i) {
      out = out | atom_concrete(parts_[i], alg);
    });
    return out;
  }

  // The label set of a concrete element, if it is a union of kernel atoms
  // (i.e. a member of the represented subuniverse); nullopt otherwise.
  std::optional<PartitionElement> membership(const Elem& x,
                                             const SetAlgebra& alg) const {
    if (alg.alpha() != alpha_) throw Error("membership: alpha mismatch");
    PartitionElement out = zero();
    Elem covered = alg.zero();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      Elem a = atom_concrete(parts_[i], alg);
      if (a.none()) continue;
      if (a <= x) {
        out.labels.set(i);
        covered = covered | a;
      } else if (!(a & x).none()) {
        return std::nullopt;  // x cuts an atom properly
      }
    }
    if (covered != x) return std::nullopt;
    return out;
  }

  friend class AtomTable;

private:
  void own(const PartitionElement& l) const {
    if (l.alpha != alpha_ || l.labels.size() != parts_.size())
      throw Error("PartitionAlgebra: element from a different algebra");
  }

  std::uint32_t alpha_;
  std::vector<Partition> parts_;
  std::map<Partition, std::size_t> index_;
};

// Precomputed concrete atoms and per-point kernel indices for one
// (symbolic algebra, set algebra) pair; the fast path for bulk membership
// sweeps and representation.
class AtomTable {
public:
  AtomTable(const PartitionAlgebra& palg, const SetAlgebra& alg)
      : palg_(&palg), alg_(&alg) {
    if (alg.alpha() != palg.alpha()) throw Error("AtomTable: alpha mismatch");
    atoms_.reserve(palg.num_partitions());
    for (const auto& r : palg.partitions())
      atoms_.push_back(atom_concrete(r, alg));
    kernel_index_.resize(alg.points());
    for (std::uint64_t p = 0; p < alg.points(); ++p)
      kernel_index_[p] = palg.index_of(kernel_of(sequence_of(alg.config(), p)));
  }

  Elem represent(const PartitionElement& l) const {
    palg_->own(l);
    Elem out = alg_->zero();
    l.labels.for_each_set([&](std::uint64_t i) { out = out | atoms_[i]; });
    return out;
  }

  std::optional<PartitionElement> membership(const Elem& x) const {
    PartitionElement out = palg_->zero();
    x.bits.for_each_set(
        [&](std::uint64_t p) { out.labels.set(kernel_index_[p]); });
    if (represent(out) != x) return std::nullopt;
    return out;
  }

private:
  const PartitionAlgebra* palg_;
  const SetAlgebra* alg_;
  std::vector<Elem> atoms_;
  std::vector<std::size_t> kernel_index_;
};

}  // namespace pea
