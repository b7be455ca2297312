// Equivalence relations on the coordinate set {0,...,alpha-1}.  Stored as the
// class index of each coordinate in restricted-growth normal form (class ids
// appear in order of first occurrence), which doubles as a canonical form.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pea/config.hpp"
#include "pea/transformation.hpp"

namespace pea {

class EquivRel {
public:
  EquivRel() = default;

  // Accepts any labelling of coordinates by class ids and normalizes it.
  static EquivRel from_labels(std::vector<std::uint32_t> labels) {
    EquivRel e;
    e.cid_ = std::move(labels);
    e.normalize();
    return e;
  }

  static EquivRel identity(std::uint32_t alpha) {
    std::vector<std::uint32_t> l(alpha);
    std::iota(l.begin(), l.end(), 0u);
    return from_labels(std::move(l));
  }

  static EquivRel full(std::uint32_t alpha) {
    return from_labels(std::vector<std::uint32_t>(alpha, 0u));
  }

  // Relates i to j and everything else only to itself (i == j gives identity).
  static EquivRel pair(std::uint32_t alpha, std::uint32_t i, std::uint32_t j) {
    if (i >= alpha || j >= alpha) throw Error("EquivRel::pair: index out of range");
    auto e = identity(alpha);
    e.cid_[std::max(i, j)] = e.cid_[std::min(i, j)];
    e.normalize();
    return e;
  }

  // Reflexive-symmetric-transitive closure of an arbitrary pair list.
  static EquivRel from_pairs(
      std::uint32_t alpha,
      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
    std::vector<std::uint32_t> parent(alpha);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto [i, j] : pairs) {
      if (i >= alpha || j >= alpha)
        throw Error("EquivRel::from_pairs: index out of range");
      parent[find(i)] = find(j);
    }
    std::vector<std::uint32_t> labels(alpha);
    for (std::uint32_t i = 0; i < alpha; ++i) labels[i] = find(i);
    return from_labels(std::move(labels));
  }

  // Classes listed explicitly; unlisted coordinates are singletons.
  static EquivRel from_classes(
      std::uint32_t alpha, const std::vector<std::vector<std::uint32_t>>& classes) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::set<std::uint32_t> seen;
    for (const auto& cls : classes) {
      for (auto m : cls) {
        if (m >= alpha) throw Error("EquivRel::from_classes: index out of range");
        if (!seen.insert(m).second)
          throw Error("EquivRel::from_classes: classes overlap");
        pairs.emplace_back(cls.front(), m);
      }
    }
    return from_pairs(alpha, pairs);
  }

  std::uint32_t arity() const { return static_cast<std::uint32_t>(cid_.size()); }
  bool related(std::uint32_t i, std::uint32_t j) const {
    return cid_.at(i) == cid_.at(j);
  }
  std::uint32_t class_of(std::uint32_t i) const { return cid_.at(i); }
  std::uint32_t num_classes() const {
    return cid_.empty() ? 0 : *std::max_element(cid_.begin(), cid_.end()) + 1;
  }

  std::vector<std::vector<std::uint32_t>> classes() const {
    std::vector<std::vector<std::uint32_t>> cs(num_classes());
    for (std::uint32_t i = 0; i < arity(); ++i) cs[cid_[i]].push_back(i);
    return cs;
  }

  // Non-singleton classes, sorted by least member; the printable content.
  std::vector<std::vector<std::uint32_t>> merged_classes() const {
    std::vector<std::vector<std::uint32_t>> out;
    for (auto& c : classes())
      if (c.size() > 1) out.push_back(c);
    return out;
  }

  // All related ordered pairs (i, j) with i < j.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> related_pairs() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ps;
    for (std::uint32_t i = 0; i < arity(); ++i)
      for (std::uint32_t j = i + 1; j < arity(); ++j)
        if (related(i, j)) ps.emplace_back(i, j);
    return ps;
  }

  // this contains o as a set of pairs (this is coarser or equal).
  bool coarsens(const EquivRel& o) const {
    if (arity() != o.arity()) throw Error("EquivRel::coarsens: arity mismatch");
    for (std::uint32_t i = 0; i < arity(); ++i)
      for (std::uint32_t j = i + 1; j < arity(); ++j)
        if (o.related(i, j) && !related(i, j)) return false;
    return true;
  }

  // E restricted to pairs outside gamma, re-closed with the identity:
  // F = E /\ (alpha ~ gamma)^2 \/ Id.
  EquivRel outside(const std::vector<std::uint32_t>& gamma) const {
    std::set<std::uint32_t> g(gamma.begin(), gamma.end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (auto [i, j] : related_pairs())
      if (!g.count(i) && !g.count(j)) pairs.emplace_back(i, j);
    return from_pairs(arity(), pairs);
  }

  // Canonical fingerprint of the restriction to pairs outside gamma; two
  // relations share it iff they agree on (alpha ~ gamma)^2.
  std::vector<std::uint32_t> outside_fingerprint(
      const std::vector<std::uint32_t>& gamma) const {
    std::set<std::uint32_t> g(gamma.begin(), gamma.end());
    std::vector<std::uint32_t> coords;
    for (std::uint32_t i = 0; i < arity(); ++i)
      if (!g.count(i)) coords.push_back(i);
    std::vector<std::uint32_t> fp;
    std::vector<std::int64_t> remap(arity(), -1);
    std::uint32_t next = 0;
    for (auto i : coords) {
      if (remap[cid_[i]] < 0) remap[cid_[i]] = next++;
      fp.push_back(static_cast<std::uint32_t>(remap[cid_[i]]));
    }
    return fp;
  }

  // Image closure F = { (tau(i), tau(j)) : (i,j) in E } \/ Id, closed to an
  // equivalence relation; the diagonal index of s_tau d_E.
  EquivRel image_under(const Transformation& tau) const {
    if (tau.arity() != arity()) throw Error("EquivRel::image_under: arity mismatch");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (auto [i, j] : related_pairs()) pairs.emplace_back(tau(i), tau(j));
    return from_pairs(arity(), pairs);
  }

  // Pullback kernel P with i P j iff tau(i) ~ tau(j); the kernel of the map
  // i |-> class(tau(i)), always an equivalence relation.
  EquivRel pullback_under(const Transformation& tau) const {
    if (tau.arity() != arity())
      throw Error("EquivRel::pullback_under: arity mismatch");
    std::vector<std::uint32_t> labels(arity());
    for (std::uint32_t i = 0; i < arity(); ++i) labels[i] = cid_[tau(i)];
    return from_labels(std::move(labels));
  }

  const std::vector<std::uint32_t>& labels() const { return cid_; }
  bool operator==(const EquivRel& o) const { return cid_ == o.cid_; }
  bool operator<(const EquivRel& o) const { return cid_ < o.cid_; }

private:
  void normalize() {
    std::map<std::uint32_t, std::uint32_t> remap;
    for (auto& c : cid_) {
      auto [it, fresh] = remap.emplace(c, static_cast<std::uint32_t>(remap.size()));
      (void)fresh;
      c = it->second;
    }
  }

  std::vector<std::uint32_t> cid_;
};

}  // namespace pea
