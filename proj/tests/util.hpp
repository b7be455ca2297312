// Shared test helpers: element builders from explicit sequences and the
// brute-force oracles the production paths are checked against.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "pea/pea.hpp"

namespace pea::test {

inline Elem elem_of(const SetAlgebra& alg,
                    const std::vector<std::vector<std::uint32_t>>& seqs) {
  Elem e = alg.zero();
  for (const auto& s : seqs) e.bits.set(rank_of(alg.config(), Sequence{s}));
  return e;
}

// c_(Gamma) straight from the displayed definition: s belongs iff some t in X
// agrees with s on every coordinate outside Gamma.
inline Elem oracle_cyl(const SetAlgebra& alg,
                       const std::vector<std::uint32_t>& gamma, const Elem& x) {
  std::set<std::uint32_t> g(gamma.begin(), gamma.end());
  Elem out = alg.zero();
  for (std::uint64_t sr = 0; sr < alg.points(); ++sr) {
    Sequence s = sequence_of(alg.config(), sr);
    bool found = false;
    for (std::uint64_t tr = 0; tr < alg.points() && !found; ++tr) {
      if (!x.bits.get(tr)) continue;
      Sequence t = sequence_of(alg.config(), tr);
      bool agree = true;
      for (std::uint32_t j = 0; j < alg.alpha() && agree; ++j)
        if (!g.count(j) && t[j] != s[j]) agree = false;
      found = agree;
    }
    if (found) out.bits.set(sr);
  }
  return out;
}

// Generated-subalgebra closure by a plain worklist over explicit elements;
// usable only at tiny configurations.
inline std::vector<Elem> naive_closure(const SetAlgebra& alg,
                                       const std::vector<Elem>& gens,
                                       std::size_t cap = 4096) {
  std::vector<Elem> elems;
  auto add = [&](const Elem& e) {
    for (const auto& known : elems)
      if (known == e) return false;
    elems.push_back(e);
    if (elems.size() > cap) throw CapExceededError("naive_closure: cap");
    return true;
  };
  add(alg.zero());
  add(alg.one());
  for (const auto& e : alg.all_equiv_rels()) add(alg.diag(e));
  for (const auto& g : gens) add(g);
  auto taus = Carrier::all_transformations(alg.alpha());
  auto gammas = alg.all_gammas();
  bool changed = true;
  while (changed) {
    changed = false;
    auto snapshot = elems;
    for (const auto& x : snapshot) {
      changed |= add(~x);
      for (const auto& y : snapshot) {
        changed |= add(x & y);
        changed |= add(x | y);
      }
      for (const auto& g : gammas) changed |= add(alg.cyl(g, x));
      for (const auto& t : taus) changed |= add(alg.subst(t, x));
    }
  }
  std::sort(elems.begin(), elems.end(),
            [](const Elem& a, const Elem& b) { return a.bits < b.bits; });
  return elems;
}

// Deterministic random term trees for the round-trip property.
inline Term sample_term(Rng& rng, int depth) {
  static const char* vars[] = {"x", "y", "z", "w", "v1", "v2"};
  auto index = [&] { return static_cast<std::uint32_t>(rng.below(4)); };
  if (depth <= 0) {
    switch (rng.below(4)) {
      case 0:
        return Term::zero();
      case 1:
        return Term::one();
      case 2:
        return Term::diag_pair(index(), index());
      default:
        return Term::var(vars[rng.below(6)]);
    }
  }
  switch (rng.below(8)) {
    case 0:
      return sample_term(rng, 0);
    case 1:
      return Term::not_(sample_term(rng, depth - 1));
    case 2: {
      std::vector<std::uint32_t> gamma;
      for (std::uint32_t i = 0; i < 4; ++i)
        if (rng.coin()) gamma.push_back(i);
      return Term::cyl(std::move(gamma), sample_term(rng, depth - 1));
    }
    case 3: {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> mapping;
      std::set<std::uint32_t> used;
      int entries = static_cast<int>(rng.below(3));
      for (int k = 0; k < entries; ++k) {
        std::uint32_t src = index();
        if (used.insert(src).second) mapping.emplace_back(src, index());
      }
      return Term::subst(std::move(mapping), sample_term(rng, depth - 1));
    }
    case 4: {
      std::uint32_t i = index(), j;
      do {
        j = index();
      } while (j == i);
      return Term::repl(i, j, sample_term(rng, depth - 1));
    }
    case 5: {
      // a partition of a random subset of {0..3} into one or two classes
      std::vector<std::uint32_t> pool;
      for (std::uint32_t i = 0; i < 4; ++i)
        if (rng.coin()) pool.push_back(i);
      std::vector<std::vector<std::uint32_t>> classes;
      if (pool.size() >= 2) {
        std::size_t cut = 2 + rng.below(pool.size() - 1);
        classes.emplace_back(pool.begin(), pool.begin() + cut);
        if (pool.size() - cut >= 2)
          classes.emplace_back(pool.begin() + cut, pool.end());
      }
      return Term::diag(std::move(classes));
    }
    case 6:
      return sample_term(rng, depth - 1) * sample_term(rng, depth - 1);
    default:
      return sample_term(rng, depth - 1) + sample_term(rng, depth - 1);
  }
}

}  // namespace pea::test
