// Ideals of finite concrete algebras.  An ideal contains 0, is closed under
// +, downward under <=, and closed under every c_(Gamma) and s_tau.  Ideals
// are materialized only inside finite carriers (explicit subalgebras); the
// ambient full algebra is never enumerated.  Membership in a generated ideal
// is decided by the normal form
//     y in Ig X  iff  y <= c_(Gamma)(x_0 + ... + x_{k-1})
// which at finite dimension reduces to y <= c_(all)(sum X); the rule-based
// closure below serves as the independent cross-check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "pea/set_algebra.hpp"

namespace pea {

// An explicit finite subalgebra used as the universe for ideal computations.
class Carrier {
public:
  Carrier(const SetAlgebra& alg, std::vector<Elem> members)
      : alg_(&alg), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end(),
              [](const Elem& a, const Elem& b) { return a.bits < b.bits; });
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i)
      index_.emplace(members_[i].bits, i);
  }

  const SetAlgebra& algebra() const { return *alg_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const Elem& x) const { return index_.count(x.bits) != 0; }
  std::size_t index_of(const Elem& x) const {
    auto it = index_.find(x.bits);
    if (it == index_.end()) throw Error("Carrier: element not in carrier");
    return it->second;
  }

  // Closure under the whole signature.  Binary Boolean closure plus the
  // single-coordinate cylindrifications and all substitutions (checked via
  // every transformation at these dimensions).
  bool is_subalgebra() const {
    const auto& alg = *alg_;
    if (!contains(alg.zero()) || !contains(alg.one())) return false;
    for (const auto& x : members_) {
      if (!contains(~x)) return false;
      for (const auto& y : members_)
        if (!contains(x & y) || !contains(x | y)) return false;
      for (std::uint32_t i = 0; i < alg.alpha(); ++i)
        if (!contains(alg.cyl({i}, x))) return false;
    }
    for (const auto& e : alg.all_equiv_rels())
      if (!contains(alg.diag(e))) return false;
    for (const auto& tau : all_transformations(alg.alpha()))
      for (const auto& x : members_)
        if (!contains(alg.subst(tau, x))) return false;
    return true;
  }

  static std::vector<Transformation> all_transformations(std::uint32_t alpha) {
    std::vector<Transformation> out;
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < alpha; ++i) total *= alpha;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::uint32_t> img(alpha);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < alpha; ++i) {
        img[i] = static_cast<std::uint32_t>(c % alpha);
        c /= alpha;
      }
      out.emplace_back(std::move(img));
    }
    return out;
  }

private:
  const SetAlgebra* alg_;
  std::vector<Elem> members_;
  std::unordered_map<Bits, std::size_t, BitsHash> index_;
};

// An ideal as an explicit subset of a carrier.
struct Ideal {
  const Carrier* carrier = nullptr;
  std::vector<bool> member;  // indexed like carrier->members()

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < member.size(); ++i)
      if (member[i]) out.push_back(carrier->members()[i]);
    return out;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (bool b : member) n += b;
    return n;
  }
  bool contains(const Elem& x) const {
    return carrier->contains(x) && member[carrier->index_of(x)];
  }

  // The largest element; ideals of finite algebras are closed under finite
  // sums, so this is a member.
  Elem max() const {
    Elem m = carrier->algebra().zero();
    for (std::size_t i = 0; i < member.size(); ++i)
      if (member[i]) m = m | carrier->members()[i];
    return m;
  }
};

// Checks the four ideal conditions over the carrier.
inline bool is_ideal(const Ideal& ideal) {
  const Carrier& car = *ideal.carrier;
  const SetAlgebra& alg = car.algebra();
  if (!ideal.contains(alg.zero())) return false;
  auto elems = ideal.elements();
  for (const auto& x : elems) {
    for (const auto& y : elems)
      if (!ideal.contains(x | y)) return false;
    for (const auto& y : car.members())
      if (y <= x && !ideal.contains(y)) return false;
    for (const auto& gamma : alg.all_gammas())
      if (!ideal.contains(alg.cyl(gamma, x))) return false;
    for (const auto& tau : Carrier::all_transformations(alg.alpha()))
      if (!ideal.contains(alg.subst(tau, x))) return false;
  }
  return true;
}

// Least ideal of the carrier containing X, by iterating the closure rules to
// a fixpoint.  This is the brute-force oracle the normal form is checked
// against.
inline Ideal ideal_closure_oracle(const Carrier& carrier,
                                  const std::vector<Elem>& xs) {
  const SetAlgebra& alg = carrier.algebra();
  if (!carrier.is_subalgebra())
    throw Error("ideal_closure_oracle: carrier is not closed under the signature");
  Ideal ideal{&carrier, std::vector<bool>(carrier.size(), false)};
  auto add = [&](const Elem& e) {
    std::size_t i = carrier.index_of(e);
    if (ideal.member[i]) return false;
    ideal.member[i] = true;
    return true;
  };
  add(alg.zero());
  for (const auto& x : xs) {
    if (!carrier.contains(x))
      throw Error("ideal_closure_oracle: generator not in carrier");
    add(x);
  }
  auto taus = Carrier::all_transformations(alg.alpha());
  auto gammas = alg.all_gammas();
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = ideal.elements();
    for (const auto& x : elems) {
      for (const auto& y : elems) changed |= add(x | y);
      for (const auto& y : carrier.members())
        if (y <= x) changed |= add(y);
      for (const auto& gamma : gammas) changed |= add(alg.cyl(gamma, x));
      for (const auto& tau : taus) changed |= add(alg.subst(tau, x));
    }
  }
  return ideal;
}

// Normal-form membership: y <= c_(all coordinates)(sum of X).  At finite
// dimension this single instance subsumes every choice of Gamma and finite
// subfamily by monotonicity.
inline bool ig_member(const SetAlgebra& alg, const Elem& y,
                      const std::vector<Elem>& xs) {
  Elem sum = alg.zero();
  for (const auto& x : xs) sum = sum | x;
  std::vector<std::uint32_t> all;
  for (std::uint32_t i = 0; i < alg.alpha(); ++i) all.push_back(i);
  return y <= alg.cyl(all, sum);
}

// Search form of the same test: some Gamma with y <= c_(Gamma)(sum X).
// Kept alongside the reduced form so the two can be compared directly.
inline bool ig_member_search(const SetAlgebra& alg, const Elem& y,
                             const std::vector<Elem>& xs) {
  Elem sum = alg.zero();
  for (const auto& x : xs) sum = sum | x;
  for (const auto& gamma : alg.all_gammas())
    if (y <= alg.cyl(gamma, sum)) return true;
  return false;
}

// The ideal generated by I \/ J: { x : x <= i + j for some i in I, j in J }.
inline Ideal ideal_join(const Ideal& lhs, const Ideal& rhs) {
  if (lhs.carrier != rhs.carrier) throw Error("ideal_join: carrier mismatch");
  const Carrier& car = *lhs.carrier;
  Elem bound = lhs.max() | rhs.max();  // i + j is maximized at the two maxima
  Ideal out{&car, std::vector<bool>(car.size(), false)};
  for (std::size_t i = 0; i < car.size(); ++i)
    if (car.members()[i] <= bound) out.member[i] = true;
  return out;
}

// Ig^B(I) for I an ideal of a subalgebra A of B: the downward closure of I
// in B, { b in B : exists a in I with b <= a }.
inline Ideal ideal_restrict_extend(const Ideal& ideal, const Carrier& bigger) {
  const Carrier& small = *ideal.carrier;
  if (&small.algebra() != &bigger.algebra() &&
      !(small.algebra().config() == bigger.algebra().config()))
    throw Error("ideal_restrict_extend: algebra mismatch");
  for (const auto& a : small.members())
    if (!bigger.contains(a))
      throw Error("ideal_restrict_extend: carrier is not a subalgebra of target");
  Elem bound = ideal.max();
  Ideal out{&bigger, std::vector<bool>(bigger.size(), false)};
  for (std::size_t i = 0; i < bigger.size(); ++i)
    if (bigger.members()[i] <= bound) out.member[i] = true;
  return out;
}

}  // namespace pea
