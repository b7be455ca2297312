// Abstract syntax for the term language over the signature
// { +, *, -, 0, 1, c_(Gamma), s_tau, d(i,j), dE, variables }, together with
// the named interpolation terms of Pigozzi's construction.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pea/config.hpp"

namespace pea {

enum class TermKind {
  Zero,
  One,
  Var,
  Diag,      // dE{{...},{...}}: general diagonal by classes
  DiagPair,  // d(i,j)
  Cyl,       // c(i j ...) t
  Subst,     // s[i->j, ...] t
  Repl,      // s[i|j] t
  And,
  Or,
  Not,
};

struct Term {
  TermKind kind = TermKind::Zero;
  std::string name;                             // Var
  std::vector<std::uint32_t> gamma;             // Cyl (sorted, deduped)
  std::vector<std::vector<std::uint32_t>> classes;  // Diag (normalized)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> mapping;  // Subst
  std::uint32_t i = 0, j = 0;                   // DiagPair, Repl
  std::vector<Term> kids;

  bool operator==(const Term& o) const {
    return kind == o.kind && name == o.name && gamma == o.gamma &&
           classes == o.classes && mapping == o.mapping && i == o.i &&
           j == o.j && kids == o.kids;
  }

  static Term zero() { return {}; }
  static Term one() {
    Term t;
    t.kind = TermKind::One;
    return t;
  }
  static Term var(std::string n) {
    Term t;
    t.kind = TermKind::Var;
    t.name = std::move(n);
    return t;
  }
  static Term diag_pair(std::uint32_t i, std::uint32_t j) {
    Term t;
    t.kind = TermKind::DiagPair;
    t.i = std::min(i, j);
    t.j = std::max(i, j);
    return t;
  }
  // Classes are normalized: each sorted, singletons dropped, ordered by
  // least member.  Overlapping classes are rejected.
  static Term diag(std::vector<std::vector<std::uint32_t>> cls) {
    Term t;
    t.kind = TermKind::Diag;
    std::set<std::uint32_t> seen;
    for (auto& c : cls) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      for (auto m : c)
        if (!seen.insert(m).second)
          throw Error("diag term: classes overlap");
      if (c.size() > 1) t.classes.push_back(std::move(c));
    }
    std::sort(t.classes.begin(), t.classes.end());
    return t;
  }
  static Term cyl(std::vector<std::uint32_t> gamma, Term sub) {
    Term t;
    t.kind = TermKind::Cyl;
    std::sort(gamma.begin(), gamma.end());
    gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
    t.gamma = std::move(gamma);
    t.kids.push_back(std::move(sub));
    return t;
  }
  static Term subst(std::vector<std::pair<std::uint32_t, std::uint32_t>> mapping,
                    Term sub) {
    Term t;
    t.kind = TermKind::Subst;
    std::sort(mapping.begin(), mapping.end());
    for (std::size_t k = 1; k < mapping.size(); ++k)
      if (mapping[k].first == mapping[k - 1].first)
        throw Error("subst term: duplicate map entry");
    t.mapping = std::move(mapping);
    t.kids.push_back(std::move(sub));
    return t;
  }
  static Term repl(std::uint32_t i, std::uint32_t j, Term sub) {
    Term t;
    t.kind = TermKind::Repl;
    t.i = i;
    t.j = j;
    t.kids.push_back(std::move(sub));
    return t;
  }
  static Term and_(Term l, Term r) {
    Term t;
    t.kind = TermKind::And;
    t.kids.push_back(std::move(l));
    t.kids.push_back(std::move(r));
    return t;
  }
  static Term or_(Term l, Term r) {
    Term t;
    t.kind = TermKind::Or;
    t.kids.push_back(std::move(l));
    t.kids.push_back(std::move(r));
    return t;
  }
  static Term not_(Term sub) {
    Term t;
    t.kind = TermKind::Not;
    t.kids.push_back(std::move(sub));
    return t;
  }
};

inline Term operator*(Term a, Term b) { return Term::and_(std::move(a), std::move(b)); }
inline Term operator+(Term a, Term b) { return Term::or_(std::move(a), std::move(b)); }
inline Term operator-(Term a) { return Term::not_(std::move(a)); }

inline void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::Var) out.insert(t.name);
  for (const auto& k : t.kids) collect_vars(k, out);
}

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

// The named terms of Pigozzi's interpolation argument, over the variables
// x, y, z, w:
//   r = c0(x * c1 y) * c0(x * -c1 y)
//   s = c0 c1(c1 z * s[0|1] c1 z * -d(0,1)) + c0(x * -c1 z)
//   t = like s with w for z
//   a = x * c1 y * -c0(x * -c1 z)
//   b = x * -c1 y * -c0(x * -c1 z)
struct PigozziTerms {
  Term r, s, t, a, b;
};

inline PigozziTerms pigozzi_terms() {
  auto c0 = [](Term t) { return Term::cyl({0}, std::move(t)); };
  auto c1 = [](Term t) { return Term::cyl({1}, std::move(t)); };
  auto s01 = [](Term t) { return Term::repl(0, 1, std::move(t)); };
  Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z"),
       w = Term::var("w");
  Term d01 = Term::diag_pair(0, 1);

  PigozziTerms p;
  p.r = c0(x * c1(y)) * c0(x * -c1(y));
  p.s = c0(c1(c1(z) * s01(c1(z)) * -d01)) + c0(x * -c1(z));
  p.t = c0(c1(c1(w) * s01(c1(w)) * -d01)) + c0(x * -c1(w));
  p.a = x * c1(y) * -c0(x * -c1(z));
  p.b = x * -c1(y) * -c0(x * -c1(z));
  return p;
}

}  // namespace pea
