// Compositional evaluation of terms against any algebra exposing the
// signature (the concrete set algebra or the symbolic partition algebra).
#pragma once

#include <map>
#include <string>

#include "pea/equiv.hpp"
#include "pea/term.hpp"
#include "pea/transformation.hpp"

namespace pea {

template <typename A>
using Environment = std::map<std::string, typename A::value_type>;

struct EvalError : Error {
  using Error::Error;
};

template <typename A>
typename A::value_type eval(const Term& t, const A& alg,
                            const Environment<A>& env) {
  const std::uint32_t alpha = alg.alpha();
  auto check_index = [&](std::uint32_t i) {
    if (i >= alpha)
      throw EvalError("eval: index " + std::to_string(i) +
                      " out of range for alpha=" + std::to_string(alpha));
  };
  switch (t.kind) {
    case TermKind::Zero:
      return alg.zero();
    case TermKind::One:
      return alg.one();
    case TermKind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw EvalError("eval: unbound variable " + t.name);
      if (it->second.alpha != alpha)
        throw EvalError("eval: binding for " + t.name +
                        " belongs to a different algebra");
      return it->second;
    }
    case TermKind::DiagPair:
      check_index(t.i);
      check_index(t.j);
      return alg.diag_pair(t.i, t.j);
    case TermKind::Diag: {
      for (const auto& c : t.classes)
        for (auto m : c) check_index(m);
      return alg.diag(EquivRel::from_classes(alpha, t.classes));
    }
    case TermKind::Cyl: {
      for (auto i : t.gamma) check_index(i);
      return alg.cyl(t.gamma, eval(t.kids[0], alg, env));
    }
    case TermKind::Subst: {
      for (auto [src, dst] : t.mapping) {
        check_index(src);
        check_index(dst);
      }
      return alg.subst(Transformation::from_partial(alpha, t.mapping),
                       eval(t.kids[0], alg, env));
    }
    case TermKind::Repl:
      check_index(t.i);
      check_index(t.j);
      return alg.replacement(t.i, t.j, eval(t.kids[0], alg, env));
    case TermKind::And:
      return eval(t.kids[0], alg, env) & eval(t.kids[1], alg, env);
    case TermKind::Or:
      return eval(t.kids[0], alg, env) | eval(t.kids[1], alg, env);
    case TermKind::Not:
      return ~eval(t.kids[0], alg, env);
  }
  throw EvalError("eval: unknown node kind");
}

}  // namespace pea
