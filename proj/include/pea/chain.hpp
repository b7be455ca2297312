// The derivation chain behind r <= s * t, line by line.  Each line is a pair
// of terms under <= or =, evaluated bit-exactly per sampled environment over
// the variables x, y, z, w.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pea/eval.hpp"
#include "pea/print.hpp"
#include "pea/report.hpp"
#include "pea/sampling.hpp"
#include "pea/set_algebra.hpp"
#include "pea/term.hpp"

namespace pea {

struct ChainLine {
  std::string id;
  Term lhs;
  bool equality;  // otherwise <=
  Term rhs;
};

inline std::vector<ChainLine> pigozzi_chain_lines() {
  auto c0 = [](Term t) { return Term::cyl({0}, std::move(t)); };
  auto c1 = [](Term t) { return Term::cyl({1}, std::move(t)); };
  auto s01 = [](Term t) { return Term::repl(0, 1, std::move(t)); };
  Term x = Term::var("x"), y = Term::var("y"), z = Term::var("z");
  Term d01 = Term::diag_pair(0, 1);
  PigozziTerms p = pigozzi_terms();
  const Term& a = p.a;
  const Term& b = p.b;

  std::vector<ChainLine> lines;
  auto leq = [&](std::string id, Term l, Term r) {
    lines.push_back({std::move(id), std::move(l), false, std::move(r)});
  };
  auto eq = [&](std::string id, Term l, Term r) {
    lines.push_back({std::move(id), std::move(l), true, std::move(r)});
  };

  leq("premise-z-bound", x * -c0(x * -c1(z)), c1(z));
  leq("a-below-c1z", a, c1(z));
  leq("b-below-c1z", b, c1(z));
  leq("step-1", c1(a) * c1(b), c1(x * c1(y)) * c1(x * -c1(y)));
  eq("step-2", c1(x * c1(y)) * c1(x * -c1(y)), c1(x) * c1(y) * c1(x) * -c1(y));
  eq("p1", c1(a) * c1(b), Term::zero());
  leq("p2a", c1(a), c1(z));
  leq("p2b", c1(b), c1(z));
  leq("step-3", c0(a) * c0(b), c0(c1(a)) * c0(c1(b)));
  eq("step-4", c0(c1(a)) * c0(c1(b)), c0(c1(a)) * c1(s01(c1(b))));
  eq("step-5", c0(c1(a)) * c1(s01(c1(b))), c1(c0(c1(a)) * s01(c1(b))));
  eq("step-6", c1(c0(c1(a)) * s01(c1(b))), c0(c1(c1(a) * s01(c1(b)))));
  eq("step-7", c0(c1(c1(a) * s01(c1(b)))),
     c0(c1(c1(a) * s01(c1(b)) * (-d01 + d01))));
  eq("step-8", c0(c1(c1(a) * s01(c1(b)) * (-d01 + d01))),
     c0(c1(c1(a) * s01(c1(b)) * -d01 + c1(a) * s01(c1(b)) * d01)));
  eq("step-9", c0(c1(c1(a) * s01(c1(b)) * -d01 + c1(a) * s01(c1(b)) * d01)),
     c0(c1(c1(a) * s01(c1(b)) * -d01 + c1(a) * c1(b) * d01)));
  eq("step-10", c0(c1(c1(a) * s01(c1(b)) * -d01 + c1(a) * c1(b) * d01)),
     c0(c1(c1(a) * s01(c1(b)) * -d01)));
  leq("step-11", c0(c1(c1(a) * s01(c1(b)) * -d01)),
      c0(c1(c1(z) * s01(c1(z)) * -d01)));
  leq("proved-display", c0(a) * c0(b), c0(c1(c1(z) * s01(c1(z)) * -d01)));
  leq("penultimate", c0(x * c1(y)) * c0(x * -c1(y)) * -c0(x * -c1(z)),
      c0(c1(c1(z) * s01(c1(z)) * -d01)));
  leq("r-below-s", p.r, p.s);
  leq("r-below-t", p.r, p.t);
  leq("r-below-st", p.r, p.s * p.t);
  return lines;
}

// Runs every chain line on `samples` sampled environments plus the two fixed
// ones (all variables 0; x = 1, y = d(0,1), z = w = 1).  Aggregates into one
// report; the first violated line is recorded with its environment.
template <typename A>
CheckReport verify_pigozzi_chain(const A& alg, int samples, std::uint64_t seed) {
  if (alg.alpha() < 2) throw Error("verify_pigozzi_chain: alpha must be >= 2");
  CheckReport rep;
  rep.name = "pigozzi-chain";
  rep.verdict = Verdict::HoldsSampled;

  auto lines = pigozzi_chain_lines();
  Rng rng(seed);

  std::vector<Environment<A>> envs;
  envs.push_back({{"x", alg.zero()},
                  {"y", alg.zero()},
                  {"z", alg.zero()},
                  {"w", alg.zero()}});
  envs.push_back({{"x", alg.one()},
                  {"y", alg.diag_pair(0, 1)},
                  {"z", alg.one()},
                  {"w", alg.one()}});
  for (int k = 0; k < samples; ++k)
    envs.push_back({{"x", sample_elem(alg, rng)},
                    {"y", sample_elem(alg, rng)},
                    {"z", sample_elem(alg, rng)},
                    {"w", sample_elem(alg, rng)}});

  for (std::size_t ei = 0; ei < envs.size(); ++ei) {
    for (const auto& line : lines) {
      auto lv = eval(line.lhs, alg, envs[ei]);
      auto rv = eval(line.rhs, alg, envs[ei]);
      bool ok = line.equality ? lv == rv : lv <= rv;
      if (!ok) {
        rep.verdict = Verdict::Fails;
        Json w;
        w["line"] = line.id;
        w["display"] =
            print(line.lhs) + (line.equality ? " = " : " <= ") + print(line.rhs);
        w["env-index"] = ei;
        w["seed"] = seed;
        Json env;
        for (const auto& [name, val] : envs[ei]) {
          Json ranks = Json::array();
          for (auto r : val.ranks()) ranks.push_back(r);
          env[name] = std::move(ranks);
        }
        w["env"] = std::move(env);
        Json lw = Json::array(), rw = Json::array();
        for (auto r : lv.ranks()) lw.push_back(r);
        for (auto r : rv.ranks()) rw.push_back(r);
        w["lhs"] = std::move(lw);
        w["rhs"] = std::move(rw);
        rep.witness = std::move(w);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace pea
