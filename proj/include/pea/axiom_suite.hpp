// The fourteen-postulate axiom suite, run against any algebra exposing the
// signature.  Quantification over Gamma and over coordinate pairs (i,j) is
// exhaustive; transformations and diagonal indices are sampled with the
// always-included cases Id, [0|1] and the full-merge relation; elements come
// from the mixed generator.  A fails verdict always carries a reproducible
// witness.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "pea/report.hpp"
#include "pea/sampling.hpp"
#include "pea/set_algebra.hpp"

namespace pea {

// Selectable signature reducts: the full kappa-generalized signature, the
// quasi-polyadic fragment (pair diagonals only), and the substitution-free
// fragment (general diagonals, no s_tau).
enum class Fragment { Full, Quasipolyadic, Lucas };

inline const char* to_string(Fragment f) {
  switch (f) {
    case Fragment::Full:
      return "full";
    case Fragment::Quasipolyadic:
      return "quasipolyadic";
    case Fragment::Lucas:
      return "lucas";
  }
  return "?";
}

namespace detail {

template <typename A>
Json elem_witness(const A&, const typename A::value_type& x) {
  Json j = Json::array();
  for (auto r : x.ranks()) j.push_back(r);
  return j;
}

inline Json gamma_json(const std::vector<std::uint32_t>& g) {
  Json j = Json::array();
  for (auto i : g) j.push_back(i);
  return j;
}

inline Json tau_json(const Transformation& t) {
  Json j = Json::array();
  for (auto v : t.image()) j.push_back(v);
  return j;
}

inline Json equiv_json(const EquivRel& e) {
  Json j = Json::array();
  for (auto v : e.labels()) j.push_back(v);
  return j;
}

// Sampled diagonal indices for one postulate run: the always-included
// specials followed by random draws (pair relations only in the
// quasi-polyadic fragment).
inline std::vector<EquivRel> equiv_pool(std::uint32_t alpha, int samples,
                                        Fragment frag, Rng& rng) {
  std::vector<EquivRel> pool{EquivRel::identity(alpha), EquivRel::full(alpha)};
  if (frag == Fragment::Quasipolyadic) {
    pool.clear();
    pool.push_back(EquivRel::identity(alpha));
  }
  int want = std::max(4, samples / 16);
  for (int k = 0; k < want; ++k) {
    if (frag == Fragment::Quasipolyadic) {
      auto i = static_cast<std::uint32_t>(rng.below(alpha));
      auto j = static_cast<std::uint32_t>(rng.below(alpha));
      pool.push_back(EquivRel::pair(alpha, i, j));
    } else {
      pool.push_back(sample_equiv(alpha, rng));
    }
  }
  return pool;
}

inline std::vector<Transformation> tau_pool(std::uint32_t alpha, int samples,
                                            Rng& rng) {
  std::vector<Transformation> pool{Transformation::identity(alpha)};
  if (alpha >= 2) pool.push_back(Transformation::replacement(alpha, 0, 1));
  int want = std::max(4, samples / 16);
  for (int k = 0; k < want; ++k) pool.push_back(sample_transformation(alpha, rng));
  return pool;
}

}  // namespace detail

template <typename A>
std::vector<CheckReport> run_axiom_suite(const A& alg, int samples,
                                         std::uint64_t seed,
                                         Fragment frag = Fragment::Full) {
  using Elem = typename A::value_type;
  const std::uint32_t alpha = alg.alpha();
  const auto gammas = alg.all_gammas();
  std::vector<CheckReport> out;

  auto run = [&](int number, const std::string& title, bool exhaustive,
                 auto body) {
    if (frag == Fragment::Lucas) {
      // substitution-free reduct: skip every postulate mentioning s_tau
      static const bool uses_subst[15] = {false, false, false, false, false,
                                          false, true,  true,  true,  true,
                                          true,  false, false, true,  true};
      if (uses_subst[number]) return;
    }
    CheckReport rep;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "postulate-%02d", number);
    rep.name = std::string(buf) + " " + title;
    rep.verdict = exhaustive ? Verdict::HoldsExhaustive : Verdict::HoldsSampled;
    Rng rng(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(number)));
    Json witness;
    if (!body(rng, witness)) {
      rep.verdict = Verdict::Fails;
      witness["seed"] = seed;
      rep.witness = std::move(witness);
    }
    out.push_back(std::move(rep));
  };

  auto sample = [&](Rng& rng) { return sample_elem(alg, rng); };

  // 1: Boolean algebra laws on sampled triples.
  run(1, "boolean-algebra", false, [&](Rng& rng, Json& w) {
    for (int k = 0; k < samples; ++k) {
      Elem x = sample(rng), y = sample(rng), z = sample(rng);
      bool ok = (x | y) == (y | x) && (x & y) == (y & x) &&
                ((x | y) | z) == (x | (y | z)) &&
                ((x & y) & z) == (x & (y & z)) &&
                (x & (y | z)) == ((x & y) | (x & z)) &&
                (x | (y & z)) == ((x | y) & (x | z)) &&
                (x | (x & y)) == x && (x & (x | y)) == x &&
                (x | ~x) == alg.one() && (x & ~x) == alg.zero() &&
                (~~x) == x && (x | alg.zero()) == x && (x & alg.one()) == x;
      if (!ok) {
        w["law"] = "boolean";
        w["x"] = detail::elem_witness(alg, x);
        w["y"] = detail::elem_witness(alg, y);
        w["z"] = detail::elem_witness(alg, z);
        return false;
      }
    }
    return true;
  });

  // 2: c_(Gamma) 0 = 0, exhaustive over Gamma.
  run(2, "cyl-of-zero", true, [&](Rng&, Json& w) {
    for (const auto& g : gammas)
      if (alg.cyl(g, alg.zero()) != alg.zero()) {
        w["gamma"] = detail::gamma_json(g);
        return false;
      }
    return true;
  });

  // 3: x <= c_(Gamma) x.
  run(3, "cyl-increasing", false, [&](Rng& rng, Json& w) {
    for (int k = 0; k < samples; ++k) {
      Elem x = sample(rng);
      for (const auto& g : gammas)
        if (!(x <= alg.cyl(g, x))) {
          w["gamma"] = detail::gamma_json(g);
          w["x"] = detail::elem_witness(alg, x);
          return false;
        }
    }
    return true;
  });

  // 4: c_(Gamma)(x * c_(Gamma) y) = c_(Gamma) x * c_(Gamma) y.
  run(4, "cyl-meet-distribution", false, [&](Rng& rng, Json& w) {
    for (int k = 0; k < samples; ++k) {
      Elem x = sample(rng), y = sample(rng);
      for (const auto& g : gammas) {
        Elem cy = alg.cyl(g, y);
        if (alg.cyl(g, x & cy) != (alg.cyl(g, x) & cy)) {
          w["gamma"] = detail::gamma_json(g);
          w["x"] = detail::elem_witness(alg, x);
          w["y"] = detail::elem_witness(alg, y);
          return false;
        }
      }
    }
    return true;
  });

  // 5: c_(Gamma) c_(Delta) x = c_(Gamma \/ Delta) x.
  run(5, "cyl-union", false, [&](Rng& rng, Json& w) {
    for (int k = 0; k < samples; ++k) {
      Elem x = sample(rng);
      for (const auto& g : gammas)
        for (const auto& d : gammas) {
          std::vector<std::uint32_t> un = g;
          un.insert(un.end(), d.begin(), d.end());
          if (alg.cyl(g, alg.cyl(d, x)) != alg.cyl(un, x)) {
            w["gamma"] = detail::gamma_json(g);
            w["delta"] = detail::gamma_json(d);
            w["x"] = detail::elem_witness(alg, x);
            return false;
          }
        }
    }
    return true;
  });

  // 6: s_tau is a boolean endomorphism.
  run(6, "subst-endomorphism", false, [&](Rng& rng, Json& w) {
    auto taus = detail::tau_pool(alpha, samples, rng);
    for (int k = 0; k < samples; ++k) {
      Elem x = sample(rng), y = sample(rng);
      const auto& tau = taus[k % taus.size()];
      bool ok = alg.subst(tau, x | y) == (alg.subst(tau, x) | alg.subst(tau, y)) &&
                alg.subst(tau, x & y) == (alg.subst(tau, x) & alg.subst(tau, y)) &&
                alg.subst(tau, ~x) == ~alg.subst(tau, x) &&
                alg.subst(tau, alg.one()) == alg.one() &&
                alg.subst(tau, alg.zero()) == alg.zero();
      if (!ok) {
        w["tau"] = detail::tau_json(tau);
        w["x"] = detail::elem_witness(alg, x);
        w["y"] = detail::elem_witness(alg, y);
        return false;
      }
    }
    return true;
  });

  // 7: s_Id x = x; exhaustive on the rank atoms when the algebra is concrete.
  run(7, "subst-identity", true, [&](Rng& rng, Json& w) {
    auto id = Transformation::identity(alpha);
    if constexpr (requires(const A& a) {
                    a.points();
                    a.from_ranks(std::vector<std::uint64_t>{});
                  }) {
      for (std::uint64_t p = 0; p < alg.points(); ++p) {
        Elem atom = alg.from_ranks({p});
        if (alg.subst(id, atom) != atom) {
          w["rank"] = p;
          return false;
        }
      }
    }
    for (int k = 0; k < std::min(samples, 32); ++k) {
      Elem x = sample(rng);
      if (alg.subst(id, x) != x) {
        w["x"] = detail::elem_witness(alg, x);
        return false;
      }
    }
    return true;
  });

  // 8: s_{sigma o tau} = s_sigma o s_tau.
  run(8, "subst-composition", false, [&](Rng& rng, Json& w) {
    auto taus = detail::tau_pool(alpha, samples, rng);
    for (int k = 0; k < samples; ++k) {
      Elem x = sample(rng);
      const auto& sg = taus[rng.below(taus.size())];
      const auto& tu = taus[rng.below(taus.size())];
      if (alg.subst(compose(sg, tu), x) != alg.subst(sg, alg.subst(tu, x))) {
        w["sigma"] = detail::tau_json(sg);
        w["tau"] = detail::tau_json(tu);
        w["x"] = detail::elem_witness(alg, x);
        return false;
      }
    }
    return true;
  });

  // 9: sigma, tau agreeing outside Gamma act equally on c_(Gamma) x.
  run(9, "subst-agreement-off-gamma", false, [&](Rng& rng, Json& w) {
    for (int k = 0; k < samples; ++k) {
      Elem x = sample(rng);
      auto tau = sample_transformation(alpha, rng);
      for (const auto& g : gammas) {
        std::vector<std::uint32_t> img = tau.image();
        for (auto i : g) img[i] = static_cast<std::uint32_t>(rng.below(alpha));
        Transformation sigma(img);
        Elem cx = alg.cyl(g, x);
        if (alg.subst(sigma, cx) != alg.subst(tau, cx)) {
          w["gamma"] = detail::gamma_json(g);
          w["sigma"] = detail::tau_json(sigma);
          w["tau"] = detail::tau_json(tau);
          w["x"] = detail::elem_witness(alg, x);
          return false;
        }
      }
    }
    return true;
  });

  // 10: tau^{-1} Gamma = Delta and tau injective on Delta give
  //     c_(Gamma) s_tau x = s_tau c_(Delta) x.
  run(10, "cyl-subst-commutation", false, [&](Rng& rng, Json& w) {
    auto taus = detail::tau_pool(alpha, samples, rng);
    for (int k = 0; k < samples; ++k) {
      Elem x = sample(rng);
      const auto& tau = taus[k % taus.size()];
      for (const auto& g : gammas) {
        auto delta = tau.preimage(g);
        if (!tau.injective_on(delta)) continue;  // hypothesis not met
        if (alg.cyl(g, alg.subst(tau, x)) != alg.subst(tau, alg.cyl(delta, x))) {
          w["gamma"] = detail::gamma_json(g);
          w["tau"] = detail::tau_json(tau);
          w["x"] = detail::elem_witness(alg, x);
          return false;
        }
      }
    }
    return true;
  });

  // 11: d_Id = 1.
  run(11, "diag-identity-unit", true, [&](Rng&, Json& w) {
    if (alg.diag(EquivRel::identity(alpha)) != alg.one()) {
      w["note"] = "d_Id != 1";
      return false;
    }
    return true;
  });

  // 12: c_(Gamma) d_E = d_F with F = E restricted outside Gamma plus Id.
  run(12, "cyl-of-diag", false, [&](Rng& rng, Json& w) {
    auto es = detail::equiv_pool(alpha, samples, frag, rng);
    for (const auto& e : es)
      for (const auto& g : gammas)
        if (alg.cyl(g, alg.diag(e)) != alg.diag(e.outside(g))) {
          w["gamma"] = detail::gamma_json(g);
          w["e"] = detail::equiv_json(e);
          return false;
        }
    return true;
  });

  // 13: s_tau d_E = d_F with F the closed tau-image of E.
  run(13, "subst-of-diag", false, [&](Rng& rng, Json& w) {
    auto es = detail::equiv_pool(alpha, samples, frag, rng);
    auto taus = detail::tau_pool(alpha, samples, rng);
    for (const auto& e : es)
      for (const auto& tau : taus)
        if (alg.subst(tau, alg.diag(e)) != alg.diag(e.image_under(tau))) {
          w["tau"] = detail::tau_json(tau);
          w["e"] = detail::equiv_json(e);
          return false;
        }
    return true;
  });

  // 14: x * d_ij <= s_[i|j] x, exhaustive over all ordered pairs (i,j).
  run(14, "replacement-bound", false, [&](Rng& rng, Json& w) {
    for (int k = 0; k < samples; ++k) {
      Elem x = sample(rng);
      for (std::uint32_t i = 0; i < alpha; ++i)
        for (std::uint32_t j = 0; j < alpha; ++j) {
          Elem rep = (i == j)
                         ? alg.subst(Transformation::identity(alpha), x)
                         : alg.replacement(i, j, x);
          if (!((x & alg.diag_pair(i, j)) <= rep)) {
            w["i"] = i;
            w["j"] = j;
            w["x"] = detail::elem_witness(alg, x);
            return false;
          }
        }
    }
    return true;
  });

  return out;
}

}  // namespace pea
