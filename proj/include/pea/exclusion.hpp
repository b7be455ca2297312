// Interpolant exclusion.  Generates the subalgebra S from the identity-kernel
// atom, confirms every member is a union of kernel atoms, evaluates the two
// bounds r and c_(Gamma)(s * t) under the witness bindings, and enumerates S
// for elements sitting between them.
//
// At a single finite base the two nonemptiness facts split: the r side needs
// base >= alpha + 1 (an injective non-surjective sigma) while the s*t side
// needs base = alpha (injective-off-Gamma sequences permute Gamma).  The
// verdict is holds-exhaustive only when everything succeeds at the configured
// base; otherwise the full data is reported.  The count of elements meeting
// the identity atom while fitting under the upper bound is included: that is
// the quantity the atomicity step of the argument drives to zero.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pea/eval.hpp"
#include "pea/partition_algebra.hpp"
#include "pea/report.hpp"
#include "pea/set_algebra.hpp"
#include "pea/witness.hpp"

namespace pea {

struct ExclusionResult {
  std::size_t cell_count = 0;
  std::size_t family_size = 0;
  bool all_in_c = false;
  bool r_fact = false;     // X_Id /\ r  nonempty
  bool st_fact = false;    // X_Id ~ c_(Gamma)(s*t)  nonempty
  std::size_t sandwich_count = 0;       // u with r <= u <= c_(Gamma)(s*t)
  std::size_t atom_meeting_count = 0;   // u meeting X_Id with u <= c_(Gamma)(s*t)
  std::vector<std::uint64_t> sandwich_example;  // ranks of one such u, if any
  CheckReport report;
};

inline ExclusionResult run_exclusion(const SetAlgebra& alg,
                                     const std::vector<std::uint32_t>& gamma) {
  ExclusionResult res;
  WitnessPack pack = build_witnesses(alg, gamma, /*require_shift=*/false);

  auto cells = alg.generated_cells({pack.x_id});
  res.cell_count = cells.size();
  auto family = alg.generated_subalgebra({pack.x_id});
  res.family_size = family.size();

  PartitionAlgebra palg(alg.alpha());
  AtomTable table(palg, alg);
  res.all_in_c = true;
  Elem bad = alg.zero();
  for (const auto& u : family) {
    if (!table.membership(u)) {
      res.all_in_c = false;
      bad = u;
      break;
    }
  }

  Environment<SetAlgebra> env{{"x", pack.x_id},
                              {"y", pack.y ? *pack.y : alg.zero()},
                              {"z", pack.z},
                              {"w", pack.w}};
  PigozziTerms terms = pigozzi_terms();
  Elem rv = eval(terms.r, alg, env);
  Elem upper = alg.cyl(gamma, eval(terms.s * terms.t, alg, env));

  res.r_fact = (pack.x_id & rv).any();
  res.st_fact = (pack.x_id - upper).any();

  for (const auto& u : family) {
    if (rv <= u && u <= upper) {
      if (res.sandwich_count == 0) res.sandwich_example = u.ranks();
      ++res.sandwich_count;
    }
    if ((pack.x_id & u).any() && u <= upper) ++res.atom_meeting_count;
  }

  std::string gname;
  for (auto i : gamma) gname += (gname.empty() ? "" : ",") + std::to_string(i);
  CheckReport rep;
  rep.name = "interpolant-exclusion(gamma=" + gname + ")";
  Json data;
  data["cells"] = res.cell_count;
  data["family-size"] = res.family_size;
  data["all-in-c"] = res.all_in_c;
  data["r-fact"] = res.r_fact;
  data["st-fact"] = res.st_fact;
  data["sandwich-count"] = res.sandwich_count;
  data["atom-meeting-count"] = res.atom_meeting_count;
  data["sigma-part"] = pack.has_shift();
  if (!res.sandwich_example.empty() || res.sandwich_count > 0) {
    Json ex = Json::array();
    for (auto r : res.sandwich_example) ex.push_back(r);
    data["sandwich-example"] = std::move(ex);
  }
  if (!res.all_in_c) {
    rep.verdict = Verdict::Fails;
    Json b = Json::array();
    for (auto r : bad.ranks()) b.push_back(r);
    data["outside-c"] = std::move(b);
  } else if (res.r_fact && res.st_fact && res.sandwich_count == 0) {
    rep.verdict = Verdict::HoldsExhaustive;
  } else {
    rep.verdict = Verdict::Reported;
  }
  rep.witness = std::move(data);
  res.report = rep;
  return res;
}

}  // namespace pea
