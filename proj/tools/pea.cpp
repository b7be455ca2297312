// Batch verification front-end.  Every subcommand prints one JSON report
// document to stdout (or --out) and exits nonzero iff any check fails.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pea/pea.hpp"

namespace {

using namespace pea;

std::vector<std::uint32_t> parse_gamma(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

Json gamma_json(const std::vector<std::uint32_t>& g) {
  Json j = Json::array();
  for (auto i : g) j.push_back(i);
  return j;
}

void write_out(const ReportDoc& doc, const std::string& out_path) {
  std::string text = emit_report(doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file " + out_path);
    out << text;
  }
}

Environment<SetAlgebra> load_env_file(const SetAlgebra& alg,
                                      const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open env file " + path);
  return load_env(alg, in, path);
}

std::vector<std::string> load_term_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open term file " + path);
  return load_term_lines(in);
}

std::vector<std::vector<std::uint32_t>> gammas_with_01(std::uint32_t alpha) {
  std::vector<std::vector<std::uint32_t>> out;
  std::uint32_t rest = alpha - 2;
  for (std::uint32_t m = 0; m < (1u << rest); ++m) {
    std::vector<std::uint32_t> g{0, 1};
    for (std::uint32_t i = 0; i < rest; ++i)
      if ((m >> i) & 1) g.push_back(i + 2);
    out.push_back(std::move(g));
  }
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::int64_t millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite polyadic equality set algebras"};
  app.require_subcommand(1);

  std::uint32_t alpha = 3, base = 3;
  int samples = 500;
  std::uint64_t seed = 1;
  std::string gamma_text, out_path, fragment_text = "full";
  std::string env_path, term_path;
  bool all_gammas = false;
  std::optional<std::uint32_t> base_opt;

  auto add_common = [&](CLI::App* cmd, bool with_base = true) {
    cmd->add_option("--alpha", alpha, "dimension")->required();
    if (with_base) cmd->add_option("--base", base, "base set size")->required();
    cmd->add_option("--out", out_path, "write the report here instead of stdout");
  };

  auto* ax = app.add_subcommand("axioms", "run the fourteen-postulate suite");
  add_common(ax);
  ax->add_option("--samples", samples, "samples per postulate");
  ax->add_option("--seed", seed, "64-bit sampling seed");
  ax->add_option("--fragment", fragment_text, "full|quasipolyadic|lucas");

  auto* pg = app.add_subcommand("pigozzi", "verify the r <= s*t derivation chain");
  add_common(pg);
  pg->add_option("--samples", samples, "sampled environments");
  pg->add_option("--seed", seed, "64-bit sampling seed");

  auto* wt = app.add_subcommand("witness", "print the witness pack");
  wt->add_option("--alpha", alpha, "dimension")->required();
  wt->add_option("--base", [&base_opt](const std::vector<std::string>& v) {
      base_opt = static_cast<std::uint32_t>(std::stoul(v[0]));
      return true;
    }, "base set size (default alpha+1)");
  wt->add_option("--gamma", gamma_text, "comma-separated coordinates, e.g. 0,1,2")
      ->required();
  wt->add_option("--out", out_path, "write the pack here instead of stdout");

  auto* p6 = app.add_subcommand("p6", "membership witness check");
  add_common(p6);
  p6->add_option("--gamma", gamma_text, "comma-separated coordinates")->required();

  auto* p7 = app.add_subcommand("p7", "order-pattern emptiness checks");
  add_common(p7);
  p7->add_option("--gamma", gamma_text, "comma-separated coordinates");
  p7->add_flag("--all-gammas", all_gammas, "every Gamma containing {0,1}");

  auto* ex = app.add_subcommand("exclusion", "interpolant exclusion sweep");
  add_common(ex);
  ex->add_option("--gamma", gamma_text, "comma-separated coordinates")->required();

  auto* ev = app.add_subcommand("eval", "evaluate terms from a file");
  add_common(ev);
  ev->add_option("--env", env_path, "variable bindings file")->required();
  ev->add_option("--term", term_path, "term file, one term per line")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    ReportDoc doc;

    if (ax->parsed()) {
      Fragment frag = Fragment::Full;
      if (fragment_text == "quasipolyadic") frag = Fragment::Quasipolyadic;
      else if (fragment_text == "lucas") frag = Fragment::Lucas;
      else if (fragment_text != "full") throw Error("unknown fragment " + fragment_text);
      SetAlgebra alg({alpha, base});
      doc.config = {{"alpha", alpha}, {"base", base}, {"samples", samples},
                    {"seed", seed},   {"fragment", fragment_text}};
      Timer t;
      auto checks = run_axiom_suite(alg, samples, seed, frag);
      auto total = t.millis();
      for (auto& c : checks) c.millis = total / static_cast<std::int64_t>(checks.size());
      doc.checks = std::move(checks);
    } else if (pg->parsed()) {
      SetAlgebra alg({alpha, base});
      doc.config = {{"alpha", alpha}, {"base", base}, {"samples", samples}, {"seed", seed}};
      Timer t;
      auto rep = verify_pigozzi_chain(alg, samples, seed);
      rep.millis = t.millis();
      doc.checks.push_back(std::move(rep));
    } else if (wt->parsed()) {
      std::uint32_t b = base_opt.value_or(alpha + 1);
      SetAlgebra alg({alpha, b});
      auto gamma = parse_gamma(gamma_text);
      WitnessPack pack = build_witnesses(alg, gamma);
      Json j;
      j["tool-version"] = tool_version();
      j["config"] = {{"alpha", alpha}, {"base", b}, {"gamma", gamma_json(gamma)}};
      j["pack"] = pack_json(pack);
      std::string text = j.dump(2) + "\n";
      if (out_path.empty()) std::cout << text;
      else std::ofstream(out_path) << text;
      return 0;
    } else if (p6->parsed()) {
      SetAlgebra alg({alpha, base});
      auto gamma = parse_gamma(gamma_text);
      doc.config = {{"alpha", alpha}, {"base", base}, {"gamma", gamma_json(gamma)}};
      Timer t;
      auto pack = build_witnesses(alg, gamma, /*require_shift=*/false);
      auto rep = verify_p6(alg, pack);
      rep.millis = t.millis();
      doc.checks.push_back(std::move(rep));
    } else if (p7->parsed()) {
      SetAlgebra alg({alpha, base});
      doc.config = {{"alpha", alpha}, {"base", base}};
      std::vector<std::vector<std::uint32_t>> gs;
      if (all_gammas) {
        if (alpha < 2) throw Error("p7: alpha must be >= 2");
        gs = gammas_with_01(alpha);
      } else {
        if (gamma_text.empty()) throw Error("p7: need --gamma or --all-gammas");
        gs.push_back(parse_gamma(gamma_text));
      }
      for (const auto& g : gs) {
        Timer t;
        auto pack = build_witnesses(alg, g, /*require_shift=*/false);
        auto rep = verify_p7(alg, pack);
        rep.millis = t.millis();
        doc.checks.push_back(std::move(rep));
      }
    } else if (ex->parsed()) {
      SetAlgebra alg({alpha, base});
      auto gamma = parse_gamma(gamma_text);
      doc.config = {{"alpha", alpha}, {"base", base}, {"gamma", gamma_json(gamma)}};
      Timer t;
      auto res = run_exclusion(alg, gamma);
      res.report.millis = t.millis();
      doc.checks.push_back(std::move(res.report));
    } else if (ev->parsed()) {
      SetAlgebra alg({alpha, base});
      doc.config = {{"alpha", alpha}, {"base", base},
                    {"env", env_path}, {"term", term_path}};
      auto env = load_env_file(alg, env_path);
      for (const auto& line : load_term_file(term_path)) {
        Timer t;
        CheckReport rep;
        rep.name = "eval: " + line;
        try {
          Elem v = eval(parse(line), alg, env);
          rep.verdict = Verdict::Reported;
          Json w;
          Json ranks = Json::array();
          for (auto r : v.ranks()) ranks.push_back(r);
          w["ranks"] = std::move(ranks);
          w["count"] = v.count();
          rep.witness = std::move(w);
        } catch (const Error& e) {
          rep.verdict = Verdict::Fails;
          rep.witness = Json{{"error", e.what()}};
        }
        rep.millis = t.millis();
        doc.checks.push_back(std::move(rep));
      }
    }

    write_out(doc, out_path);
    return doc.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
