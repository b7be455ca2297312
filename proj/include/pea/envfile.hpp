// Environment and term files for the eval front-end.
//
// Env files bind one variable per line, '#' comments:
//   x = X_Id                  (the injective-pattern kernel atom)
//   y = d(0,1)                (a pair diagonal)
//   v = [1,5,9]               (explicit sequence ranks)
//   u = c_gamma_of_iota(0,1)  (c_(Gamma) of the identity-pattern singleton)
// Term files carry one term per line, '#' comments, blank lines skipped.
#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "pea/eval.hpp"
#include "pea/partition_algebra.hpp"
#include "pea/set_algebra.hpp"

namespace pea {

namespace detail {

inline std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

inline std::vector<std::uint32_t> parse_index_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (!item.empty()) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  return out;
}

}  // namespace detail

inline Elem parse_env_value(const SetAlgebra& alg, const std::string& value) {
  if (value == "X_Id")
    return atom_concrete(Partition::identity(alg.alpha()), alg);
  if (value.rfind("d(", 0) == 0 && value.back() == ')') {
    auto idx = detail::parse_index_list(value.substr(2, value.size() - 3));
    if (idx.size() != 2) throw Error("env: d(i,j) needs two indices");
    return alg.diag_pair(idx[0], idx[1]);
  }
  if (value.rfind("c_gamma_of_iota(", 0) == 0 && value.back() == ')') {
    auto g = detail::parse_index_list(value.substr(16, value.size() - 17));
    return alg.cyl(g, alg.singleton(Sequence::identity(alg.alpha())));
  }
  if (!value.empty() && value.front() == '[' && value.back() == ']') {
    std::vector<std::uint64_t> ranks;
    std::stringstream ss(value.substr(1, value.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = detail::strip(item);
      if (!item.empty()) ranks.push_back(std::stoull(item));
    }
    return alg.from_ranks(ranks);
  }
  throw Error("env: unrecognized binding value '" + value + "'");
}

inline Environment<SetAlgebra> load_env(const SetAlgebra& alg, std::istream& in,
                                        const std::string& origin = "<env>") {
  Environment<SetAlgebra> env;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(origin + ":" + std::to_string(lineno) +
                  ": expected name = value");
    std::string name = detail::strip(line.substr(0, eq));
    std::string value = detail::strip(line.substr(eq + 1));
    if (name.empty())
      throw Error(origin + ":" + std::to_string(lineno) + ": empty name");
    env[name] = parse_env_value(alg, value);
  }
  return env;
}

inline std::vector<std::string> load_term_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::strip(line);
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace pea
