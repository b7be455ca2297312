// Printer for the term language; parse(print(t)) == t structurally.
#pragma once

#include <sstream>
#include <string>

#include "pea/term.hpp"

namespace pea {

namespace detail {

// Precedence levels: sum < product < prefix < atom.  A child printed at
// level `need` gets parentheses when its own level is lower.
enum Level { LvSum = 0, LvProduct = 1, LvPrefix = 2, LvAtom = 3 };

inline Level level_of(const Term& t) {
  switch (t.kind) {
    case TermKind::Or:
      return LvSum;
    case TermKind::And:
      return LvProduct;
    case TermKind::Not:
    case TermKind::Cyl:
    case TermKind::Subst:
    case TermKind::Repl:
      return LvPrefix;
    default:
      return LvAtom;
  }
}

inline void print_term(std::ostream& os, const Term& t, Level need) {
  bool parens = level_of(t) < need;
  if (parens) os << "(";
  switch (t.kind) {
    case TermKind::Zero:
      os << "0";
      break;
    case TermKind::One:
      os << "1";
      break;
    case TermKind::Var:
      os << t.name;
      break;
    case TermKind::DiagPair:
      os << "d(" << t.i << "," << t.j << ")";
      break;
    case TermKind::Diag: {
      os << "dE{";
      for (std::size_t c = 0; c < t.classes.size(); ++c) {
        if (c) os << ",";
        os << "{";
        for (std::size_t m = 0; m < t.classes[c].size(); ++m) {
          if (m) os << ",";
          os << t.classes[c][m];
        }
        os << "}";
      }
      os << "}";
      break;
    }
    case TermKind::Cyl: {
      os << "c(";
      for (std::size_t k = 0; k < t.gamma.size(); ++k) {
        if (k) os << " ";
        os << t.gamma[k];
      }
      os << ") ";
      print_term(os, t.kids[0], LvPrefix);
      break;
    }
    case TermKind::Subst: {
      os << "s[";
      for (std::size_t k = 0; k < t.mapping.size(); ++k) {
        if (k) os << ", ";
        os << t.mapping[k].first << "->" << t.mapping[k].second;
      }
      os << "] ";
      print_term(os, t.kids[0], LvPrefix);
      break;
    }
    case TermKind::Repl:
      os << "s[" << t.i << "|" << t.j << "] ";
      print_term(os, t.kids[0], LvPrefix);
      break;
    case TermKind::Not:
      os << "-";
      print_term(os, t.kids[0], LvPrefix);
      break;
    case TermKind::And:
      // left-associative: force parens on a right child of equal level
      print_term(os, t.kids[0], LvProduct);
      os << " * ";
      print_term(os, t.kids[1], LvPrefix);
      break;
    case TermKind::Or:
      print_term(os, t.kids[0], LvSum);
      os << " + ";
      print_term(os, t.kids[1], LvProduct);
      break;
  }
  if (parens) os << ")";
}

}  // namespace detail

inline std::string print(const Term& t) {
  std::ostringstream os;
  detail::print_term(os, t, detail::LvSum);
  return os.str();
}

}  // namespace pea
