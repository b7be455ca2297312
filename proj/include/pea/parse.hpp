// Recursive-descent parser for the term language.
//
//   term    ::= product ('+' product)*
//   product ::= factor ('*' factor)*
//   factor  ::= '-' factor
//             | 'c' '(' index* ')' factor
//             | 's' '[' (index '|' index | maplist) ']' factor
//             | atom
//   maplist ::= (index '->' index (',' index '->' index)*)?
//   atom    ::= '0' | '1' | 'd' '(' index ',' index ')'
//             | 'dE' '{' classlist '}' | identifier | '(' term ')'
//   classlist ::= ('{' index (',' index)* '}' (',' '{' ... '}')*)?
//
// Prefix operators bind to the following factor; '*' binds tighter than '+'.
// '#' starts a comment running to end of line.
#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pea/term.hpp"

namespace pea {

struct ParseError : Error {
  int line;
  int col;
  std::vector<std::string> expected;

  ParseError(int line_, int col_, std::vector<std::string> expected_,
             const std::string& found)
      : Error(format(line_, col_, expected_, found)),
        line(line_),
        col(col_),
        expected(std::move(expected_)) {}

  static std::string format(int line, int col,
                            const std::vector<std::string>& expected,
                            const std::string& found) {
    std::ostringstream os;
    os << "parse error at " << line << ":" << col << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      os << (i ? " | " : "") << expected[i];
    os << ", found " << found;
    return os.str();
  }
};

namespace detail {

struct Token {
  enum Kind { Num, Ident, Punct, Arrow, End } kind = End;
  std::string text;
  std::uint64_t num = 0;
  int line = 1, col = 1;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::End;
      tok_.text = "<end>";
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Num;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        tok_.text += src_[pos_++];
        ++col_;
      }
      tok_.num = std::stoull(tok_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        tok_.text += src_[pos_++];
        ++col_;
      }
      return;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      tok_.kind = Token::Arrow;
      tok_.text = "->";
      pos_ += 2;
      col_ += 2;
      return;
    }
    tok_.kind = Token::Punct;
    tok_.text = std::string(1, c);
    ++pos_;
    ++col_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
public:
  explicit Parser(const std::string& src) : lex_(src) {}

  Term parse_all() {
    Term t = parse_sum();
    expect_end();
    return t;
  }

private:
  [[noreturn]] void fail(std::vector<std::string> expected) {
    const auto& t = lex_.peek();
    throw ParseError(t.line, t.col, std::move(expected), t.text);
  }

  bool punct(const char* p) const {
    return lex_.peek().kind == Token::Punct && lex_.peek().text == p;
  }
  void eat_punct(const char* p) {
    if (!punct(p)) fail({std::string("'") + p + "'"});
    lex_.take();
  }
  std::uint32_t eat_index() {
    if (lex_.peek().kind != Token::Num) fail({"index"});
    return static_cast<std::uint32_t>(lex_.take().num);
  }

  void expect_end() {
    if (lex_.peek().kind != Token::End) fail({"'+'", "'*'", "end of input"});
  }

  Term parse_sum() {
    Term t = parse_product();
    while (punct("+")) {
      lex_.take();
      t = t + parse_product();
    }
    return t;
  }

  Term parse_product() {
    Term t = parse_factor();
    while (punct("*")) {
      lex_.take();
      t = t * parse_factor();
    }
    return t;
  }

  Term parse_factor() {
    if (punct("-")) {
      lex_.take();
      return -parse_factor();
    }
    const auto& t = lex_.peek();
    if (t.kind == Token::Ident && t.text == "c") {
      // lookahead: plain identifier "c" is a variable unless '(' follows
      Token head = lex_.take();
      if (punct("(")) return parse_cyl();
      return finish_var(head);
    }
    if (t.kind == Token::Ident && t.text == "s") {
      Token head = lex_.take();
      if (punct("[")) return parse_subst();
      return finish_var(head);
    }
    return parse_atom();
  }

  Term finish_var(const Token& head) {
    (void)head;
    return Term::var(head.text);
  }

  Term parse_cyl() {
    eat_punct("(");
    std::vector<std::uint32_t> gamma;
    while (lex_.peek().kind == Token::Num) gamma.push_back(eat_index());
    if (!punct(")")) fail({"index", "')'"});
    lex_.take();
    check_distinct(gamma, "cylindrification indices");
    return Term::cyl(std::move(gamma), parse_factor());
  }

  Term parse_subst() {
    eat_punct("[");
    // replacement sugar s[i|j], or a map list s[i->j, ...]
    if (lex_.peek().kind == Token::Num) {
      std::uint32_t first = eat_index();
      if (punct("|")) {
        lex_.take();
        std::uint32_t j = eat_index();
        eat_punct("]");
        if (first == j) fail({"distinct indices in s[i|j]"});
        return Term::repl(first, j, parse_factor());
      }
      if (lex_.peek().kind != Token::Arrow) fail({"'->'", "'|'"});
      lex_.take();
      std::vector<std::pair<std::uint32_t, std::uint32_t>> mapping;
      mapping.emplace_back(first, eat_index());
      while (punct(",")) {
        lex_.take();
        std::uint32_t src = eat_index();
        if (lex_.peek().kind != Token::Arrow) fail({"'->'"});
        lex_.take();
        mapping.emplace_back(src, eat_index());
      }
      eat_punct("]");
      for (std::size_t a = 0; a < mapping.size(); ++a)
        for (std::size_t b = a + 1; b < mapping.size(); ++b)
          if (mapping[a].first == mapping[b].first)
            fail({"distinct map sources in s[...]"});
      return Term::subst(std::move(mapping), parse_factor());
    }
    eat_punct("]");  // s[] is the identity substitution
    return Term::subst({}, parse_factor());
  }

  Term parse_atom() {
    const auto& t = lex_.peek();
    if (t.kind == Token::Num) {
      Token n = lex_.take();
      if (n.num == 0) return Term::zero();
      if (n.num == 1) return Term::one();
      std::vector<std::string> exp{"'0'", "'1'", "term"};
      throw ParseError(n.line, n.col, exp, n.text);
    }
    if (t.kind == Token::Ident && t.text == "d") {
      Token head = lex_.take();
      if (punct("(")) {
        lex_.take();
        std::uint32_t i = eat_index();
        eat_punct(",");
        std::uint32_t j = eat_index();
        eat_punct(")");
        return Term::diag_pair(i, j);
      }
      return finish_var(head);
    }
    if (t.kind == Token::Ident && t.text == "dE") {
      Token head = lex_.take();
      if (punct("{")) return parse_diag();
      return finish_var(head);
    }
    if (t.kind == Token::Ident) return Term::var(lex_.take().text);
    if (punct("(")) {
      lex_.take();
      Term inner = parse_sum();
      eat_punct(")");
      return inner;
    }
    fail({"term"});
  }

  Term parse_diag() {
    eat_punct("{");
    std::vector<std::vector<std::uint32_t>> classes;
    if (punct("{")) {
      classes.push_back(parse_class());
      while (punct(",")) {
        lex_.take();
        classes.push_back(parse_class());
      }
    }
    eat_punct("}");
    const auto& t = lex_.peek();
    try {
      return Term::diag(std::move(classes));
    } catch (const Error& e) {
      throw ParseError(t.line, t.col, {"disjoint classes in dE{...}"}, e.what());
    }
  }

  std::vector<std::uint32_t> parse_class() {
    eat_punct("{");
    std::vector<std::uint32_t> cls;
    cls.push_back(eat_index());
    while (punct(",")) {
      lex_.take();
      cls.push_back(eat_index());
    }
    eat_punct("}");
    check_distinct(cls, "class members");
    return cls;
  }

  void check_distinct(const std::vector<std::uint32_t>& xs, const char* what) {
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t b = a + 1; b < xs.size(); ++b)
        if (xs[a] == xs[b]) fail({std::string("distinct ") + what});
  }

  Lexer lex_;
};

}  // namespace detail

inline Term parse(const std::string& text) {
  return detail::Parser(text).parse_all();
}

}  // namespace pea
