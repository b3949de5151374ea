#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bindkit/error.hpp"

namespace bindkit::text::detail {

enum class Tok {
  Ident,   // [A-Za-z0-9_']+
  Index,   // #k
  AtomRef, // @name
  Caret,   // ^m
  Punct,   // ( ) [ ] := : ; . | ! \ -> ,
  End,
};

struct Token {
  Tok kind;
  std::string text;  // identifier, punctuation, or the name after '@'
  std::size_t number = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::vector<Token> lex(std::string_view source);

/// Cursor over a token vector with error helpers.
class TokenStream {
 public:
  explicit TokenStream(std::string_view source) : tokens_(lex(source)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  bool at_punct(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool at_ident(std::string_view word) const { return peek().kind == Tok::Ident && peek().text == word; }
  bool at_end() const { return peek().kind == Tok::End; }

  void expect_punct(std::string_view p) {
    if (!at_punct(p)) fail("expected '" + std::string(p) + "'");
    next();
  }

  std::string expect_ident(std::string_view what = "an identifier") {
    if (peek().kind != Tok::Ident) fail("expected " + std::string(what));
    return next().text;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(peek(), message); }

  [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
    std::string found = t.kind == Tok::End ? "end of input" : "'" + describe(t) + "'";
    throw ParseError(message + ", found " + found, t.line, t.column);
  }

  static std::string describe(const Token& t);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace bindkit::text::detail
