#include "lexer.hpp"

#include <cctype>

namespace bindkit::text::detail {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

}  // namespace

std::string TokenStream::describe(const Token& t) {
  switch (t.kind) {
    case Tok::Index:
      return "#" + std::to_string(t.number);
    case Tok::AtomRef:
      return "@" + t.text;
    case Tok::Caret:
      return "^" + std::to_string(t.number);
    default:
      return t.text;
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };

  auto read_number = [&](std::size_t start_line, std::size_t start_col, char prefix) {
    std::size_t begin = i;
    while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
    if (begin == i)
      throw ParseError(std::string("expected digits after '") + prefix + "'", start_line, start_col);
    std::size_t value = 0;
    for (std::size_t k = begin; k < i; ++k) value = value * 10 + static_cast<std::size_t>(src[k] - '0');
    return value;
  };

  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok{Tok::Punct, {}, 0, line, col};
    if (c == '#' || c == '^') {
      advance(1);
      tok.kind = c == '#' ? Tok::Index : Tok::Caret;
      tok.number = read_number(tok.line, tok.column, c);
    } else if (c == '@') {
      advance(1);
      std::size_t begin = i;
      while (i < src.size() && ident_char(src[i])) advance(1);
      if (begin == i) throw ParseError("expected a name after '@'", tok.line, tok.column);
      tok.kind = Tok::AtomRef;
      tok.text = std::string(src.substr(begin, i - begin));
    } else if (ident_char(c)) {
      std::size_t begin = i;
      while (i < src.size() && ident_char(src[i])) advance(1);
      tok.kind = Tok::Ident;
      tok.text = std::string(src.substr(begin, i - begin));
    } else if (src.substr(i, 2) == ":=" || src.substr(i, 2) == "->") {
      tok.text = std::string(src.substr(i, 2));
      advance(2);
    } else if (std::string_view("()[]:;.|!\\,").find(c) != std::string_view::npos) {
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, {}, 0, line, col});
  return out;
}

}  // namespace bindkit::text::detail
