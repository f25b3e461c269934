#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "pdef/error.hpp"
#include "pdef/words.hpp"

namespace pdef::detail {

enum class TokenKind {
  Name,
  Integer,
  Caret,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  LAngle,
  Bar,
  RAngle,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

// Recursive-descent reader for the word and presentation grammar.
class Parser {
 public:
  explicit Parser(std::string_view text);

  const Token& peek() const { return current_; }
  Token next();
  Token expect(TokenKind kind, std::string_view what);
  [[noreturn]] void fail(const Token& at, const std::string& message) const;

  Word parse_word(const Alphabet& alphabet);

 private:
  Token lex();
  void skip_separators();
  Word parse_term(const Alphabet& alphabet);
  std::int64_t parse_exponent();

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

bool starts_word(TokenKind kind);

}  // namespace pdef::detail
