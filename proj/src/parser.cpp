#include "parser.hpp"

#include <cctype>
#include <limits>

namespace pdef::detail {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

bool starts_word(TokenKind kind) {
  return kind == TokenKind::Name || kind == TokenKind::LParen ||
         kind == TokenKind::LBracket || kind == TokenKind::Integer;
}

Parser::Parser(std::string_view text) : text_(text) { current_ = lex(); }

void Parser::skip_separators() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') {
        ++pos_;
        ++column_;
      }
    } else if (c == '\n') {
      ++pos_;
      ++line_;
      column_ = 1;
    } else if (std::isspace(static_cast<unsigned char>(c)) != 0 || c == '*') {
      ++pos_;
      ++column_;
    } else {
      break;
    }
  }
}

Token Parser::lex() {
  skip_separators();
  Token tok;
  tok.line = line_;
  tok.column = column_;
  if (pos_ >= text_.size()) {
    tok.kind = TokenKind::End;
    return tok;
  }
  char c = text_[pos_];
  auto single = [&](TokenKind kind) {
    tok.kind = kind;
    tok.text = std::string(1, c);
    ++pos_;
    ++column_;
    return tok;
  };
  switch (c) {
    case '^': return single(TokenKind::Caret);
    case '(': return single(TokenKind::LParen);
    case ')': return single(TokenKind::RParen);
    case '[': return single(TokenKind::LBracket);
    case ']': return single(TokenKind::RBracket);
    case ',': return single(TokenKind::Comma);
    case '<': return single(TokenKind::LAngle);
    case '|': return single(TokenKind::Bar);
    case '>': return single(TokenKind::RAngle);
    default: break;
  }
  if (is_name_start(c)) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    tok.kind = TokenKind::Name;
    tok.text = std::string(text_.substr(start, pos_ - start));
    column_ += pos_ - start;
    return tok;
  }
  if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '-' ||
      c == '+') {
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
    tok.kind = TokenKind::Integer;
    tok.text = std::string(text_.substr(start, pos_ - start));
    column_ += pos_ - start;
    if (tok.text == "-" || tok.text == "+") {
      throw SyntaxError(tok.line, tok.column, "sign without digits");
    }
    return tok;
  }
  throw SyntaxError(line_, column_,
                    std::string("unexpected character '") + c + "'");
}

Token Parser::next() {
  Token tok = current_;
  current_ = lex();
  return tok;
}

void Parser::fail(const Token& at, const std::string& message) const {
  throw SyntaxError(at.line, at.column, message);
}

Token Parser::expect(TokenKind kind, std::string_view what) {
  if (current_.kind != kind) {
    fail(current_, "expected " + std::string(what) +
                       (current_.kind == TokenKind::End
                            ? std::string(" at end of input")
                            : ", found '" + current_.text + "'"));
  }
  return next();
}

std::int64_t Parser::parse_exponent() {
  Token tok = expect(TokenKind::Integer, "integer exponent");
  try {
    std::size_t used = 0;
    long long value = std::stoll(tok.text, &used);
    return value;
  } catch (const std::exception&) {
    fail(tok, "exponent out of range");
  }
}

Word Parser::parse_term(const Alphabet& alphabet) {
  Token tok = current_;
  Word prefix;  // juxtaposed single-letter names before the powered letter
  Word base;
  switch (tok.kind) {
    case TokenKind::Name: {
      next();
      if (alphabet.contains(tok.text)) {
        base = Word::generator(alphabet.index(tok.text));
        break;
      }
      // "xy" reads as x y when every character is a one-letter generator.
      bool splittable = true;
      for (char c : tok.text) {
        if (!alphabet.contains(std::string_view(&c, 1))) {
          splittable = false;
          break;
        }
      }
      if (!splittable) {
        throw Error(ErrorCode::UnknownGenerator,
                    std::to_string(tok.line) + ":" +
                        std::to_string(tok.column) + ": unknown generator '" +
                        tok.text + "'");
      }
      std::vector<Letter> letters;
      for (std::size_t i = 0; i + 1 < tok.text.size(); ++i) {
        letters.push_back(
            gen(alphabet.index(std::string_view(&tok.text[i], 1))));
      }
      prefix = Word(letters);
      base = Word::generator(
          alphabet.index(std::string_view(&tok.text.back(), 1)));
      break;
    }
    case TokenKind::Integer: {
      if (tok.text != "1") fail(tok, "only 1 may stand for a word");
      next();
      break;
    }
    case TokenKind::LParen: {
      next();
      base = parse_word(alphabet);
      expect(TokenKind::RParen, "')'");
      break;
    }
    case TokenKind::LBracket: {
      next();
      Word u = parse_word(alphabet);
      expect(TokenKind::Comma, "',' in commutator");
      Word v = parse_word(alphabet);
      expect(TokenKind::RBracket, "']'");
      base = commutator(u, v);
      break;
    }
    default:
      fail(tok, tok.kind == TokenKind::End ? "expected a word at end of input"
                                           : "expected a word, found '" +
                                                 tok.text + "'");
  }
  if (current_.kind == TokenKind::Caret) {
    next();
    base = base.pow(parse_exponent());
  }
  return multiply(prefix, base);
}

Word Parser::parse_word(const Alphabet& alphabet) {
  Word w = parse_term(alphabet);
  while (starts_word(current_.kind)) {
    w = multiply(w, parse_term(alphabet));
  }
  return w;
}

}  // namespace pdef::detail
