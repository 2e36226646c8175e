#include "oka/parser.hpp"

#include <cctype>

namespace oka {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret,
                 LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      advance();
    }
    int line = line_, col = col_;
    if (pos_ >= s_.size()) return {Tok::End, "", line, col};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        num += s_[pos_];
        advance();
      }
      return {Tok::Number, num, line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
              s_[pos_] == '_')) {
        id += s_[pos_];
        advance();
      }
      return {Tok::Ident, id, line, col};
    }
    advance();
    switch (c) {
      case '+': return {Tok::Plus, "+", line, col};
      case '-': return {Tok::Minus, "-", line, col};
      case '*': return {Tok::Star, "*", line, col};
      case '/': return {Tok::Slash, "/", line, col};
      case '^': return {Tok::Caret, "^", line, col};
      case '(': return {Tok::LParen, "(", line, col};
      case ')': return {Tok::RParen, ")", line, col};
      default:
        throw parse_error(std::string("unexpected character '") + c + "'",
                          line, col);
    }
  }

 private:
  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view s) : lex_(s) { cur_ = lex_.next(); }

  RationalFunction parse_expression() {
    RationalFunction r = parse_term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool plus = cur_.kind == Tok::Plus;
      consume();
      RationalFunction t = parse_term();
      r = plus ? r + t : r - t;
    }
    return r;
  }

  void expect_end() {
    if (cur_.kind != Tok::End)
      throw parse_error("trailing input '" + cur_.text + "'", cur_.line,
                        cur_.column);
  }

 private:
  RationalFunction parse_term() {
    RationalFunction r = parse_factor();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      bool mul = cur_.kind == Tok::Star;
      Token op = cur_;
      consume();
      RationalFunction f = parse_factor();
      if (mul) {
        r = r * f;
      } else {
        if (f.is_zero())
          throw parse_error("division by zero", op.line, op.column);
        r = r / f;
      }
    }
    return r;
  }

  RationalFunction parse_factor() {
    bool neg = false;
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      if (cur_.kind == Tok::Minus) neg = !neg;
      consume();
    }
    RationalFunction r = parse_power();
    return neg ? -r : r;
  }

  RationalFunction parse_power() {
    RationalFunction base = parse_atom();
    if (cur_.kind == Tok::Caret) {
      consume();
      if (cur_.kind != Tok::Number)
        throw parse_error("exponent must be a non-negative integer",
                          cur_.line, cur_.column);
      unsigned long e;
      try {
        e = std::stoul(cur_.text);
      } catch (const std::exception&) {
        throw parse_error("exponent out of range", cur_.line, cur_.column);
      }
      consume();
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  RationalFunction parse_atom() {
    switch (cur_.kind) {
      case Tok::Number: {
        Rational q(cur_.text);
        q.canonicalize();
        consume();
        return RationalFunction(q);
      }
      case Tok::Ident: {
        if (!is_registered_variable(cur_.text))
          throw parse_error("unknown variable name '" + cur_.text + "'",
                            cur_.line, cur_.column);
        Variable v = var(cur_.text);
        consume();
        return RationalFunction(v);
      }
      case Tok::LParen: {
        consume();
        RationalFunction r = parse_expression();
        if (cur_.kind != Tok::RParen)
          throw parse_error("expected ')'", cur_.line, cur_.column);
        consume();
        return r;
      }
      default:
        throw parse_error("expected a number, variable or '('", cur_.line,
                          cur_.column);
    }
  }

  void consume() { cur_ = lex_.next(); }

  Lexer lex_;
  Token cur_;
};

}  // namespace

RationalFunction parse(std::string_view text) {
  Parser p(text);
  RationalFunction r = p.parse_expression();
  p.expect_end();
  return r;
}

Polynomial parse_polynomial(std::string_view text) {
  RationalFunction r = parse(text);
  if (!r.is_polynomial())
    throw std::invalid_argument("expression is not a polynomial: " +
                                std::string(text));
  return r.numerator();
}

}  // namespace oka
