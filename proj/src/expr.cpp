#include "cupkernel/expr.hpp"

#include <cctype>

namespace cupkernel {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, End };
  Kind kind;
  size_t pos;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    size_t pos = i_;
    if (i_ >= src_.size()) return {Token::Kind::End, pos, ""};
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
      Token t{Token::Kind::Number, pos, std::string(src_.substr(i_, j - i_))};
      i_ = j;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
        ++j;
      Token t{Token::Kind::Ident, pos, std::string(src_.substr(i_, j - i_))};
      i_ = j;
      return t;
    }
    ++i_;
    switch (c) {
      case '+': return {Token::Kind::Plus, pos, "+"};
      case '-': return {Token::Kind::Minus, pos, "-"};
      case '*': return {Token::Kind::Star, pos, "*"};
      case '^': return {Token::Kind::Caret, pos, "^"};
      case '(': return {Token::Kind::LParen, pos, "("};
      case ')': return {Token::Kind::RParen, pos, ")"};
      case '[': return {Token::Kind::LBracket, pos, "["};
      case ']': return {Token::Kind::RBracket, pos, "]"};
      case ',': return {Token::Kind::Comma, pos, ","};
      default: throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
  }

 private:
  std::string_view src_;
  size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, bool allow_sub) : lex_(src), allow_sub_(allow_sub) { advance(); }

  ExprPtr parse() {
    ExprPtr e = expression();
    if (cur_.kind != Token::Kind::End) throw ParseError(cur_.pos, "trailing input");
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  bool accept(Token::Kind k) {
    if (cur_.kind != k) return false;
    advance();
    return true;
  }

  static ExprPtr node(ExprNode::Kind k, size_t pos) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->pos = pos;
    return n;
  }

  ExprPtr expression() {
    ExprPtr lhs = term();
    for (;;) {
      if (cur_.kind == Token::Kind::Plus) {
        size_t pos = cur_.pos;
        advance();
        auto n = node(ExprNode::Kind::Add, pos);
        n->lhs = lhs;
        n->rhs = term();
        lhs = n;
      } else if (cur_.kind == Token::Kind::Minus) {
        if (!allow_sub_) throw ParseError(cur_.pos, "subtraction is not available in this ring");
        size_t pos = cur_.pos;
        advance();
        auto n = node(ExprNode::Kind::Sub, pos);
        n->lhs = lhs;
        n->rhs = term();
        lhs = n;
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (cur_.kind == Token::Kind::Star) {
      size_t pos = cur_.pos;
      advance();
      auto n = node(ExprNode::Kind::Mul, pos);
      n->lhs = lhs;
      n->rhs = factor();
      lhs = n;
    }
    return lhs;
  }

  ExprPtr factor() {
    if (cur_.kind == Token::Kind::Minus) {
      if (!allow_sub_) throw ParseError(cur_.pos, "subtraction is not available in this ring");
      size_t pos = cur_.pos;
      advance();
      auto n = node(ExprNode::Kind::Neg, pos);
      n->lhs = factor();
      return n;
    }
    ExprPtr base = primary();
    while (cur_.kind == Token::Kind::Caret) {
      size_t pos = cur_.pos;
      advance();
      if (cur_.kind != Token::Kind::Number)
        throw ParseError(cur_.pos, "exponent must be a nonnegative integer literal");
      auto n = node(ExprNode::Kind::Pow, pos);
      n->lhs = base;
      n->exponent = static_cast<unsigned>(std::stoul(cur_.text));
      advance();
      base = n;
    }
    return base;
  }

  ExprPtr primary() {
    switch (cur_.kind) {
      case Token::Kind::Number: {
        auto n = node(ExprNode::Kind::Literal, cur_.pos);
        n->text = cur_.text;
        advance();
        return n;
      }
      case Token::Kind::Ident: {
        Token ident = cur_;
        advance();
        if (cur_.kind == Token::Kind::LBracket) {
          advance();
          auto n = node(ExprNode::Kind::Schubert, ident.pos);
          n->text = ident.text;
          if (ident.text != "s")
            throw ParseError(ident.pos, "only s[...] classes take a partition");
          if (!accept(Token::Kind::RBracket)) {
            for (;;) {
              if (cur_.kind != Token::Kind::Number)
                throw ParseError(cur_.pos, "partition parts must be integers");
              n->partition.push_back(static_cast<unsigned>(std::stoul(cur_.text)));
              advance();
              if (accept(Token::Kind::RBracket)) break;
              if (!accept(Token::Kind::Comma)) throw ParseError(cur_.pos, "expected ',' or ']'");
            }
          }
          return n;
        }
        auto n = node(ExprNode::Kind::Ident, ident.pos);
        n->text = ident.text;
        return n;
      }
      case Token::Kind::LParen: {
        advance();
        ExprPtr e = expression();
        if (!accept(Token::Kind::RParen)) throw ParseError(cur_.pos, "expected ')'");
        return e;
      }
      default: throw ParseError(cur_.pos, "expected a value");
    }
  }

  Lexer lex_;
  bool allow_sub_;
  Token cur_{Token::Kind::End, 0, ""};
};

}  // namespace

ExprPtr parse_expression(std::string_view src, bool allow_subtraction) {
  return Parser(src, allow_subtraction).parse();
}

}  // namespace cupkernel
