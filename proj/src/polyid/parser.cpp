#include <cctype>
#include <optional>

#include "entwit/polyid.hpp"

namespace entwit::polyid {
namespace {

constexpr unsigned kMaxExponent = 256;

enum class TokenKind { end, identifier, integer, plus, minus, star, caret, lparen, rparen };

struct Token {
  TokenKind kind = TokenKind::end;
  std::string_view text;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == src_.size()) return {TokenKind::end, {}, start};
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '\'') ++pos_;
      return {TokenKind::identifier, src_.substr(start, pos_ - start), start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {TokenKind::integer, src_.substr(start, pos_ - start), start};
    }
    ++pos_;
    switch (c) {
      case '+':
        return {TokenKind::plus, src_.substr(start, 1), start};
      case '-':
        return {TokenKind::minus, src_.substr(start, 1), start};
      case '*':
        return {TokenKind::star, src_.substr(start, 1), start};
      case '^':
        return {TokenKind::caret, src_.substr(start, 1), start};
      case '(':
        return {TokenKind::lparen, src_.substr(start, 1), start};
      case ')':
        return {TokenKind::rparen, src_.substr(start, 1), start};
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (current_.kind != TokenKind::end) {
      throw ParseError("unexpected '" + std::string(current_.text) + "', expected an operator", current_.offset);
    }
    return e;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (current_.kind == TokenKind::plus || current_.kind == TokenKind::minus) {
      const BinaryOp op = current_.kind == TokenKind::plus ? BinaryOp::sum : BinaryOp::difference;
      advance();
      lhs = make_binary(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (current_.kind == TokenKind::star) {
      advance();
      lhs = make_binary(BinaryOp::product, std::move(lhs), parse_unary());
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (current_.kind == TokenKind::minus) {
      advance();
      return make_negate(parse_unary());
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    if (current_.kind != TokenKind::caret) return base;
    advance();
    return make_power(std::move(base), parse_exponent());
  }

  // Right-associative: a^2^3 = a^(2^3). The exponent must be a constant.
  unsigned parse_exponent() {
    const std::size_t offset = current_.offset;
    ExprPtr e = parse_primary();
    if (current_.kind == TokenKind::caret) {
      advance();
      e = make_power(std::move(e), parse_exponent());
    }
    const std::optional<BigInt> value = fold_constant(*e);
    if (!value || *value < 0) throw ParseError("exponent must be a non-negative integer constant", offset);
    if (*value > kMaxExponent) throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), offset);
    return value->convert_to<unsigned>();
  }

  static std::optional<BigInt> fold_constant(const Expr& e) {
    if (const auto* i = std::get_if<BigInt>(&e.node)) return *i;
    if (const auto* n = std::get_if<Negate>(&e.node)) {
      auto v = fold_constant(*n->operand);
      if (v) return BigInt(-*v);
      return std::nullopt;
    }
    if (const auto* b = std::get_if<Binary>(&e.node)) {
      auto l = fold_constant(*b->lhs);
      auto r = fold_constant(*b->rhs);
      if (!l || !r) return std::nullopt;
      switch (b->op) {
        case BinaryOp::sum:
          return BigInt(*l + *r);
        case BinaryOp::difference:
          return BigInt(*l - *r);
        case BinaryOp::product:
          return BigInt(*l * *r);
      }
    }
    if (const auto* p = std::get_if<Power>(&e.node)) {
      auto base = fold_constant(*p->base);
      if (!base) return std::nullopt;
      if (p->exponent > kMaxExponent) return std::nullopt;
      return BigInt(boost::multiprecision::pow(*base, p->exponent));
    }
    return std::nullopt;
  }

  ExprPtr parse_primary() {
    const Token tok = current_;
    switch (tok.kind) {
      case TokenKind::identifier: {
        advance();
        if (tok.text == "a") return make_variable(Variable::a);
        if (tok.text == "a'") return make_variable(Variable::a_prime);
        if (tok.text == "b") return make_variable(Variable::b);
        if (tok.text == "b'") return make_variable(Variable::b_prime);
        throw ParseError("unknown identifier '" + std::string(tok.text) + "'", tok.offset);
      }
      case TokenKind::integer:
        advance();
        return make_integer(BigInt(std::string(tok.text)));
      case TokenKind::lparen: {
        advance();
        ExprPtr inner = parse_expr();
        if (current_.kind != TokenKind::rparen) throw ParseError("expected ')'", current_.offset);
        advance();
        return inner;
      }
      case TokenKind::end:
        throw ParseError("unexpected end of input", tok.offset);
      default:
        throw ParseError("unexpected '" + std::string(tok.text) + "'", tok.offset);
    }
  }

  Lexer lexer_;
  Token current_;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace entwit::polyid
