#pragma once

// Expression language over the built rings: identifiers, nonnegative integer
// literals, + - * ^ and parentheses, with standard precedence (^ over * over
// +/-) and left-associative * and +. Subtraction (and a leading unary minus)
// is accepted only for integer-coefficient rings.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cupkernel/polyring.hpp"
#include "cupkernel/schubert.hpp"

namespace cupkernel {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct ExprNode {
  enum class Kind { Literal, Ident, Schubert, Add, Sub, Mul, Pow, Neg };
  Kind kind;
  size_t pos = 0;
  std::string text;                      // literal digits or identifier name
  std::vector<unsigned> partition;       // Schubert only
  std::shared_ptr<ExprNode> lhs, rhs;    // binary ops; lhs for Pow/Neg
  unsigned exponent = 0;                 // Pow only
};

using ExprPtr = std::shared_ptr<ExprNode>;

/// Parse errors report the byte position of the offending token.
ExprPtr parse_expression(std::string_view src, bool allow_subtraction);

template <class Ctx>
typename Ctx::Value evaluate(const ExprNode& n, Ctx& ctx) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::Literal: return ctx.literal(n.text, n.pos);
    case K::Ident: return ctx.identifier(n.text, n.pos);
    case K::Schubert: return ctx.schubert(n.partition, n.pos);
    case K::Add: return ctx.add(evaluate(*n.lhs, ctx), evaluate(*n.rhs, ctx));
    case K::Sub: return ctx.sub(evaluate(*n.lhs, ctx), evaluate(*n.rhs, ctx));
    case K::Mul: return ctx.mul(evaluate(*n.lhs, ctx), evaluate(*n.rhs, ctx));
    case K::Pow: return ctx.pow(evaluate(*n.lhs, ctx), n.exponent);
    case K::Neg: return ctx.neg(evaluate(*n.lhs, ctx));
  }
  throw std::logic_error("evaluate: bad node");
}

template <CoefficientRing C>
struct PolyEvalContext {
  PolyRingPtr ring;
  using Value = GradedPolynomial<C>;

  Value literal(const std::string& digits, size_t) {
    return Value::constant(ring, C::from_decimal(digits));
  }
  Value identifier(const std::string& name, size_t pos) {
    auto idx = ring->index_of(name);
    if (!idx) throw ParseError(pos, "unknown identifier '" + name + "'");
    return Value::variable(ring, *idx);
  }
  Value schubert(const std::vector<unsigned>&, size_t pos) {
    throw ParseError(pos, "Schubert classes are not available in this ring");
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value pow(const Value& a, unsigned k) { return a.pow(k); }
  Value neg(const Value& a) { return -a; }
};

template <CoefficientRing C>
struct SchubertEvalContext {
  GrassmannianContext box;
  using Value = SchubertElement<C>;

  Value literal(const std::string& digits, size_t) {
    return Value::unit(box).scaled(C::from_decimal(digits));
  }
  Value identifier(const std::string& name, size_t pos) {
    throw ParseError(pos, "unknown identifier '" + name + "' (use s[...] classes)");
  }
  Value schubert(const std::vector<unsigned>& parts, size_t pos) {
    Partition p;
    try {
      p = Partition(parts);
    } catch (const std::invalid_argument&) {
      throw ParseError(pos, "partition parts must be weakly decreasing");
    }
    if (!p.fits_in_box(box.rows(), box.cols())) return Value::zero(box);  // class vanishes
    return Value::single(box, p);
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return multiply(a, b); }
  Value pow(const Value& a, unsigned k) {
    Value r = Value::unit(box);
    for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
    return r;
  }
  Value neg(const Value& a) { return -a; }
};

}  // namespace cupkernel
