#pragma once

#include "lsl/profile.hpp"
#include "lsl/types.hpp"

#include <memory>
#include <string>

namespace lsl::expr {

struct Node;
using Expr = std::shared_ptr<const Node>;

/// Parses an infix expression in the variable `u` with operators + - * / ^,
/// parentheses, unary minus, the constant pi and the functions
/// sin, cos, sinh, cosh, exp and pow(base, exponent).
/// Throws ParseError with the offending position.
Expr parse(const std::string& text);

/// Evaluates the expression together with its first two derivatives by
/// forward-mode differentiation.
ScalarJet2 eval(const Expr& e, double u);

/// Wraps a parsed expression as a profile function.
ProfileFn to_profile(const Expr& e);

/// parse + to_profile in one step.
ProfileFn compile(const std::string& text);

}  // namespace lsl::expr
