#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "bohl/bohl_function.hpp"

namespace bohl {

/// Expression tree over: rational/decimal literals, i, t, generator symbols,
/// exp(...), negation, sums, products and nonnegative integer powers.
struct ExprAst {
    enum class Kind { Number, Imag, Time, Generator, Exp, Neg, Add, Sub, Mul, Pow };

    Kind kind = Kind::Number;
    Rational number;                 // Number
    std::string name;                // Generator
    unsigned exponent = 0;           // Pow
    std::unique_ptr<ExprAst> lhs;    // unary operand or left child
    std::unique_ptr<ExprAst> rhs;    // right child
};

/// Grammar:
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := atom ('^' uint)?
///   atom     := rational | 'i' | 't' | ident | 'exp' '(' expr ')'
///             | '(' expr ')' | '-' atom
///   rational := int ('/' uint)? | decimal
/// Whitespace is insignificant; decimals convert exactly to rationals.
/// Throws ParseError with line/column on malformed input.
std::unique_ptr<ExprAst> parse(std::string_view text);

/// Lowers an expression to canonical form. Succeeds exactly when every
/// exponential argument is a linear form in t whose coefficient fits an
/// Exponent (rational real part, frequency in the generator module) and the
/// rest is polynomial in t. Throws LoweringError with a specific diagnostic
/// otherwise.
BohlFunction lower(const ExprAst& ast);

/// parse + lower.
BohlFunction lower_expression(std::string_view text);

/// Canonical rendering, highest term first; lower(parse(format(f))) == f.
std::string format(const BohlFunction& f);

}  // namespace bohl
