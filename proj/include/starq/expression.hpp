#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "starq/weyl_element.hpp"

namespace starq {

enum class ParamUse : uint8_t { None, Lambda, Hbar };

struct SourcePos {
    unsigned line = 1;
    unsigned col = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(SourcePos p, const std::string& message, std::string expected_tokens)
        : std::runtime_error(message), pos(p), expected(std::move(expected_tokens)) {}

    SourcePos pos;
    std::string expected;
};

/// Abstract syntax over rational literals, i, lambda, hbar, indexed
/// variables, + - * ^ and parentheses.
struct Expression {
    enum class Kind : uint8_t { Number, ImagUnit, Parameter, Variable, Add, Sub, Mul, Neg, Pow };

    Kind kind;
    SourcePos pos;
    Rational number;                       // Number
    ParamUse param = ParamUse::None;       // Parameter
    Var var{VarKind::X, 0};                // Variable
    std::shared_ptr<const Expression> lhs; // Add/Sub/Mul/Neg/Pow
    std::shared_ptr<const Expression> rhs; // Add/Sub/Mul
    int exponent = 0;                      // Pow
};

/// Parses one expression. Precedence ^ > unary - > * > + -, left
/// associativity; whitespace insignificant. Index bounds are checked against
/// dim, psi may not be squared, negative exponents are allowed on lambda and
/// hbar only. Throws ParseError with position and expected-token set.
Expression parse(std::string_view src, unsigned dim);

struct EvalResult {
    WeylElement element;
    ParamUse param;
};

/// Evaluates the tree to an element; rejects expressions mixing lambda and
/// hbar.
EvalResult evaluate(const Expression& e, unsigned dim);

/// parse + evaluate in one step.
EvalResult parse_element(std::string_view src, unsigned dim);

}  // namespace starq
