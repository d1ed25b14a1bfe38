#pragma once

#include <string>

#include "starq/expression.hpp"
#include "starq/weyl_element.hpp"

namespace starq {

/// Deterministic canonical form: terms in descending graded-lex order, psi
/// slots ascending within a term, parameter spelled per `param` (lambda by
/// default). parse_element(print_canonical(e)) recovers e exactly.
std::string print_canonical(const WeylElement& e, ParamUse param = ParamUse::Lambda);

}  // namespace starq
