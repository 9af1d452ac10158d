#pragma once

#include <string>
#include <string_view>

#include "qweyl/algebra.hpp"
#include "qweyl/localized.hpp"

namespace qweyl {

// Grammar, whitespace insensitive:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' '-'? integer)?
//   primary := integer | symbol | '(' expr ')'
// Symbols: x<i>, d<i>, a<i> (the Euler operator 1 + x_i d_i), q, zeta.
// Negative exponents are accepted on a<i> and on scalars only. Division is by
// nonzero scalars. Malformed input raises ParseError with line and column.

/// Parses into the localization; requires the Rescaled presentation.
LocalizedElement parse_localized(std::string_view text, const AlgebraSpec& spec);

/// Parses a polynomial expression; DomainError when the value needs a denominator.
PbwElement parse_expression(std::string_view text, const AlgebraSpec& spec);

/// Parses a scalar literal such as "3/2", "q^2-1", "(1+zeta)/2".
Scalar parse_scalar(std::string_view text, Field field);

/// Canonical printed form of the parsed value.
std::string canonical_form(std::string_view text, const AlgebraSpec& spec);

}  // namespace qweyl
