#pragma once

#include <string_view>

#include "akzeta/types.hpp"

namespace akzeta {

/// Evaluates a small real expression such as "8+4*sqrt(3)" or "2*(5+sqrt(5))/5"
/// at the current precision. Grammar: numbers, pi, + - * /, unary minus,
/// parentheses and sqrt(...). Throws DomainError on malformed input.
Real parse_real(std::string_view text);

/// Parses an exact rational: an integer, "a/b", or a finite decimal such as
/// "-0.25". Throws DomainError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace akzeta
