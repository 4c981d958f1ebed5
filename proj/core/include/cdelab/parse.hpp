#pragma once

#include <string_view>

#include "cdelab/ratfunc.hpp"

namespace cdelab {

// Parses the scalar grammar: signed integer literals, `z` (a primitive n-th
// root of unity), `t`, binary `+ - * /`, `^` with an integer exponent, unary
// signs and parentheses. Throws ParseError or DivisionByZeroError.
RatFunc parse_scalar(std::string_view text, int cyclotomic_order);

}  // namespace cdelab
