#pragma once

#include <string>
#include <string_view>

#include "negbeta/base.hpp"

namespace negbeta::cli {

// Accepted forms:
//   "5/4", "1.25"                 exact rational (decimals are exact)
//   "minpoly:c0,c1,...[@lo,hi]"   algebraic, coefficients constant first
//   "approx:1.2207"               numeric backend, beta within half a unit of the last digit
Base parse_beta(std::string_view spec);

// Algebraic field from --minpoly and --bracket strings. Without a bracket
// the unique root in (1, 1 + max|c_i / c_d|] is used when it is isolated.
NumberField parse_field(std::string_view coeffs, std::string_view bracket);

}  // namespace negbeta::cli
