#pragma once

#include <string>

#include "fatpoints/core.hpp"

namespace fatpoints {

/// Parse "d m1 m2 ..." with exponent shorthand for repeats, so "4 2^9" is
/// degree 4 with nine multiplicity-2 points. Throws std::invalid_argument
/// with the 1-based character position of the offending token.
LinearSystem parse_system_spec(const std::string& text);

/// "L(4; 2^9)" style rendering; runs of three or more equal multiplicities
/// are compressed with ^.
std::string format_system(const LinearSystem& sys);

}  // namespace fatpoints
