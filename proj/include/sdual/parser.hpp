#pragma once

#include "sdual/multivector.hpp"

namespace sdual {

struct ParseError : error {
    size_t pos;
    ParseError(const std::string& what, size_t p)
        : error(what + " at position " + std::to_string(p)), pos(p) {}
};

// Parses the canonical surface syntax into a multivector over the registry.
// Precedence: power (even ^ integer) > product (*, juxtaposition, wedge ^,
// fraction /) > sum; postfix ~ selects the conjugate variable; odd generators
// are referenced by their registered names (D<c>, d<c>, db<c>, abstract).
// parse_multivector(m.str()) == m for every multivector m.
Multivector parse_multivector(const std::string& text, const Registry& reg);

} // namespace sdual
