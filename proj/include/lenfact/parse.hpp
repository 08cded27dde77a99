#pragma once

#include <string>

#include "lenfact/poly.hpp"

namespace lenfact {

/// Parses a polynomial literal.  Terms are `c`, `c*x`, `c*x^d`, `x`, `x^d`
/// joined by `+`/`-`; whitespace is ignored.  ZP2 coefficients are decimal
/// integers (reduced mod p^2); SPLIT coefficients are `[r;v1,...,vk]` with
/// each component a field index in [0, p^e), and bare integers are mapped
/// through Z -> R.  Throws ParseError with a position, and RingMismatch for
/// bracket literals over a ZP2 ring.
Poly parse_poly(const RingHandle& ring, const std::string& literal);

}  // namespace lenfact
