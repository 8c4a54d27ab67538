#pragma once

#include <iosfwd>
#include <string>

#include "afdim/finitering.hpp"

namespace afdim {

// Text format for finite rings:
//   # comment (anywhere)
//   orders e1 ... ek
//   unity c1 ... ck
//   mul i j c1 ... ck      (one row per basis pair with 0 <= i <= j < k)
// Rows for i > j are implied by commutativity; missing rows default to zero.
FiniteRing parse_ring(std::istream& in);
FiniteRing parse_ring(const std::string& text);

// Canonical serialization: orders, unity, then mul rows sorted by (i, j)
// with zero rows omitted. parse(serialize(r)) reproduces r exactly.
std::string serialize_ring(const FiniteRing& ring);

}  // namespace afdim
