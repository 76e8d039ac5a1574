#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "ga/signature.hpp"

namespace ga {

// A basis blade e_A is a bitmask: bit (a-1) set iff generator e_a occurs.
// Mask 0 is the identity element e.
using Blade = std::uint32_t;

inline int grade(Blade b) { return std::popcount(b); }

// Signs of the three involutions on a grade-k blade.
inline int involution_sign(int k) { return (k & 1) ? -1 : 1; }
inline int reversion_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }
inline int conjugation_sign(int k) { return involution_sign(k) * reversion_sign(k); }

struct BladeProduct {
  int coeff;    // -1, 0 or +1
  Blade blade;  // a XOR b
};

// Canonical-basis product e_A * e_B = coeff * e_{A xor B}. The sign counts
// the transpositions that sort the concatenated index list; each repeated
// generator contributes its metric square, so a repeated degenerate
// generator kills the product.
BladeProduct blade_product(Blade a, Blade b, const Signature& sig);

// "e", "e13" for n <= 9, "e{1,13}" otherwise.
std::string blade_name(Blade b, int n);

}  // namespace ga
