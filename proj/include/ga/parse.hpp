#pragma once

#include <string>

#include "ga/multivector.hpp"

namespace ga {

// Multivector text grammar (also produced by Multivector::str):
//   mv       := term (("+"|"-") term)*
//   term     := rational ("*" blade)? | blade
//   rational := integer ("/" positive-integer)?
//   blade    := "e" digits            (n <= 9, e.g. "e123")
//             | "e{" d ("," d)* "}"   (any n, e.g. "e{1,2,13}")
// A bare "e" is the identity blade. Whitespace is ignored between tokens.
Multivector parse_multivector(const Signature& sig, const std::string& text);

std::string format_multivector(const Multivector& m);

}  // namespace ga
