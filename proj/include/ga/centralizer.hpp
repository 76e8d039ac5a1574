#pragma once

#include <string>
#include <vector>

#include "ga/subspace.hpp"

namespace ga {

// The defining equation solved for X over all V in the fixed subspace:
//   Plain:   X V = V X
//   Check:   X^ V = V X                      (X^ = grade involution)
//   Tilde:   X V_(0) + X^ V_(1) = V X       (parity-split twist)
enum class CentralizerKind { Plain, Check, Tilde };

// Matrix of X -> H(X)V - VX for a single basis blade V, in the blade basis.
// H is the identity (Plain), the grade involution (Check), or the grade
// involution only when V is odd (Tilde). Also the building block of the
// stabilizer linearizations. The operator has at most one entry per column
// (input blade b only reaches output blade V xor b); the sparse form is the
// one the solvers consume, the dense one exists for cross-checks.
SparseOperator centralizer_equation_operator(Blade v, CentralizerKind kind, const Signature& sig);
RationalMatrix centralizer_equation_matrix(Blade v, CentralizerKind kind, const Signature& sig);

// Kernel of the stacked maps X -> H(X)V - VX over the basis blades V of s,
// where H depends on the kind (and, for Tilde, on the parity of V).
// Canonical RREF result; the independent oracle for the closed forms.
LinearSubspace centralizer_bruteforce(const BladeSubspace& s, CentralizerKind kind);

// Targets with a transcribed closed form. Zt* follows the parity rule
// Zt^m = Z^m (m even) / Zc^m (m odd). Zc4 has no closed form and is
// deliberately absent; it stays reachable through brute force.
enum class CTarget {
  Z1, Z2, Z3, Z4,
  Zc1, Zc2, Zc3,
  Zt1, Zt2, Zt3, Zt4,
  Zq0, Zq1, Zq2, Zq3,          // Z^{kbar}
  Zcq0, Zcq1, Zcq2, Zcq3,      // Zc^{kbar}
  Zq01, Zq02, Zq03, Zq12, Zq13, Zq23,      // Z^{klbar}
  Zcq01, Zcq02, Zcq03, Zcq12, Zcq13, Zcq23,  // Zc^{klbar}
};

const std::vector<CTarget>& all_ctargets();
std::string ctarget_name(CTarget t);
CTarget parse_ctarget(const std::string& name);  // accepts "Z2", "Zc1", "Z23bar", "Z^23bar", ...

// Blade-span transcription of the published formula for the target, with
// all case splits on n parity and r = n encoded verbatim.
BladeSubspace centralizer_closed_form(const Signature& sig, CTarget target);

// The (kind, subspace) pair whose brute-force centralizer the closed form
// describes, e.g. Zq23 -> (Plain, C^{2bar} u C^{3bar}).
struct BruteSpec {
  CentralizerKind kind;
  BladeSubspace space;
};
BruteSpec brute_spec(const Signature& sig, CTarget target);

}  // namespace ga
