#pragma once

#include <optional>
#include <string>

#include "ga/group.hpp"

namespace ga {

// --- dimension arithmetic -------------------------------------------------
// 2^{m/2} cos(pi m/4) and 2^{m/2} sin(pi m/4) are integers with an 8-periodic
// pattern; all quaternion-type dimension formulas reduce to them.
long long trig_cos_pow(int m);
long long trig_sin_pow(int m);

long long binomial(int n, int k);  // 0 when k < 0 or k > n

// dim C^{kbar}_{p,q,r} for an n-dimensional algebra: trigonometric closed
// form vs. direct binomial grade sum. Both exact; they must agree.
long long dim_qt_trig(int n, int k);
long long dim_qt_comb(int n, int k);

// Base dimensions of the three Lie algebra families.
long long dim_a_trig(int n, int r);
long long dim_b_trig(int n, int r);
long long dim_q_trig(int n, int r);
long long dim_a_comb(int n, int r);
long long dim_b_comb(int n, int r);
long long dim_q_comb(int n, int r);

// --- Lie algebras of the groups -------------------------------------------

// Kernel of the linearized stabilizer condition at the identity: for every
// basis blade v of the target, the (possibly twisted) commutator with v must
// stay inside the target span. Auxiliary groups, which have no stabilizer
// form, use the norm linearization.
LinearSubspace lie_algebra(GroupId g, const Signature& sig);

// Kernel of the linearized norm condition(s): reversion(u) + u (psi-groups)
// or conjugation(u) + u (chi-groups) must project into the norm set;
// conditions intersect for the two-condition groups.
LinearSubspace lie_algebra_norm_form(GroupId g, const Signature& sig);

struct LieExpectation {
  BladeSubspace span;
  long long dim;
  std::string row;  // which table row matched, for reports
};

// Instantiates the matching dimension-table row, or nullopt when no row
// covers (g, n mod 4, r). Guards are data; overlapping guards are rejected
// at load time.
std::optional<LieExpectation> expected_lie(GroupId g, const Signature& sig);

// Throws if any (group, n, r) with n <= 12 matches more than one table row.
void check_lie_table_guards();

// True iff [u,v] stays in s for all pairs of basis vectors of s.
bool bracket_closure_check(const LinearSubspace& s, const Signature& sig);

// Finite exponential series; throws if u is not nilpotent.
Multivector exp_nilpotent(const Multivector& u);

// exp(u) must be a member of g when u is a nilpotent element of its Lie
// algebra (membership of u is the caller's precondition).
bool exp_nilpotent_check(GroupId g, const Multivector& u);

}  // namespace ga
