#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ga/centralizer.hpp"
#include "ga/rng.hpp"

namespace ga {

// The adjoint representation and its two twists:
//   Ad:      U -> T U T^-1
//   AdCheck: U -> T^ U T^-1
//   AdTilde: U -> T U_(0) T^-1 + T^ U_(1) T^-1
enum class Rep { Ad, AdCheck, AdTilde };

enum class NormFunc { Psi, Chi };

// psi(T) = ~T T and chi(T) = conj(T) T.
struct NormPair {
  Multivector psi, chi;
};
NormPair norms(const Multivector& t);

Multivector apply_rep(Rep rep, const Multivector& t, const Multivector& t_inv,
                      const Multivector& u);
Multivector apply_rep(Rep rep, const Multivector& t, const Multivector& u);  // inverts t, throws

// True iff the image of every basis blade of s stays inside span(s).
bool preserves(const Multivector& t, const Multivector& t_inv, const BladeSubspace& s, Rep rep);

// Invertible elements of the returned span form the kernel of the
// representation: the center for Ad, Lambda^(0)_r for AdCheck, Lambda_r
// for AdTilde.
BladeSubspace kernel_of_rep(Rep rep, const Signature& sig);

// The twelve generalized groups, the two auxiliary groups, and the
// classical Clifford / Lipschitz groups.
enum class GroupId {
  A01, A23, B12, B03,
  Ac12, Ac03, Bc01, Bc23,
  Qt01, Qt23, Qt12, Qt03,
  AuxAc, AuxBc,
  Gamma, GammaPM,
};

const std::vector<GroupId>& all_group_ids();
const std::vector<GroupId>& generalized_group_ids();  // the twelve
std::string group_name(GroupId g);
GroupId parse_group(const std::string& name);

// Stabilizer form (representation + target span) and norm form (which norm
// function lands in which centralizer set). The auxiliary groups have no
// stabilizer form; the classical groups use the grade-1 target.
struct GroupSpec {
  GroupId id;
  std::optional<Rep> rep;
  std::optional<BladeSubspace> target;
  std::vector<std::pair<NormFunc, CTarget>> norm_form;
};
GroupSpec group_spec(GroupId g, const Signature& sig);

enum class MemberMode { Stabilizer, Norm };

// Non-invertible t is a member of nothing. Stabilizer mode throws for the
// auxiliary groups, which are defined by norm conditions only.
bool member(GroupId g, const Multivector& t, MemberMode mode);

// Precomputed images of every basis blade under Ad and AdCheck; lets a
// verification sweep test all groups against one sample cheaply.
struct RepImages {
  std::vector<Multivector> ad, check;
};
RepImages rep_images(const Multivector& t, const Multivector& t_inv);
bool preserves_with_images(const RepImages& images, const BladeSubspace& s, Rep rep);

// Dense random multivector with integer coefficients in [-bound, bound].
Multivector random_multivector(Rng& rng, const Signature& sig, int bound);
// Random element of the blade span with integer coefficients in [-bound, bound].
Multivector random_in_span(Rng& rng, const BladeSubspace& s, int bound);

struct SampleInfo {
  Multivector mv;
  std::uint64_t seed;
  int rejections;
};
// Rejection-resampled until invertible; deterministic in the seed.
SampleInfo sample_invertible(const Signature& sig, std::uint64_t seed, int coeff_bound);

// A certified member: a product of non-null vectors and a unit of the
// group's norm set of the form alpha*e + nilpotent. Membership is checked
// before returning.
Multivector sample_group_member(GroupId g, const Signature& sig, std::uint64_t seed);

// Inverse of alpha*e + N with N nilpotent, via the finite geometric series.
Multivector nilpotent_unit_inverse(const Multivector& u);

struct Factorization {
  Multivector t0;  // member of the auxiliary group (AuxAc or AuxBc)
  Multivector y;   // invertible element of the group's norm set
};

// Constructive split t = t0 * y over the auxiliary group of the family.
// Supported for A01, A23, Ac12, Ac03 (over AuxAc) and B12, B03, Bc23 (over
// AuxBc); requires r >= 1 and member(g, t). B03 in n = 5 takes a dedicated
// two-stage path. All postconditions are verified before returning.
Factorization factor(GroupId g, const Multivector& t);

bool factorable(GroupId g);
// The norm set that y is drawn from, e.g. Z23bar for A23.
CTarget factor_set(GroupId g);

}  // namespace ga
