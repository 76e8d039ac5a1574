#pragma once

#include <set>
#include <string>

#include "ga/linalg.hpp"
#include "ga/multivector.hpp"

namespace ga {

// A blade-spanned subspace: exactly the span of a set of basis blades.
// Every named subspace the engine exposes is of this form, so
// set algebra on the blade sets is exact and order-free.
class BladeSubspace {
 public:
  explicit BladeSubspace(const Signature& sig) : sig_(sig) {}
  BladeSubspace(const Signature& sig, std::set<Blade> blades);

  const Signature& sig() const { return sig_; }
  const std::set<Blade>& blades() const { return blades_; }
  int dim() const { return int(blades_.size()); }
  bool is_zero() const { return blades_.empty(); }

  bool contains(Blade b) const { return blades_.count(b) != 0; }
  // Span membership: every term of m is supported on the blade set.
  bool contains(const Multivector& m) const;

  // Direct sum; overlapping blade sets indicate a transcription mistake
  // in a table encoding and are rejected.
  BladeSubspace direct_sum(const BladeSubspace& o) const;
  BladeSubspace unite(const BladeSubspace& o) const;
  BladeSubspace intersect(const BladeSubspace& o) const;
  BladeSubspace even_part() const;

  LinearSubspace to_linear() const;
  Multivector project(const Multivector& m) const;

  bool operator==(const BladeSubspace&) const = default;

 private:
  Signature sig_;
  std::set<Blade> blades_;
};

// Names for the blade-spanned subspaces, exposed to the CLI as strings
// "grade:k", "parity:l", "qt:k", "qt:kl", "lambda:k", "mixed:k,l",
// "center", "radical", "full", "zero".
struct SubspaceName {
  enum Kind {
    Grade,          // popcount == a
    GradeGeq,       // popcount >= a
    GradeLeq,       // popcount <= a
    Parity,         // popcount == a (mod 2)
    Qt,             // popcount == a (mod 4)
    QtSum,          // popcount == a or b (mod 4)
    LambdaGrade,    // a degenerate generators, no non-degenerate ones
    LambdaParityEven,  // even-grade blades on degenerate generators only
    MixedSpan,      // exactly a non-degenerate and b degenerate generators
    Center,
    Radical,        // at least one degenerate generator
    Full,
    Zero,
  } kind;
  int a = 0;
  int b = 0;
};

BladeSubspace named_subspace(const Signature& sig, const SubspaceName& name);

// Shorthand constructors.
BladeSubspace sub_grade(const Signature& sig, int k);
BladeSubspace sub_grade_geq(const Signature& sig, int k);
BladeSubspace sub_parity(const Signature& sig, int l);
BladeSubspace sub_qt(const Signature& sig, int k);
BladeSubspace sub_qt_sum(const Signature& sig, int k, int l);
BladeSubspace sub_lambda(const Signature& sig, int k);      // Lambda^k_r
BladeSubspace sub_lambda_geq(const Signature& sig, int k);
BladeSubspace sub_lambda_full(const Signature& sig);        // Lambda_r
BladeSubspace sub_lambda_even(const Signature& sig);        // Lambda^(0)_r
BladeSubspace sub_lambda_qt(const Signature& sig, int k);   // Lambda^kbar_r
BladeSubspace sub_mixed(const Signature& sig, int k, int l);  // {C^k_{p,q,0} Lambda^l_r}
BladeSubspace sub_center(const Signature& sig);
BladeSubspace sub_radical(const Signature& sig);
BladeSubspace sub_full(const Signature& sig);
BladeSubspace sub_zero(const Signature& sig);

// Blades of h not in d; requires d to be a subset of h.
BladeSubspace orth_complement(const BladeSubspace& d, const BladeSubspace& h);

SubspaceName parse_subspace_name(const std::string& text);

}  // namespace ga
