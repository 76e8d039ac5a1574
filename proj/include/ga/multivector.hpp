#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ga/blade.hpp"
#include "ga/rational.hpp"
#include "ga/signature.hpp"

namespace ga {

// Sparse blade-indexed multivector with exact rational coefficients.
// Zero entries are never stored, so equality is map equality. Immutable in
// spirit: every operation returns a fresh value.
class Multivector {
 public:
  explicit Multivector(const Signature& sig) : sig_(sig) {}

  static Multivector zero(const Signature& sig) { return Multivector(sig); }
  static Multivector scalar(const Signature& sig, const Rational& c);
  static Multivector basis(const Signature& sig, Blade b, const Rational& c = 1);

  const Signature& sig() const { return sig_; }
  const std::map<Blade, Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(Blade b) const;
  Rational scalar_part() const { return coeff(0); }

  // Mutation is only used while assembling a value.
  void add_term(Blade b, const Rational& c);

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator-() const;
  Multivector operator*(const Multivector& o) const;  // geometric product
  Multivector scale(const Rational& c) const;

  bool operator==(const Multivector& o) const { return sig_ == o.sig_ && c_ == o.c_; }

  Multivector grade_involution() const;
  Multivector reversion() const;
  Multivector clifford_conjugation() const;

  // Keep the terms whose blade satisfies the predicate.
  Multivector filter(const std::function<bool(Blade)>& keep) const;
  Multivector grade_part(int k) const;
  Multivector parity_part(int l) const;   // l = 0 or 1
  Multivector qt_part(int k) const;       // grades == k (mod 4)
  Multivector even_part() const { return parity_part(0); }
  Multivector odd_part() const { return parity_part(1); }

  // Dense coefficient column of length 2^n, blade-mask order.
  std::vector<Rational> to_vector() const;
  static Multivector from_vector(const Signature& sig, const std::vector<Rational>& v);

  std::string str() const;  // defined in parse.cpp

 private:
  void check_same_signature(const Multivector& o) const;

  Signature sig_;
  std::map<Blade, Rational> c_;
};

inline Multivector operator*(const Rational& c, const Multivector& m) { return m.scale(c); }

}  // namespace ga
