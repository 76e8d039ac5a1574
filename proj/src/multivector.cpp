#include "ga/multivector.hpp"

#include <stdexcept>

namespace ga {

Multivector Multivector::scalar(const Signature& sig, const Rational& c) {
  Multivector m(sig);
  m.add_term(0, c);
  return m;
}

Multivector Multivector::basis(const Signature& sig, Blade b, const Rational& c) {
  if (b >= sig.blade_count()) throw std::invalid_argument("blade mask out of range");
  Multivector m(sig);
  m.add_term(b, c);
  return m;
}

Rational Multivector::coeff(Blade b) const {
  auto it = c_.find(b);
  return it == c_.end() ? Rational(0) : it->second;
}

void Multivector::add_term(Blade b, const Rational& c) {
  if (b >= sig_.blade_count()) throw std::invalid_argument("blade mask out of range");
  if (ga::is_zero(c)) return;
  auto [it, inserted] = c_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (ga::is_zero(it->second)) c_.erase(it);
  }
}

void Multivector::check_same_signature(const Multivector& o) const {
  if (!(sig_ == o.sig_))
    throw std::invalid_argument("operands live in different algebras: Cl(" + sig_.str() +
                                ") vs Cl(" + o.sig_.str() + ")");
}

Multivector Multivector::operator+(const Multivector& o) const {
  check_same_signature(o);
  Multivector out = *this;
  for (const auto& [b, c] : o.c_) out.add_term(b, c);
  return out;
}

Multivector Multivector::operator-(const Multivector& o) const {
  check_same_signature(o);
  Multivector out = *this;
  for (const auto& [b, c] : o.c_) out.add_term(b, -c);
  return out;
}

Multivector Multivector::operator-() const {
  Multivector out(sig_);
  for (const auto& [b, c] : c_) out.c_.emplace(b, -c);
  return out;
}

Multivector Multivector::scale(const Rational& k) const {
  Multivector out(sig_);
  if (ga::is_zero(k)) return out;
  for (const auto& [b, c] : c_) out.c_.emplace(b, k * c);
  return out;
}

Multivector Multivector::operator*(const Multivector& o) const {
  check_same_signature(o);
  // Dense accumulator; 2^n stays small and map churn dominates otherwise.
  std::vector<Rational> acc(sig_.blade_count(), Rational(0));
  for (const auto& [a, ca] : c_) {
    for (const auto& [b, cb] : o.c_) {
      BladeProduct p = blade_product(a, b, sig_);
      if (p.coeff == 0) continue;
      if (p.coeff == 1)
        acc[p.blade] += ca * cb;
      else
        acc[p.blade] -= ca * cb;
    }
  }
  Multivector out(sig_);
  for (Blade b = 0; b < acc.size(); ++b)
    if (!ga::is_zero(acc[b])) out.c_.emplace(b, acc[b]);
  return out;
}

Multivector Multivector::grade_involution() const {
  Multivector out(sig_);
  for (const auto& [b, c] : c_)
    out.c_.emplace(b, involution_sign(grade(b)) == 1 ? c : -c);
  return out;
}

Multivector Multivector::reversion() const {
  Multivector out(sig_);
  for (const auto& [b, c] : c_)
    out.c_.emplace(b, reversion_sign(grade(b)) == 1 ? c : -c);
  return out;
}

Multivector Multivector::clifford_conjugation() const {
  Multivector out(sig_);
  for (const auto& [b, c] : c_)
    out.c_.emplace(b, conjugation_sign(grade(b)) == 1 ? c : -c);
  return out;
}

Multivector Multivector::filter(const std::function<bool(Blade)>& keep) const {
  Multivector out(sig_);
  for (const auto& [b, c] : c_)
    if (keep(b)) out.c_.emplace(b, c);
  return out;
}

Multivector Multivector::grade_part(int k) const {
  return filter([k](Blade b) { return grade(b) == k; });
}

Multivector Multivector::parity_part(int l) const {
  return filter([l](Blade b) { return (grade(b) & 1) == l; });
}

Multivector Multivector::qt_part(int k) const {
  return filter([k](Blade b) { return grade(b) % 4 == k; });
}

std::vector<Rational> Multivector::to_vector() const {
  std::vector<Rational> v(sig_.blade_count(), Rational(0));
  for (const auto& [b, c] : c_) v[b] = c;
  return v;
}

Multivector Multivector::from_vector(const Signature& sig, const std::vector<Rational>& v) {
  if (v.size() != sig.blade_count()) throw std::invalid_argument("coefficient vector has wrong length");
  Multivector m(sig);
  for (Blade b = 0; b < v.size(); ++b)
    if (!ga::is_zero(v[b])) m.c_.emplace(b, v[b]);
  return m;
}

}  // namespace ga
