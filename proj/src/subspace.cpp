#include "ga/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace ga {

BladeSubspace::BladeSubspace(const Signature& sig, std::set<Blade> blades)
    : sig_(sig), blades_(std::move(blades)) {
  for (Blade b : blades_)
    if (b >= sig.blade_count()) throw std::invalid_argument("blade mask out of range for signature");
}

bool BladeSubspace::contains(const Multivector& m) const {
  if (!(m.sig() == sig_)) throw std::invalid_argument("signature mismatch");
  for (const auto& [b, c] : m.coeffs())
    if (!blades_.count(b)) return false;
  return true;
}

BladeSubspace BladeSubspace::direct_sum(const BladeSubspace& o) const {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("signature mismatch");
  std::set<Blade> merged = blades_;
  for (Blade b : o.blades_) {
    if (!merged.insert(b).second)
      throw std::logic_error("direct sum of overlapping blade spans (blade " +
                             blade_name(b, sig_.n()) + ")");
  }
  return BladeSubspace(sig_, std::move(merged));
}

BladeSubspace BladeSubspace::unite(const BladeSubspace& o) const {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("signature mismatch");
  std::set<Blade> merged = blades_;
  merged.insert(o.blades_.begin(), o.blades_.end());
  return BladeSubspace(sig_, std::move(merged));
}

BladeSubspace BladeSubspace::intersect(const BladeSubspace& o) const {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("signature mismatch");
  std::set<Blade> common;
  std::set_intersection(blades_.begin(), blades_.end(), o.blades_.begin(), o.blades_.end(),
                        std::inserter(common, common.begin()));
  return BladeSubspace(sig_, std::move(common));
}

BladeSubspace BladeSubspace::even_part() const {
  std::set<Blade> kept;
  for (Blade b : blades_)
    if (grade(b) % 2 == 0) kept.insert(b);
  return BladeSubspace(sig_, std::move(kept));
}

LinearSubspace BladeSubspace::to_linear() const {
  RationalMatrix m(dim(), int(sig_.blade_count()));
  int i = 0;
  for (Blade b : blades_) m.at(i++, int(b)) = 1;
  return LinearSubspace(int(sig_.blade_count()), std::move(m));
}

Multivector BladeSubspace::project(const Multivector& m) const {
  if (!(m.sig() == sig_)) throw std::invalid_argument("signature mismatch");
  return m.filter([this](Blade b) { return blades_.count(b) != 0; });
}

namespace {

// Number of non-degenerate / degenerate generators in a blade.
inline int nondeg_count(Blade b, const Signature& sig) { return grade(b & ~sig.radical_mask()); }
inline int deg_count(Blade b, const Signature& sig) { return grade(b & sig.radical_mask()); }

BladeSubspace collect(const Signature& sig, const std::function<bool(Blade)>& pred) {
  std::set<Blade> blades;
  for (Blade b = 0; b < sig.blade_count(); ++b)
    if (pred(b)) blades.insert(b);
  return BladeSubspace(sig, std::move(blades));
}

}  // namespace

BladeSubspace named_subspace(const Signature& sig, const SubspaceName& name) {
  switch (name.kind) {
    case SubspaceName::Grade:
      return sub_grade(sig, name.a);
    case SubspaceName::GradeGeq:
      return sub_grade_geq(sig, name.a);
    case SubspaceName::GradeLeq:
      return collect(sig, [&](Blade b) { return grade(b) <= name.a; });
    case SubspaceName::Parity:
      return sub_parity(sig, name.a);
    case SubspaceName::Qt:
      return sub_qt(sig, name.a);
    case SubspaceName::QtSum:
      return sub_qt_sum(sig, name.a, name.b);
    case SubspaceName::LambdaGrade:
      return sub_lambda(sig, name.a);
    case SubspaceName::LambdaParityEven:
      return sub_lambda_even(sig);
    case SubspaceName::MixedSpan:
      return sub_mixed(sig, name.a, name.b);
    case SubspaceName::Center:
      return sub_center(sig);
    case SubspaceName::Radical:
      return sub_radical(sig);
    case SubspaceName::Full:
      return sub_full(sig);
    case SubspaceName::Zero:
      return sub_zero(sig);
  }
  throw std::logic_error("unreachable");
}

BladeSubspace sub_grade(const Signature& sig, int k) {
  return collect(sig, [&](Blade b) { return grade(b) == k; });
}

BladeSubspace sub_grade_geq(const Signature& sig, int k) {
  return collect(sig, [&](Blade b) { return grade(b) >= k; });
}

BladeSubspace sub_parity(const Signature& sig, int l) {
  return collect(sig, [&](Blade b) { return grade(b) % 2 == l; });
}

BladeSubspace sub_qt(const Signature& sig, int k) {
  return collect(sig, [&](Blade b) { return grade(b) % 4 == k; });
}

BladeSubspace sub_qt_sum(const Signature& sig, int k, int l) {
  return collect(sig, [&](Blade b) { return grade(b) % 4 == k || grade(b) % 4 == l; });
}

BladeSubspace sub_lambda(const Signature& sig, int k) {
  return collect(sig, [&](Blade b) { return nondeg_count(b, sig) == 0 && deg_count(b, sig) == k; });
}

BladeSubspace sub_lambda_geq(const Signature& sig, int k) {
  return collect(sig, [&](Blade b) { return nondeg_count(b, sig) == 0 && deg_count(b, sig) >= k; });
}

BladeSubspace sub_lambda_full(const Signature& sig) { return sub_lambda_geq(sig, 0); }

BladeSubspace sub_lambda_even(const Signature& sig) {
  return collect(sig, [&](Blade b) { return nondeg_count(b, sig) == 0 && grade(b) % 2 == 0; });
}

BladeSubspace sub_lambda_qt(const Signature& sig, int k) {
  return collect(sig, [&](Blade b) { return nondeg_count(b, sig) == 0 && grade(b) % 4 == k; });
}

BladeSubspace sub_mixed(const Signature& sig, int k, int l) {
  if (k < 0 || l < 0) return sub_zero(sig);
  return collect(sig, [&](Blade b) { return nondeg_count(b, sig) == k && deg_count(b, sig) == l; });
}

BladeSubspace sub_center(const Signature& sig) {
  BladeSubspace z = sub_lambda_even(sig);
  if (sig.n() % 2 == 1) z = z.direct_sum(sub_grade(sig, sig.n()));
  return z;
}

BladeSubspace sub_radical(const Signature& sig) {
  return collect(sig, [&](Blade b) { return deg_count(b, sig) >= 1; });
}

BladeSubspace sub_full(const Signature& sig) {
  return collect(sig, [](Blade) { return true; });
}

BladeSubspace sub_zero(const Signature& sig) { return BladeSubspace(sig); }

BladeSubspace orth_complement(const BladeSubspace& d, const BladeSubspace& h) {
  if (!(d.sig() == h.sig())) throw std::invalid_argument("signature mismatch");
  std::set<Blade> rest;
  for (Blade b : d.blades())
    if (!h.contains(b))
      throw std::invalid_argument("orth_complement: first argument is not contained in second");
  for (Blade b : h.blades())
    if (!d.contains(b)) rest.insert(b);
  return BladeSubspace(h.sig(), std::move(rest));
}

SubspaceName parse_subspace_name(const std::string& text) {
  auto starts = [&](const char* prefix) { return text.rfind(prefix, 0) == 0; };
  auto tail = [&](size_t from) { return text.substr(from); };
  if (text == "center") return {SubspaceName::Center};
  if (text == "radical") return {SubspaceName::Radical};
  if (text == "full") return {SubspaceName::Full};
  if (text == "zero") return {SubspaceName::Zero};
  if (starts("grade:")) return {SubspaceName::Grade, std::stoi(tail(6))};
  if (starts("parity:")) return {SubspaceName::Parity, std::stoi(tail(7))};
  if (starts("qt:")) {
    std::string v = tail(3);
    if (v.size() == 2 && isdigit((unsigned char)v[0]) && isdigit((unsigned char)v[1]))
      return {SubspaceName::QtSum, v[0] - '0', v[1] - '0'};
    return {SubspaceName::Qt, std::stoi(v)};
  }
  if (starts("lambda:")) return {SubspaceName::LambdaGrade, std::stoi(tail(7))};
  if (text == "lambda_even") return {SubspaceName::LambdaParityEven};
  if (starts("mixed:")) {
    std::string v = tail(6);
    size_t comma = v.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("mixed:k,l expects two numbers");
    return {SubspaceName::MixedSpan, std::stoi(v.substr(0, comma)), std::stoi(v.substr(comma + 1))};
  }
  throw std::invalid_argument("unknown subspace name: " + text);
}

}  // namespace ga
