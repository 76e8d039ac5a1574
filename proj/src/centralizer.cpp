#include "ga/centralizer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ga {

SparseOperator centralizer_equation_operator(Blade v, CentralizerKind kind, const Signature& sig) {
  const int dim = int(sig.blade_count());
  const bool twist = kind == CentralizerKind::Check ||
                     (kind == CentralizerKind::Tilde && grade(v) % 2 == 1);
  SparseOperator op(dim, dim);
  for (Blade b = 0; b < Blade(dim); ++b) {
    BladeProduct xv = blade_product(b, v, sig);
    BladeProduct vx = blade_product(v, b, sig);
    int c = xv.coeff;
    if (twist && grade(b) % 2 == 1) c = -c;
    c -= vx.coeff;
    if (c != 0) op.add(int(xv.blade), int(b), c);
  }
  return op;
}

RationalMatrix centralizer_equation_matrix(Blade v, CentralizerKind kind, const Signature& sig) {
  return centralizer_equation_operator(v, kind, sig).dense();
}

LinearSubspace centralizer_bruteforce(const BladeSubspace& s, CentralizerKind kind) {
  const Signature& sig = s.sig();
  LinearSubspace k = LinearSubspace::full(int(sig.blade_count()));
  for (Blade v : s.blades()) {
    k = restrict_kernel(k, centralizer_equation_operator(v, kind, sig));
    if (k.dim() == 0) break;
  }
  return k;
}

namespace {

using B = BladeSubspace;

B sum(std::initializer_list<B> pieces) {
  auto it = pieces.begin();
  B acc = *it++;
  for (; it != pieces.end(); ++it) acc = acc.direct_sum(*it);
  return acc;
}

B closed_z1(const Signature& g) { return sub_center(g); }

B closed_z2(const Signature& g) {
  if (g.r() != g.n()) return sum({sub_lambda_full(g), sub_grade(g, g.n())});
  return sub_lambda_full(g);
}

B closed_z3(const Signature& g) {
  const int n = g.n();
  if (n % 2 == 1)
    return sum({sub_lambda_even(g), sub_lambda(g, n - 2), sub_mixed(g, 1, n - 3),
                sub_mixed(g, 1, n - 2), sub_mixed(g, 2, n - 3), sub_grade(g, n)});
  return sum({sub_lambda_even(g), sub_lambda(g, n - 1),
              sub_mixed(g, 1, n - 2), sub_mixed(g, 1, n - 1), sub_mixed(g, 2, n - 2)});
}

B closed_z4(const Signature& g) {
  const int n = g.n();
  if (g.r() != g.n())
    return sum({sub_lambda_full(g), sub_mixed(g, 1, n - 3), sub_mixed(g, 1, n - 2),
                sub_mixed(g, 2, n - 4), sub_mixed(g, 2, n - 3), sub_grade(g, n)});
  return sub_lambda_full(g);
}

B closed_zc1(const Signature& g) { return sub_lambda_full(g); }

B closed_zc2(const Signature& g) {
  const int n = g.n();
  if (n % 2 == 1) return sum({sub_lambda_even(g), sub_lambda(g, n), sub_mixed(g, 1, n - 1)});
  if (g.r() != n)
    return sum({sub_lambda_even(g), sub_lambda(g, n - 1), sub_mixed(g, 1, n - 2), sub_grade(g, n)});
  return sum({sub_lambda_even(g), sub_lambda(g, n - 1)});
}

B closed_zc3(const Signature& g) {
  const int n = g.n();
  B acc = sub_lambda_full(g);
  for (int l = std::max(0, n - 2); l <= g.r(); ++l) acc = acc.direct_sum(sub_mixed(g, 1, l));
  for (int l = std::max(0, n - 3); l <= g.r(); ++l) acc = acc.direct_sum(sub_mixed(g, 2, l));
  return acc;
}

// Z^2 cap Z^3. The even case carries the same mixed tail as Zc^2 cap Zc^3:
// {C^1 Lambda^{n-1}} and {C^2 Lambda^{n-2}} are exactly the pseudoscalar
// when p+q is 1 or 2 and vanish otherwise, and the pseudoscalar does lie in
// both centralizers there (the brute-force cross-check is the arbiter).
B closed_zq23(const Signature& g) {
  const int n = g.n();
  if (n % 2 == 1) return sum({sub_lambda_even(g), sub_lambda(g, n - 2), sub_grade(g, n)});
  return sum({sub_lambda_even(g), sub_lambda(g, n - 1), sub_mixed(g, 1, n - 1),
              sub_mixed(g, 2, n - 2)});
}

// Zc^1 cap Zc^2
B closed_zcq12(const Signature& g) {
  const int n = g.n();
  if (n % 2 == 1) return sum({sub_lambda_even(g), sub_lambda(g, n)});
  return sum({sub_lambda_even(g), sub_lambda(g, n - 1)});
}

// Zc^2 cap Zc^3
B closed_zcq23(const Signature& g) {
  const int n = g.n();
  if (n % 2 == 1) return sum({sub_lambda_even(g), sub_lambda(g, n), sub_mixed(g, 1, n - 1)});
  return sum({sub_lambda_even(g), sub_lambda(g, n - 1), sub_mixed(g, 1, n - 2),
              sub_mixed(g, 1, n - 1), sub_mixed(g, 2, n - 2)});
}

// Z^3 cap C^(0)
B closed_zcq03(const Signature& g) {
  const int n = g.n();
  if (n % 2 == 1)
    return sum({sub_lambda_even(g), sub_mixed(g, 1, n - 2), sub_mixed(g, 2, n - 3)});
  return sum({sub_lambda_even(g), sub_mixed(g, 1, n - 1), sub_mixed(g, 2, n - 2)});
}

}  // namespace

BladeSubspace centralizer_closed_form(const Signature& sig, CTarget t) {
  switch (t) {
    case CTarget::Z1: return closed_z1(sig);
    case CTarget::Z2: return closed_z2(sig);
    case CTarget::Z3: return closed_z3(sig);
    case CTarget::Z4: return closed_z4(sig);
    case CTarget::Zc1: return closed_zc1(sig);
    case CTarget::Zc2: return closed_zc2(sig);
    case CTarget::Zc3: return closed_zc3(sig);
    // Parity rule for the tilde twist: plain on even grades, check on odd.
    case CTarget::Zt1: return closed_zc1(sig);
    case CTarget::Zt2: return closed_z2(sig);
    case CTarget::Zt3: return closed_zc3(sig);
    case CTarget::Zt4: return closed_z4(sig);
    case CTarget::Zq0: return closed_z4(sig);
    case CTarget::Zq1: return closed_z1(sig);
    case CTarget::Zq2: return closed_z2(sig);
    case CTarget::Zq3: return closed_z3(sig);
    case CTarget::Zcq0: return closed_z4(sig).even_part();
    case CTarget::Zcq1: return closed_zc1(sig);
    case CTarget::Zcq2: return closed_zc2(sig);
    case CTarget::Zcq3: return closed_zc3(sig);
    case CTarget::Zq01: return closed_z1(sig);
    case CTarget::Zq02: return closed_z2(sig);
    case CTarget::Zq03: return closed_z3(sig);
    case CTarget::Zq12: return closed_z1(sig);
    case CTarget::Zq13: return closed_z1(sig);
    case CTarget::Zq23: return closed_zq23(sig);
    case CTarget::Zcq01: return closed_z1(sig).even_part();
    case CTarget::Zcq02: return closed_z2(sig).even_part();
    case CTarget::Zcq03: return closed_zcq03(sig);
    case CTarget::Zcq12: return closed_zcq12(sig);
    case CTarget::Zcq13: return closed_zc1(sig);
    case CTarget::Zcq23: return closed_zcq23(sig);
  }
  throw std::invalid_argument("no closed form available for this target");
}

BruteSpec brute_spec(const Signature& sig, CTarget t) {
  using K = CentralizerKind;
  auto grade_target = [&](K k, int m) { return BruteSpec{k, sub_grade(sig, m)}; };
  auto qt_target = [&](K k, int a) { return BruteSpec{k, sub_qt(sig, a)}; };
  auto qtsum_target = [&](K k, int a, int b) { return BruteSpec{k, sub_qt_sum(sig, a, b)}; };
  switch (t) {
    case CTarget::Z1: return grade_target(K::Plain, 1);
    case CTarget::Z2: return grade_target(K::Plain, 2);
    case CTarget::Z3: return grade_target(K::Plain, 3);
    case CTarget::Z4: return grade_target(K::Plain, 4);
    case CTarget::Zc1: return grade_target(K::Check, 1);
    case CTarget::Zc2: return grade_target(K::Check, 2);
    case CTarget::Zc3: return grade_target(K::Check, 3);
    case CTarget::Zt1: return grade_target(K::Tilde, 1);
    case CTarget::Zt2: return grade_target(K::Tilde, 2);
    case CTarget::Zt3: return grade_target(K::Tilde, 3);
    case CTarget::Zt4: return grade_target(K::Tilde, 4);
    case CTarget::Zq0: return qt_target(K::Plain, 0);
    case CTarget::Zq1: return qt_target(K::Plain, 1);
    case CTarget::Zq2: return qt_target(K::Plain, 2);
    case CTarget::Zq3: return qt_target(K::Plain, 3);
    case CTarget::Zcq0: return qt_target(K::Check, 0);
    case CTarget::Zcq1: return qt_target(K::Check, 1);
    case CTarget::Zcq2: return qt_target(K::Check, 2);
    case CTarget::Zcq3: return qt_target(K::Check, 3);
    case CTarget::Zq01: return qtsum_target(K::Plain, 0, 1);
    case CTarget::Zq02: return qtsum_target(K::Plain, 0, 2);
    case CTarget::Zq03: return qtsum_target(K::Plain, 0, 3);
    case CTarget::Zq12: return qtsum_target(K::Plain, 1, 2);
    case CTarget::Zq13: return qtsum_target(K::Plain, 1, 3);
    case CTarget::Zq23: return qtsum_target(K::Plain, 2, 3);
    case CTarget::Zcq01: return qtsum_target(K::Check, 0, 1);
    case CTarget::Zcq02: return qtsum_target(K::Check, 0, 2);
    case CTarget::Zcq03: return qtsum_target(K::Check, 0, 3);
    case CTarget::Zcq12: return qtsum_target(K::Check, 1, 2);
    case CTarget::Zcq13: return qtsum_target(K::Check, 1, 3);
    case CTarget::Zcq23: return qtsum_target(K::Check, 2, 3);
  }
  throw std::invalid_argument("unknown centralizer target");
}

namespace {

const std::array<std::pair<CTarget, const char*>, 31> kTargetNames{{
    {CTarget::Z1, "Z1"},     {CTarget::Z2, "Z2"},     {CTarget::Z3, "Z3"},
    {CTarget::Z4, "Z4"},     {CTarget::Zc1, "Zc1"},   {CTarget::Zc2, "Zc2"},
    {CTarget::Zc3, "Zc3"},   {CTarget::Zt1, "Zt1"},   {CTarget::Zt2, "Zt2"},
    {CTarget::Zt3, "Zt3"},   {CTarget::Zt4, "Zt4"},   {CTarget::Zq0, "Z0bar"},
    {CTarget::Zq1, "Z1bar"}, {CTarget::Zq2, "Z2bar"}, {CTarget::Zq3, "Z3bar"},
    {CTarget::Zcq0, "Zc0bar"}, {CTarget::Zcq1, "Zc1bar"}, {CTarget::Zcq2, "Zc2bar"},
    {CTarget::Zcq3, "Zc3bar"}, {CTarget::Zq01, "Z01bar"}, {CTarget::Zq02, "Z02bar"},
    {CTarget::Zq03, "Z03bar"}, {CTarget::Zq12, "Z12bar"}, {CTarget::Zq13, "Z13bar"},
    {CTarget::Zq23, "Z23bar"}, {CTarget::Zcq01, "Zc01bar"}, {CTarget::Zcq02, "Zc02bar"},
    {CTarget::Zcq03, "Zc03bar"}, {CTarget::Zcq12, "Zc12bar"}, {CTarget::Zcq13, "Zc13bar"},
    {CTarget::Zcq23, "Zc23bar"},
}};

}  // namespace

const std::vector<CTarget>& all_ctargets() {
  static const std::vector<CTarget> all = [] {
    std::vector<CTarget> v;
    for (const auto& [t, name] : kTargetNames) v.push_back(t);
    return v;
  }();
  return all;
}

std::string ctarget_name(CTarget t) {
  for (const auto& [tt, name] : kTargetNames)
    if (tt == t) return name;
  throw std::invalid_argument("unknown centralizer target");
}

CTarget parse_ctarget(const std::string& raw) {
  std::string name;
  for (char c : raw)
    if (c != '^') name.push_back(c);
  for (const auto& [t, n] : kTargetNames)
    if (name == n) return t;
  throw std::invalid_argument("unknown centralizer target: " + raw +
                              " (Zc4 has no closed form; use --bruteforce with --of)");
}

}  // namespace ga
