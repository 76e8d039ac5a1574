#include "ga/group.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace ga {

NormPair norms(const Multivector& t) {
  return {t.reversion() * t, t.clifford_conjugation() * t};
}

Multivector apply_rep(Rep rep, const Multivector& t, const Multivector& t_inv,
                      const Multivector& u) {
  switch (rep) {
    case Rep::Ad:
      return t * u * t_inv;
    case Rep::AdCheck:
      return t.grade_involution() * u * t_inv;
    case Rep::AdTilde:
      return t * u.even_part() * t_inv + t.grade_involution() * u.odd_part() * t_inv;
  }
  throw std::logic_error("unreachable");
}

Multivector apply_rep(Rep rep, const Multivector& t, const Multivector& u) {
  auto inv = inverse(t);
  if (!inv) throw std::invalid_argument("apply_rep: element is not invertible");
  return apply_rep(rep, t, *inv, u);
}

bool preserves(const Multivector& t, const Multivector& t_inv, const BladeSubspace& s, Rep rep) {
  for (Blade v : s.blades()) {
    Multivector image = apply_rep(rep, t, t_inv, Multivector::basis(s.sig(), v));
    if (!s.contains(image)) return false;
  }
  return true;
}

BladeSubspace kernel_of_rep(Rep rep, const Signature& sig) {
  switch (rep) {
    case Rep::Ad:
      return sub_center(sig);
    case Rep::AdCheck:
      return sub_lambda_even(sig);
    case Rep::AdTilde:
      return sub_lambda_full(sig);
  }
  throw std::logic_error("unreachable");
}

namespace {

const std::array<std::pair<GroupId, const char*>, 16> kGroupNames{{
    {GroupId::A01, "A01"},     {GroupId::A23, "A23"},     {GroupId::B12, "B12"},
    {GroupId::B03, "B03"},     {GroupId::Ac12, "Ac12"},   {GroupId::Ac03, "Ac03"},
    {GroupId::Bc01, "Bc01"},   {GroupId::Bc23, "Bc23"},   {GroupId::Qt01, "Qt01"},
    {GroupId::Qt23, "Qt23"},   {GroupId::Qt12, "Qt12"},   {GroupId::Qt03, "Qt03"},
    {GroupId::AuxAc, "AuxAc"}, {GroupId::AuxBc, "AuxBc"}, {GroupId::Gamma, "Gamma"},
    {GroupId::GammaPM, "GammaPM"},
}};

}  // namespace

const std::vector<GroupId>& all_group_ids() {
  static const std::vector<GroupId> all = [] {
    std::vector<GroupId> v;
    for (const auto& [g, name] : kGroupNames) v.push_back(g);
    return v;
  }();
  return all;
}

const std::vector<GroupId>& generalized_group_ids() {
  static const std::vector<GroupId> twelve{
      GroupId::A01,  GroupId::A23,  GroupId::B12,  GroupId::B03,
      GroupId::Ac12, GroupId::Ac03, GroupId::Bc01, GroupId::Bc23,
      GroupId::Qt01, GroupId::Qt23, GroupId::Qt12, GroupId::Qt03,
  };
  return twelve;
}

std::string group_name(GroupId g) {
  for (const auto& [gg, name] : kGroupNames)
    if (gg == g) return name;
  throw std::invalid_argument("unknown group id");
}

GroupId parse_group(const std::string& name) {
  for (const auto& [g, n] : kGroupNames)
    if (name == n) return g;
  throw std::invalid_argument("unknown group: " + name);
}

GroupSpec group_spec(GroupId g, const Signature& sig) {
  GroupSpec spec{g, std::nullopt, std::nullopt, {}};
  auto stab = [&](Rep rep, int k, int l) {
    spec.rep = rep;
    spec.target = sub_qt_sum(sig, k, l);
  };
  switch (g) {
    case GroupId::A01:
      stab(Rep::Ad, 0, 1);
      spec.norm_form = {{NormFunc::Psi, CTarget::Z1}};
      break;
    case GroupId::A23:
      stab(Rep::Ad, 2, 3);
      spec.norm_form = {{NormFunc::Psi, CTarget::Zq23}};
      break;
    case GroupId::B12:
      stab(Rep::Ad, 1, 2);
      spec.norm_form = {{NormFunc::Chi, CTarget::Z1}};
      break;
    case GroupId::B03:
      stab(Rep::Ad, 0, 3);
      spec.norm_form = {{NormFunc::Chi, CTarget::Z3}};
      break;
    case GroupId::Ac12:
      stab(Rep::AdCheck, 1, 2);
      spec.norm_form = {{NormFunc::Psi, CTarget::Zcq12}};
      break;
    case GroupId::Ac03:
      stab(Rep::AdCheck, 0, 3);
      spec.norm_form = {{NormFunc::Psi, CTarget::Zcq03}};
      break;
    case GroupId::Bc01:
      stab(Rep::AdCheck, 0, 1);
      spec.norm_form = {{NormFunc::Chi, CTarget::Zcq01}};
      break;
    case GroupId::Bc23:
      stab(Rep::AdCheck, 2, 3);
      spec.norm_form = {{NormFunc::Chi, CTarget::Zcq23}};
      break;
    case GroupId::Qt01:
      stab(Rep::AdTilde, 0, 1);
      spec.norm_form = {{NormFunc::Psi, CTarget::Z4}, {NormFunc::Chi, CTarget::Zc1}};
      break;
    case GroupId::Qt23:
      stab(Rep::AdTilde, 2, 3);
      spec.norm_form = {{NormFunc::Psi, CTarget::Z2}, {NormFunc::Chi, CTarget::Zc3}};
      break;
    case GroupId::Qt12:
      stab(Rep::AdTilde, 1, 2);
      spec.norm_form = {{NormFunc::Psi, CTarget::Zc1}, {NormFunc::Chi, CTarget::Z2}};
      break;
    case GroupId::Qt03:
      stab(Rep::AdTilde, 0, 3);
      spec.norm_form = {{NormFunc::Psi, CTarget::Zc3}, {NormFunc::Chi, CTarget::Z4}};
      break;
    case GroupId::AuxAc:
      spec.norm_form = {{NormFunc::Psi, CTarget::Zcq01}};
      break;
    case GroupId::AuxBc:
      spec.norm_form = {{NormFunc::Chi, CTarget::Zcq01}};
      break;
    // The classical groups stabilize the grade-1 subspace. Their norm form
    // is the psi/chi pair attached to the smallest involution-stable
    // superspace of grade 1 (grades 1 mod 4), which equals grade 1 itself
    // for n <= 4.
    case GroupId::Gamma:
      spec.rep = Rep::Ad;
      spec.target = sub_grade(sig, 1);
      spec.norm_form = {{NormFunc::Psi, CTarget::Z1}, {NormFunc::Chi, CTarget::Z1}};
      break;
    case GroupId::GammaPM:
      spec.rep = Rep::AdCheck;
      spec.target = sub_grade(sig, 1);
      spec.norm_form = {{NormFunc::Psi, CTarget::Zc1}, {NormFunc::Chi, CTarget::Zc1}};
      break;
  }
  return spec;
}

bool member(GroupId g, const Multivector& t, MemberMode mode) {
  auto inv = inverse(t);
  if (!inv) return false;
  GroupSpec spec = group_spec(g, t.sig());
  if (mode == MemberMode::Stabilizer) {
    if (!spec.rep)
      throw std::invalid_argument("group " + group_name(g) + " has no stabilizer form");
    return preserves(t, *inv, *spec.target, *spec.rep);
  }
  NormPair nu = norms(t);
  for (const auto& [func, target] : spec.norm_form) {
    const Multivector& value = func == NormFunc::Psi ? nu.psi : nu.chi;
    // value = (involution of t) * t is automatically invertible here.
    if (!centralizer_closed_form(t.sig(), target).contains(value)) return false;
  }
  return true;
}

RepImages rep_images(const Multivector& t, const Multivector& t_inv) {
  const Signature& sig = t.sig();
  RepImages images;
  Multivector hat = t.grade_involution();
  images.ad.reserve(sig.blade_count());
  images.check.reserve(sig.blade_count());
  for (Blade b = 0; b < sig.blade_count(); ++b) {
    Multivector right = Multivector::basis(sig, b) * t_inv;
    images.ad.push_back(t * right);
    images.check.push_back(hat * right);
  }
  return images;
}

bool preserves_with_images(const RepImages& images, const BladeSubspace& s, Rep rep) {
  for (Blade v : s.blades()) {
    const bool odd = grade(v) % 2 == 1;
    const Multivector& image = rep == Rep::Ad ? images.ad[v]
                               : rep == Rep::AdCheck
                                   ? images.check[v]
                                   : (odd ? images.check[v] : images.ad[v]);
    if (!s.contains(image)) return false;
  }
  return true;
}

Multivector random_multivector(Rng& rng, const Signature& sig, int bound) {
  Multivector m(sig);
  for (Blade b = 0; b < sig.blade_count(); ++b) {
    long c = rng.int_in(-bound, bound);
    if (c != 0) m.add_term(b, Rational(c));
  }
  return m;
}

Multivector random_in_span(Rng& rng, const BladeSubspace& s, int bound) {
  Multivector m(s.sig());
  for (Blade b : s.blades()) {
    long c = rng.int_in(-bound, bound);
    if (c != 0) m.add_term(b, Rational(c));
  }
  return m;
}

SampleInfo sample_invertible(const Signature& sig, std::uint64_t seed, int coeff_bound) {
  if (coeff_bound < 1) throw std::invalid_argument("coeff_bound must be >= 1");
  Rng rng(seed);
  for (int rejections = 0; rejections < 256; ++rejections) {
    Multivector m = random_multivector(rng, sig, coeff_bound);
    if (inverse(m)) return {m, seed, rejections};
  }
  throw std::runtime_error("sample_invertible: retry budget exhausted (seed " +
                           std::to_string(seed) + ")");
}

namespace {

// Random invertible grade-1 vector; requires r < n.
Multivector random_nonnull_vector(Rng& rng, const Signature& sig, int bound) {
  for (int tries = 0; tries < 256; ++tries) {
    Multivector v(sig);
    for (int a = 1; a <= sig.n(); ++a) {
      long c = rng.int_in(-bound, bound);
      if (c != 0) v.add_term(Blade{1} << (a - 1), Rational(c));
    }
    if (!is_zero((v * v).scalar_part())) return v;
  }
  throw std::runtime_error("could not sample a non-null vector");
}

// The span the nilpotent part of a certified unit may live in.
BladeSubspace unit_span(GroupId g, const Signature& sig) {
  if (g == GroupId::Gamma) return sub_center(sig);
  if (g == GroupId::GammaPM) return sub_lambda_even(sig);
  GroupSpec spec = group_spec(g, sig);
  BladeSubspace h = centralizer_closed_form(sig, spec.norm_form.front().second);
  for (size_t i = 1; i < spec.norm_form.size(); ++i)
    h = h.intersect(centralizer_closed_form(sig, spec.norm_form[i].second));
  return h;
}

}  // namespace

Multivector nilpotent_unit_inverse(const Multivector& u) {
  const Signature& sig = u.sig();
  Rational alpha = u.scalar_part();
  if (is_zero(alpha)) throw std::invalid_argument("unit must have nonzero scalar part");
  Multivector n = u - Multivector::scalar(sig, alpha);
  Multivector acc = Multivector::scalar(sig, 1 / alpha);
  Multivector term = Multivector::scalar(sig, 1 / alpha);
  for (std::uint32_t k = 0; k <= sig.blade_count(); ++k) {
    if (term.is_zero()) return acc;
    term = term * n;
    term = term.scale(-1 / alpha);
    acc = acc + term;
  }
  if (!(u * acc == Multivector::scalar(sig, 1)))
    throw std::invalid_argument("element is not of the form unit + nilpotent");
  return acc;
}

Multivector sample_group_member(GroupId g, const Signature& sig, std::uint64_t seed) {
  Rng rng(seed);
  const BladeSubspace nil_span = unit_span(g, sig).intersect(sub_radical(sig));
  for (int attempt = 0; attempt < 64; ++attempt) {
    Multivector t = Multivector::scalar(sig, 1);
    if (sig.r() < sig.n()) {
      int vectors = int(rng.int_in(1, 3));
      for (int i = 0; i < vectors; ++i) t = t * random_nonnull_vector(rng, sig, 3);
    }
    Multivector unit = Multivector::scalar(sig, Rational(rng.chance(1, 2) ? rng.int_in(1, 3)
                                                                          : rng.int_in(-3, -1)));
    for (Blade b : nil_span.blades()) {
      long c = rng.int_in(-3, 3);
      if (c != 0) unit.add_term(b, Rational(c));
    }
    t = t * unit;
    if (member(g, t, MemberMode::Norm)) return t;
  }
  throw std::logic_error("sample_group_member failed to construct a member of " + group_name(g) +
                         " in Cl(" + sig.str() + "), seed " + std::to_string(seed));
}

bool factorable(GroupId g) {
  switch (g) {
    case GroupId::A01:
    case GroupId::A23:
    case GroupId::Ac12:
    case GroupId::Ac03:
    case GroupId::B12:
    case GroupId::B03:
    case GroupId::Bc23:
      return true;
    default:
      return false;
  }
}

CTarget factor_set(GroupId g) {
  switch (g) {
    case GroupId::A01: return CTarget::Z1;
    case GroupId::A23: return CTarget::Zq23;
    case GroupId::Ac12: return CTarget::Zcq12;
    case GroupId::Ac03: return CTarget::Zcq03;
    case GroupId::B12: return CTarget::Z1;
    case GroupId::B03: return CTarget::Z3;
    case GroupId::Bc23: return CTarget::Zcq23;
    default:
      throw std::invalid_argument("factor is not defined for group " + group_name(g));
  }
}

namespace {

[[noreturn]] void factor_violation(GroupId g, const Multivector& t, const std::string& what) {
  std::ostringstream out;
  out << "factor postcondition violated (" << what << "): group " << group_name(g) << ", Cl("
      << t.sig().str() << "), t = " << t.str();
  throw std::logic_error(out.str());
}

}  // namespace

Factorization factor(GroupId g, const Multivector& t) {
  const Signature& sig = t.sig();
  if (!factorable(g))
    throw std::invalid_argument("factor is not defined for group " + group_name(g));
  if (sig.r() == 0) throw std::invalid_argument("factor requires r >= 1");
  if (!member(g, t, MemberMode::Norm))
    throw std::invalid_argument("factor requires a member of " + group_name(g));

  const bool a_side = g == GroupId::A01 || g == GroupId::A23 || g == GroupId::Ac12 ||
                      g == GroupId::Ac03;
  const GroupId aux = a_side ? GroupId::AuxAc : GroupId::AuxBc;
  const BladeSubspace h = centralizer_closed_form(sig, factor_set(g));
  const BladeSubspace lambda_even = sub_lambda_even(sig);
  const Multivector e = Multivector::scalar(sig, 1);

  auto norm_of = [&](const Multivector& m) {
    NormPair nu = norms(m);
    return a_side ? nu.psi : nu.chi;
  };
  // nu = alpha e + X + W, X the scalar-free Lambda^(0) part, W the rest.
  struct Split {
    Rational alpha;
    Multivector x, w;
  };
  auto split = [&](const Multivector& nu) {
    Multivector even_grassmann = lambda_even.project(nu);
    Rational alpha = even_grassmann.scalar_part();
    return Split{alpha, even_grassmann - Multivector::scalar(sig, alpha), nu - even_grassmann};
  };
  // y = e + (1/2)(alpha e + X)^-1 W, valid when W^2 = 0.
  auto square_zero_unit = [&](const Split& s) {
    if (s.w.is_zero()) return std::pair{e, e};
    if (is_zero(s.alpha)) factor_violation(g, t, "norm value has zero scalar part");
    if (!(s.w * s.w).is_zero()) factor_violation(g, t, "complement part does not square to zero");
    Multivector base_inv = nilpotent_unit_inverse(Multivector::scalar(sig, s.alpha) + s.x);
    Multivector m = (base_inv * s.w).scale(Rational(1, 2));
    Multivector y = e + m;
    Multivector y_inv = e - m;
    if (!(y * y_inv == e)) factor_violation(g, t, "unit inverse check failed");
    return std::pair{y, y_inv};
  };

  Multivector t0 = t, y = e;
  Split s = split(norm_of(t));
  if (g == GroupId::B03 && sig.n() == 5) {
    // Dedicated path: y1 = e + W/(2 alpha) with the cubic-truncation
    // inverse, then a second split over the center.
    if (!s.w.is_zero()) {
      if (is_zero(s.alpha)) factor_violation(g, t, "norm value has zero scalar part");
      Multivector w1 = s.w.scale(1 / (2 * s.alpha));
      Multivector w1sq = w1 * w1;
      if (!(w1sq * w1).is_zero()) factor_violation(g, t, "W^3 != 0 on the n = 5 path");
      Multivector y1 = e + w1;
      Multivector y1_inv = e - w1 + w1sq;
      if (!(y1 * y1_inv == e)) factor_violation(g, t, "unit inverse check failed");
      t0 = t * y1_inv;
      Split s2 = split(norm_of(t0));
      auto [y2, y2_inv] = square_zero_unit(s2);
      t0 = t0 * y2_inv;
      y = y2 * y1;
    }
  } else {
    auto [y1, y1_inv] = square_zero_unit(s);
    t0 = t * y1_inv;
    y = y1;
  }

  if (!member(aux, t0, MemberMode::Norm)) factor_violation(g, t, "t0 outside auxiliary group");
  if (!h.contains(y)) factor_violation(g, t, "y outside the designated unit set");
  if (!inverse(y)) factor_violation(g, t, "y not invertible");
  if (!(t0 * y == t)) factor_violation(g, t, "product does not reconstruct t");
  return {t0, y};
}

}  // namespace ga
