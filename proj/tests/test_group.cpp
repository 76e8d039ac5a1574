#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ga/group.hpp"
#include "ga/parse.hpp"

using namespace ga;

namespace {
Multivector mv(const Signature& sig, const std::string& text) {
  return parse_multivector(sig, text);
}
}  // namespace

TEST_CASE("adjoint representations, fixed values") {
  Signature cl200(2, 0, 0);
  CHECK(apply_rep(Rep::Ad, mv(cl200, "e1"), mv(cl200, "e2")) == mv(cl200, "-e2"));
  CHECK(apply_rep(Rep::AdCheck, mv(cl200, "e1"), mv(cl200, "e2")) == mv(cl200, "e2"));
  Signature sig(1, 0, 2);
  Multivector u = mv(sig, "1 + e2 - e13");
  CHECK(apply_rep(Rep::AdTilde, Multivector::scalar(sig, 1), u) == u);
  CHECK_THROWS_AS(apply_rep(Rep::Ad, mv(sig, "e3"), u), std::invalid_argument);
}

TEST_CASE("norm functions, fixed values") {
  Signature cl100(1, 0, 0);
  NormPair nu = norms(mv(cl100, "e1"));
  CHECK(nu.psi == mv(cl100, "1"));
  CHECK(nu.chi == mv(cl100, "-1"));

  Signature cl001(0, 0, 1);
  nu = norms(mv(cl001, "1 + e1"));
  CHECK(nu.psi == mv(cl001, "1 + 2*e1"));
  CHECK(nu.chi == mv(cl001, "1"));

  Signature sig(1, 1, 0);
  nu = norms(mv(sig, "5"));
  CHECK(nu.psi == mv(sig, "25"));
  CHECK(nu.chi == mv(sig, "25"));
}

TEST_CASE("preserves, fixed values") {
  Signature cl200(2, 0, 0);
  Multivector t = mv(cl200, "e1");
  Multivector rotor = mv(cl200, "1 + e12");
  CHECK(preserves(t, *inverse(t), sub_grade(cl200, 1), Rep::Ad));
  CHECK(preserves(rotor, *inverse(rotor), sub_grade(cl200, 1), Rep::Ad));
}

TEST_CASE("representation kernels") {
  Signature cl001(0, 0, 1);
  CHECK(kernel_of_rep(Rep::Ad, cl001).blades() == std::set<Blade>{0b0, 0b1});
  Signature cl201(2, 0, 1);
  CHECK(kernel_of_rep(Rep::AdCheck, cl201).blades() == std::set<Blade>{0b000});
  CHECK(kernel_of_rep(Rep::AdTilde, cl201).blades() == std::set<Blade>{0b000, 0b100});
}

TEST_CASE("membership, fixed values") {
  Signature cl201(2, 0, 1);
  CHECK(member(GroupId::AuxAc, mv(cl201, "e1"), MemberMode::Norm));
  Signature cl101(1, 0, 1);
  CHECK(!member(GroupId::AuxAc, mv(cl101, "1 + e1"), MemberMode::Norm));
  // the identity is everywhere
  for (GroupId g : all_group_ids())
    CHECK(member(g, Multivector::scalar(cl201, 1), MemberMode::Norm));
  // zero divisors are members of nothing
  CHECK(!member(GroupId::Qt01, mv(cl201, "e3"), MemberMode::Norm));
  CHECK(!member(GroupId::Gamma, mv(cl201, "e3"), MemberMode::Stabilizer));
  CHECK_THROWS_AS(member(GroupId::AuxAc, mv(cl201, "e1"), MemberMode::Stabilizer),
                  std::invalid_argument);
}

TEST_CASE("group ids round-trip") {
  for (GroupId g : all_group_ids()) CHECK(parse_group(group_name(g)) == g);
  CHECK_THROWS_AS(parse_group("A99"), std::invalid_argument);
  CHECK(generalized_group_ids().size() == 12);
}

TEST_CASE("stabilizer and norm modes agree on random elements, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for (auto p = 0; p <= n; ++p)
      for (int q = 0; p + q <= n; ++q) {
        Signature sig(p, q, n - p - q);
        for (int i = 0; i < 25; ++i) {
          SampleInfo s =
              sample_invertible(sig, derive_seed(21, sig.str() + "/" + std::to_string(i)), 3);
          for (GroupId g : generalized_group_ids()) {
            INFO("Cl(", sig.str(), ") ", group_name(g), " t=", s.mv.str());
            CHECK(member(g, s.mv, MemberMode::Stabilizer) ==
                  member(g, s.mv, MemberMode::Norm));
          }
        }
      }
  }
}

TEST_CASE("certified members stay members under product and inverse") {
  for (auto [p, q, r] : {std::array{1, 0, 1}, std::array{0, 1, 2}, std::array{2, 0, 1}}) {
    Signature sig(p, q, r);
    for (GroupId g : generalized_group_ids()) {
      Multivector a = sample_group_member(g, sig, derive_seed(31, group_name(g) + sig.str()));
      Multivector b = sample_group_member(g, sig, derive_seed(37, group_name(g) + sig.str()));
      CHECK(member(g, a * b, MemberMode::Norm));
      CHECK(member(g, *inverse(a), MemberMode::Norm));
    }
  }
}

TEST_CASE("sampled members exercise both norm conditions of the Q family") {
  Signature sig(1, 0, 2);
  for (int i = 0; i < 10; ++i) {
    Multivector t = sample_group_member(GroupId::Qt03, sig, derive_seed(41, std::to_string(i)));
    CHECK(member(GroupId::Qt03, t, MemberMode::Norm));
    CHECK(member(GroupId::Qt03, t, MemberMode::Stabilizer));
  }
}

TEST_CASE("vector products times norm-set units are members") {
  Signature cl102(1, 0, 2);
  // e + e23 is a unit of Z2 cap Z3 here, so e1 * (e + e23) lands in A23.
  Multivector t = mv(cl102, "e1") * mv(cl102, "1 + e23");
  CHECK(centralizer_closed_form(cl102, CTarget::Zq23).contains(mv(cl102, "1 + e23")));
  CHECK(member(GroupId::A23, t, MemberMode::Norm));
  CHECK(member(GroupId::A23, t, MemberMode::Stabilizer));
}

TEST_CASE("factor, fixed example") {
  Signature cl102(1, 0, 2);
  Multivector t = mv(cl102, "e1") * mv(cl102, "1 + e123");
  REQUIRE(member(GroupId::A01, t, MemberMode::Norm));
  Factorization f = factor(GroupId::A01, t);
  CHECK(f.t0 * f.y == t);
  CHECK(member(GroupId::AuxAc, f.t0, MemberMode::Norm));
  // psi(t) = e here, so the construction degenerates to y = e
  CHECK(f.y == Multivector::scalar(cl102, 1));
}

TEST_CASE("factor preconditions") {
  Signature cl200(2, 0, 0);
  CHECK_THROWS_AS(factor(GroupId::A01, mv(cl200, "e1")), std::invalid_argument);  // r = 0
  Signature cl101(1, 0, 1);
  CHECK_THROWS_AS(factor(GroupId::Bc01, mv(cl101, "e1")), std::invalid_argument);  // unsupported
  CHECK_THROWS_AS(factor(GroupId::A01, mv(cl101, "e2")), std::invalid_argument);   // not a member
}

TEST_CASE("factor round-trips on sampled members") {
  for (auto [p, q, r] : {std::array{1, 0, 1}, std::array{1, 1, 1}, std::array{0, 0, 3},
                         std::array{2, 0, 2}}) {
    Signature sig(p, q, r);
    for (GroupId g : all_group_ids()) {
      if (!factorable(g)) continue;
      for (int i = 0; i < 8; ++i) {
        Multivector t = sample_group_member(
            g, sig, derive_seed(43, group_name(g) + sig.str() + std::to_string(i)));
        Factorization f = factor(g, t);  // postconditions checked inside
        CHECK(f.t0 * f.y == t);
      }
    }
  }
}

TEST_CASE("the dedicated B03 path at n = 5") {
  bool nontrivial_seen = false;
  for (auto [p, q, r] : {std::array{1, 0, 4}, std::array{0, 1, 4}, std::array{2, 1, 2},
                         std::array{0, 0, 5}}) {
    Signature sig(p, q, r);
    for (int i = 0; i < 12; ++i) {
      Multivector t = sample_group_member(GroupId::B03, sig,
                                          derive_seed(47, sig.str() + std::to_string(i)));
      Factorization f = factor(GroupId::B03, t);
      CHECK(f.t0 * f.y == t);
      if (!(f.y == Multivector::scalar(sig, 1))) nontrivial_seen = true;
    }
  }
  CHECK(nontrivial_seen);
}

TEST_CASE("norm sets of the Q family differ from the non-degenerate collapse at tiny n") {
  // At r = 0 and n = 2 the instantiated Z^4 is the whole algebra, so Qt01
  // is strictly larger than the {psi, chi scalar} group: a regression pin.
  Signature sig(0, 2, 0);
  Multivector t = mv(sig, "1 + e1");
  REQUIRE(inverse(t).has_value());
  CHECK(member(GroupId::Qt01, t, MemberMode::Norm));
  CHECK(member(GroupId::Qt01, t, MemberMode::Stabilizer));
  CHECK(!member(GroupId::Qt23, t, MemberMode::Norm));
  NormPair nu = norms(t);
  CHECK(!sub_grade(sig, 0).contains(nu.psi));
}

TEST_CASE("pseudoscalar joins Z2 cap Z3 at even n with few non-degenerate generators") {
  // Cl(2,0,2): e1234 commutes with every grade-2 and grade-3 blade, so the
  // A23 norm set picks it up; the twisted pair set does not.
  Signature sig(2, 0, 2);
  Multivector i4 = parse_multivector(sig, "e1234");
  BladeSubspace z23 = centralizer_closed_form(sig, CTarget::Zq23);
  CHECK(z23.contains(i4));
  CHECK(centralizer_bruteforce(sub_qt_sum(sig, 2, 3), CentralizerKind::Plain) ==
        z23.to_linear());
  CHECK(!centralizer_closed_form(sig, CTarget::Zcq12).contains(i4));

  // Consequence: Ac12 != A23 here even though n is even.
  Multivector t = parse_multivector(sig, "-6*e2 + 4*e3 + 3*e134 - 6*e234");
  REQUIRE(inverse(t).has_value());
  CHECK(member(GroupId::A23, t, MemberMode::Norm));
  CHECK(member(GroupId::A23, t, MemberMode::Stabilizer));
  CHECK(!member(GroupId::Ac12, t, MemberMode::Norm));
  CHECK(!member(GroupId::Ac12, t, MemberMode::Stabilizer));
}

TEST_CASE("third coefficient condition of the Cl(p,q,1) fixture needs the bivector term") {
  Signature sig(0, 2, 1);
  Multivector t = parse_multivector(sig, "2*e12 - 3*e3 + e13 - 2*e123");
  NormPair nu = norms(t);
  CHECK(nu.psi == parse_multivector(sig, "4 - 8*e3"));
  CHECK(!member(GroupId::AuxAc, t, MemberMode::Norm));
}

TEST_CASE("nilpotent unit inverse") {
  Signature sig(1, 0, 2);
  Multivector u = mv(sig, "2 + e23 - 3*e2");
  Multivector inv = nilpotent_unit_inverse(u);
  CHECK(u * inv == Multivector::scalar(sig, 1));
  CHECK_THROWS_AS(nilpotent_unit_inverse(mv(sig, "e2")), std::invalid_argument);
  CHECK_THROWS_AS(nilpotent_unit_inverse(mv(sig, "1 + e1")), std::invalid_argument);
}
