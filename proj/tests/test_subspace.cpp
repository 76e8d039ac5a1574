#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ga/group.hpp"
#include "ga/lie.hpp"
#include "ga/parse.hpp"
#include "ga/verify.hpp"

using namespace ga;

TEST_CASE("named subspaces, fixed small cases") {
  Signature cl001(0, 0, 1);
  CHECK(sub_center(cl001).blades() == std::set<Blade>{0b0, 0b1});
  Signature cl110(1, 1, 0);
  CHECK(sub_center(cl110).blades() == std::set<Blade>{0b0});
  Signature cl101(1, 0, 1);
  CHECK(sub_radical(cl101).blades() == std::set<Blade>{0b10, 0b11});

  Signature cl202(2, 0, 2);
  CHECK(sub_lambda_even(cl202).blades() == std::set<Blade>{0b0000, 0b1100});
  CHECK(sub_lambda(cl202, 1).blades() == std::set<Blade>{0b0100, 0b1000});
  CHECK(sub_mixed(cl202, 1, 1).dim() == 4);
  CHECK(sub_grade(cl202, 7).is_zero());
  CHECK(sub_lambda(cl202, 3).is_zero());
  CHECK(sub_mixed(cl202, 1, -1).is_zero());
}

TEST_CASE("named_subspace dispatch and CLI names") {
  Signature sig(2, 0, 1);
  CHECK(named_subspace(sig, parse_subspace_name("grade:1")) == sub_grade(sig, 1));
  CHECK(named_subspace(sig, parse_subspace_name("parity:0")) == sub_parity(sig, 0));
  CHECK(named_subspace(sig, parse_subspace_name("qt:3")) == sub_qt(sig, 3));
  CHECK(named_subspace(sig, parse_subspace_name("qt:23")) == sub_qt_sum(sig, 2, 3));
  CHECK(named_subspace(sig, parse_subspace_name("lambda:1")) == sub_lambda(sig, 1));
  CHECK(named_subspace(sig, parse_subspace_name("mixed:1,1")) == sub_mixed(sig, 1, 1));
  CHECK(named_subspace(sig, parse_subspace_name("center")) == sub_center(sig));
  CHECK(named_subspace(sig, parse_subspace_name("radical")) == sub_radical(sig));
  CHECK_THROWS_AS(parse_subspace_name("nonsense"), std::invalid_argument);
}

TEST_CASE("direct sums reject overlap") {
  Signature sig(1, 0, 1);
  CHECK_THROWS_AS(sub_parity(sig, 0).direct_sum(sub_grade(sig, 0)), std::logic_error);
  BladeSubspace s = sub_grade(sig, 0).direct_sum(sub_grade(sig, 2));
  CHECK(s == sub_parity(sig, 0));
}

TEST_CASE("orthogonal complement") {
  Signature cl102(1, 0, 2);
  BladeSubspace center = sub_center(cl102);  // n = 3 odd
  BladeSubspace rest = orth_complement(sub_lambda_even(cl102), center);
  CHECK(rest.blades() == std::set<Blade>{0b111});
  CHECK(orth_complement(center, center).is_zero());
  CHECK(orth_complement(sub_zero(cl102), center) == center);
  CHECK_THROWS_AS(orth_complement(sub_grade(cl102, 1), sub_lambda_even(cl102)),
                  std::invalid_argument);
}

TEST_CASE("quaternion-type dimensions match the closed forms up to n = 12") {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k < 4; ++k) CHECK(dim_qt_comb(n, k) == dim_qt_trig(n, k));
}

TEST_CASE("blade subspace dims count the combinatorics") {
  for (auto [p, q, r] : {std::array{2, 2, 2}, std::array{0, 0, 5}, std::array{3, 2, 0}}) {
    Signature sig(p, q, r);
    int n = sig.n();
    for (int k = 0; k <= n; ++k) CHECK(sub_grade(sig, k).dim() == binomial(n, k));
    for (int k = 0; k <= r; ++k) CHECK(sub_lambda(sig, k).dim() == binomial(r, k));
    for (int k = 0; k < 4; ++k) CHECK(sub_qt(sig, k).dim() == dim_qt_comb(n, k));
    CHECK(sub_mixed(sig, 1, 1).dim() == binomial(p + q, 1) * binomial(r, 1));
  }
}

TEST_CASE("radical is a two-sided ideal (sampled)") {
  for (auto [p, q, r] : {std::array{1, 1, 1}, std::array{2, 0, 2}, std::array{0, 1, 3}}) {
    Signature sig(p, q, r);
    BladeSubspace rad = sub_radical(sig);
    Rng rng(derive_seed(5, sig.str()));
    for (int i = 0; i < 60; ++i) {
      Multivector u = random_in_span(rng, rad, 3);
      Multivector v = random_multivector(rng, sig, 3);
      CHECK(rad.contains(u * v));
      CHECK(rad.contains(v * u));
    }
  }
}

TEST_CASE("high Grassmann grades square to zero") {
  for (auto [p, q, r] : {std::array{0, 0, 4}, std::array{1, 0, 4}, std::array{0, 1, 5},
                         std::array{2, 0, 2}, std::array{0, 0, 6}}) {
    Signature sig(p, q, r);
    int n = sig.n();
    int threshold = (n % 4 <= 1) ? n / 2 + 1 : n / 2;
    Rng rng(derive_seed(6, sig.str()));
    for (int k = threshold; k <= r; ++k)
      for (int i = 0; i < 25; ++i) {
        Multivector u = random_in_span(rng, sub_lambda(sig, k), 3);
        CHECK((u * u).is_zero());
      }
  }
}

TEST_CASE("listed orthogonal complements square to zero") {
  for (int n = 1; n <= 5; ++n) {
    for (auto [p, q, r] : signature_splits(n)) {
      if (r == 0) continue;
      Signature sig(p, q, r);
      std::vector<BladeSubspace> hs;
      if (n % 2 == 1) hs.push_back(sub_center(sig));
      if (n == 4 || n >= 6) hs.push_back(centralizer_closed_form(sig, CTarget::Z3));
      if (n >= 3) {
        hs.push_back(centralizer_closed_form(sig, CTarget::Zcq23));
        hs.push_back(centralizer_closed_form(sig, CTarget::Zcq12));
      }
      if (n >= 4) {
        hs.push_back(centralizer_closed_form(sig, CTarget::Zq23));
        hs.push_back(centralizer_closed_form(sig, CTarget::Zcq03));
      }
      Rng rng(derive_seed(8, sig.str()));
      for (const BladeSubspace& h : hs) {
        BladeSubspace complement = orth_complement(sub_lambda_even(sig), h);
        for (int i = 0; i < 25; ++i) {
          Multivector u = random_in_span(rng, complement, 3);
          CHECK((u * u).is_zero());
        }
      }
    }
  }
}
