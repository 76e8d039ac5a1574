#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ga/centralizer.hpp"
#include "ga/parse.hpp"
#include "ga/verify.hpp"

using namespace ga;

TEST_CASE("brute-force centralizers, fixed small cases") {
  Signature cl001(0, 0, 1);
  LinearSubspace z = centralizer_bruteforce(sub_grade(cl001, 1), CentralizerKind::Plain);
  CHECK(z == sub_center(cl001).to_linear());  // span{e, e1}

  Signature cl201(2, 0, 1);
  LinearSubspace zc = centralizer_bruteforce(sub_grade(cl201, 1), CentralizerKind::Check);
  CHECK(zc == sub_lambda_full(cl201).to_linear());  // span{e, e3}

  // vacuous constraints give the whole algebra
  CHECK(centralizer_bruteforce(sub_zero(cl201), CentralizerKind::Plain) ==
        LinearSubspace::full(8));
  CHECK(centralizer_bruteforce(sub_grade(cl201, 7), CentralizerKind::Tilde) ==
        LinearSubspace::full(8));
}

TEST_CASE("closed forms, fixed values") {
  Signature cl201(2, 0, 1);
  CHECK(centralizer_closed_form(cl201, CTarget::Z2).blades() ==
        std::set<Blade>{0b000, 0b100, 0b111});

  Signature cl102(1, 0, 2);
  CHECK(centralizer_closed_form(cl102, CTarget::Zq23).blades() ==
        std::set<Blade>{0b000, 0b110, 0b010, 0b100, 0b111});

  // even part of Z^4
  Signature cl111(1, 1, 1);
  BladeSubspace z4 = centralizer_closed_form(cl111, CTarget::Z4);
  CHECK(centralizer_closed_form(cl111, CTarget::Zcq0) == z4.even_part());
}

TEST_CASE("target names round-trip and Zc4 stays unnamed") {
  for (CTarget t : all_ctargets()) CHECK(parse_ctarget(ctarget_name(t)) == t);
  CHECK(parse_ctarget("Z^23bar") == CTarget::Zq23);
  CHECK_THROWS_AS(parse_ctarget("Zc4"), std::invalid_argument);
}

TEST_CASE("closed forms equal brute force for every target, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (auto [p, q, r] : signature_splits(n)) {
      Signature sig(p, q, r);
      for (CTarget target : all_ctargets()) {
        BruteSpec spec = brute_spec(sig, target);
        LinearSubspace brute = centralizer_bruteforce(spec.space, spec.kind);
        LinearSubspace closed = centralizer_closed_form(sig, target).to_linear();
        INFO("Cl(", sig.str(), ") target ", ctarget_name(target));
        CHECK(brute == closed);
      }
    }
  }
}

TEST_CASE("tilde centralizer follows the grade-parity rule") {
  for (auto [p, q, r] : {std::array{1, 1, 1}, std::array{0, 0, 3}, std::array{2, 0, 2}}) {
    Signature sig(p, q, r);
    for (int m = 1; m <= 4; ++m) {
      LinearSubspace tilde = centralizer_bruteforce(sub_grade(sig, m), CentralizerKind::Tilde);
      LinearSubspace expected = centralizer_bruteforce(
          sub_grade(sig, m), m % 2 == 0 ? CentralizerKind::Plain : CentralizerKind::Check);
      CHECK(tilde == expected);
    }
  }
}

TEST_CASE("monotonicity and the pair sum rule") {
  for (auto [p, q, r] : {std::array{1, 0, 2}, std::array{0, 2, 1}, std::array{2, 2, 0}}) {
    Signature sig(p, q, r);
    // s smaller => centralizer larger
    LinearSubspace z1 = centralizer_bruteforce(sub_grade(sig, 1), CentralizerKind::Plain);
    LinearSubspace z_parity = centralizer_bruteforce(sub_parity(sig, 1), CentralizerKind::Plain);
    CHECK(z1.contains(z_parity));

    // Z^{klbar} = Z^{kbar} cap Z^{lbar}, against brute force
    for (auto [k, l] : {std::pair{2, 3}, std::pair{0, 2}, std::pair{1, 2}}) {
      LinearSubspace pair =
          centralizer_bruteforce(sub_qt_sum(sig, k, l), CentralizerKind::Plain);
      LinearSubspace meet =
          intersect(centralizer_bruteforce(sub_qt(sig, k), CentralizerKind::Plain),
                    centralizer_bruteforce(sub_qt(sig, l), CentralizerKind::Plain));
      CHECK(pair == meet);
    }
  }
}

TEST_CASE("centralizer elements commute with the subspace (spot check)") {
  Signature sig(1, 1, 1);
  BladeSubspace grade2 = sub_grade(sig, 2);
  LinearSubspace z2 = centralizer_bruteforce(grade2, CentralizerKind::Plain);
  for (int i = 0; i < z2.dim(); ++i) {
    std::vector<Rational> row(z2.ambient_dim());
    for (int j = 0; j < z2.ambient_dim(); ++j) row[j] = z2.basis().at(i, j);
    Multivector x = Multivector::from_vector(sig, row);
    for (Blade v : grade2.blades()) {
      Multivector bv = Multivector::basis(sig, v);
      CHECK(x * bv == bv * x);
    }
  }
}
