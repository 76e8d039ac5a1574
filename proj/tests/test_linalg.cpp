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

TEST_CASE("rref canonicalizes and ranks") {
  RationalMatrix m(3, 3);
  m.at(0, 0) = 2; m.at(0, 1) = 4; m.at(0, 2) = 2;
  m.at(1, 0) = 1; m.at(1, 1) = 2; m.at(1, 2) = 1;
  m.at(2, 1) = 1; m.at(2, 2) = 5;
  CHECK(m.rref() == 2);
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(0, 2) == -9);
  CHECK(m.at(1, 1) == 1);
  CHECK(m.at(1, 2) == 5);
}

TEST_CASE("kernel basics") {
  CHECK(kernel(RationalMatrix::identity(4)).dim() == 0);
  CHECK(kernel(RationalMatrix(2, 2)).dim() == 2);

  // x + y + z = 0 has a 2-dimensional kernel
  RationalMatrix m(1, 3);
  m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 2) = 1;
  LinearSubspace k = kernel(m);
  CHECK(k.dim() == 2);
  for (int i = 0; i < k.dim(); ++i) {
    Rational sum = 0;
    for (int j = 0; j < 3; ++j) sum += k.basis().at(i, j);
    CHECK(is_zero(sum));
  }
}

TEST_CASE("kernel of mul_operator is consistent on basis vectors") {
  Signature sig(1, 0, 2);
  Multivector t = mv(sig, "e2 + e12 - 2*e23");
  RationalMatrix m = mul_operator(t, Side::Left);
  LinearSubspace k = kernel(m);
  for (Blade b = 0; b < sig.blade_count(); ++b) {
    std::vector<Rational> v(sig.blade_count(), Rational(0));
    v[b] = 1;
    bool killed = (t * Multivector::basis(sig, b)).is_zero();
    CHECK(k.contains(v) == killed);
  }
}

TEST_CASE("intersection, sum and containment") {
  RationalMatrix a(2, 3);
  a.at(0, 0) = 1; a.at(1, 1) = 1;
  RationalMatrix b(1, 3);
  b.at(0, 0) = 1; b.at(0, 1) = 1;
  LinearSubspace A(3, a), B(3, b);
  LinearSubspace meet = intersect(A, B);
  CHECK(meet == B);
  CHECK(subspace_sum(A, B) == A);
  CHECK(A.contains(B));
  CHECK(!B.contains(A));
  CHECK(intersect(LinearSubspace::zero_subspace(3), A).dim() == 0);
  CHECK_THROWS_AS(intersect(A, LinearSubspace::full(4)), std::invalid_argument);
}

TEST_CASE("subspace equality is RREF equality") {
  RationalMatrix a(2, 3);
  a.at(0, 0) = 1; a.at(0, 1) = 2;
  a.at(1, 1) = 1; a.at(1, 2) = 1;
  RationalMatrix b(2, 3);  // same span, different presentation
  b.at(0, 0) = 2; b.at(0, 1) = 4;
  b.at(1, 0) = 1; b.at(1, 1) = 3; b.at(1, 2) = 1;
  CHECK(LinearSubspace(3, a) == LinearSubspace(3, b));
}

TEST_CASE("mul_operator fixed matrices") {
  Signature cl001(0, 0, 1);
  RationalMatrix m = mul_operator(mv(cl001, "e1"), Side::Left);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == 0);

  Signature cl100(1, 0, 0);
  m = mul_operator(mv(cl100, "e1"), Side::Left);
  CHECK(m.at(0, 0) == 0);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 1);
  CHECK(m.at(1, 1) == 0);

  Signature sig(1, 1, 1);
  CHECK(mul_operator(Multivector::scalar(sig, 1), Side::Left) ==
        RationalMatrix::identity(int(sig.blade_count())));
}

TEST_CASE("inverse fixed examples") {
  Signature cl001(0, 0, 1);
  CHECK(*inverse(mv(cl001, "2")) == mv(cl001, "1/2"));
  CHECK(*inverse(mv(cl001, "1 + e1")) == mv(cl001, "1 - e1"));
  CHECK(!inverse(mv(cl001, "e1")));
  CHECK(!inverse(Multivector::zero(cl001)));
}

TEST_CASE("inverse round-trips on random invertible elements") {
  for (auto [p, q, r] : {std::array{1, 1, 1}, std::array{0, 0, 3}, std::array{2, 1, 0},
                         std::array{1, 0, 3}}) {
    Signature sig(p, q, r);
    for (int i = 0; i < 200; ++i) {
      SampleInfo s = sample_invertible(sig, derive_seed(99, sig.str() + std::to_string(i)), 3);
      Multivector inv = *inverse(s.mv);
      Multivector e = Multivector::scalar(sig, 1);
      CHECK(inv * s.mv == e);
      CHECK(s.mv * inv == e);
      CHECK(inverse(s.mv.reversion()).has_value());
      CHECK(inverse(s.mv.grade_involution()).has_value());
    }
  }
}

TEST_CASE("restrict_kernel matches kernel of a stacked system") {
  Signature sig(1, 0, 1);
  Multivector t = mv(sig, "1 + e1 + e12");
  RationalMatrix left = mul_operator(t, Side::Left);
  LinearSubspace a = restrict_kernel(LinearSubspace::full(int(sig.blade_count())), left);
  CHECK(a == kernel(left));
}

TEST_CASE("sample_invertible is deterministic and bounded") {
  Signature sig(1, 1, 1);
  SampleInfo a = sample_invertible(sig, 12345, 3);
  SampleInfo b = sample_invertible(sig, 12345, 3);
  CHECK(a.mv == b.mv);
  CHECK(a.rejections == b.rejections);
  for (const auto& [blade, c] : a.mv.coeffs()) {
    CHECK(abs(c) <= 3);
  }
  CHECK(inverse(a.mv).has_value());
}
