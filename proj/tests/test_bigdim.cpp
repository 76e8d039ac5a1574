// Above n = 8 the kernel machinery runs on the sparse operator path; this
// binary raises the dimension cap before anything touches it.

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdlib>

#include "ga/lie.hpp"
#include "ga/parse.hpp"
#include "oracle.hpp"

using namespace ga;

int main(int argc, char** argv) {
  setenv("GA_N_MAX", "10", 1);
  return doctest::Context(argc, argv).run();
}

TEST_CASE("cap override") {
  CHECK(Signature::max_dimension() == 10);
  CHECK_THROWS_AS(Signature(11, 0, 0), std::invalid_argument);
}

TEST_CASE("sparse and dense equation operators agree") {
  Signature sig(1, 1, 1);
  for (Blade v = 0; v < sig.blade_count(); ++v)
    for (CentralizerKind kind :
         {CentralizerKind::Plain, CentralizerKind::Check, CentralizerKind::Tilde})
      CHECK(centralizer_equation_operator(v, kind, sig).dense() ==
            centralizer_equation_matrix(v, kind, sig));
}

TEST_CASE("products at n = 9 match the index-list oracle on samples") {
  Signature sig(3, 2, 4);
  Rng rng(61);
  for (int i = 0; i < 20; ++i) {
    Blade a = Blade(rng.next() % sig.blade_count());
    Blade b = Blade(rng.next() % sig.blade_count());
    auto got = blade_product(a, b, sig);
    auto want = testing::oracle_blade_product(testing::blade_to_indices(a, sig.n()),
                                              testing::blade_to_indices(b, sig.n()), sig);
    CHECK(got.coeff == want.coeff);
    if (want.coeff != 0) CHECK(got.blade == testing::indices_to_blade(want.indices));
  }
}

TEST_CASE("brace blade syntax round-trips at n = 10") {
  Signature sig(5, 0, 5);
  Multivector m = parse_multivector(sig, "2*e{1,10} - 1/3*e{2,6,7}");
  CHECK(parse_multivector(sig, m.str()) == m);
  CHECK(m.str().find('{') != std::string::npos);
}

TEST_CASE("centralizer brute force at n = 9 still matches the closed form") {
  Signature sig(2, 0, 7);
  LinearSubspace z = centralizer_bruteforce(sub_grade(sig, 1), CentralizerKind::Plain);
  CHECK(z == sub_center(sig).to_linear());
  CHECK(z.dim() == 65);
  LinearSubspace zc = centralizer_bruteforce(sub_grade(sig, 1), CentralizerKind::Check);
  CHECK(zc == sub_lambda_full(sig).to_linear());
}
