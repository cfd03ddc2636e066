#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hg/errors.hpp"
#include "hg/group_algebra.hpp"
#include "hg/splitting_field.hpp"

using namespace hg;
using hgtest::P;

namespace {

FieldElt a(int i) { return FieldElt::alpha(i); }
FieldElt b(int i) { return FieldElt::b(i); }

FieldElt random_poly(std::mt19937& rng, int max_terms = 5) {
  std::uniform_int_distribution<int> e1(0, 2), e2(0, 3), e3(0, 3), e4(0, 4), coef(-3, 3),
      nterms(1, max_terms);
  FieldElt x;
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    FieldElt mono = FieldElt::alpha_monomial(e1(rng), e2(rng), e3(rng), e4(rng));
    x += mono * FieldElt::from_int(coef(rng));
  }
  return x;
}

}  // namespace

TEST_SUITE_BEGIN("splitting_field");

TEST_CASE("the quartic vanishes on every root") {
  for (int i = 1; i <= 4; ++i) {
    const FieldElt x = a(i);
    const FieldElt p = x.pow(4) - b(1) * x.pow(3) + b(2) * x.pow(2) - b(3) * x + b(4);
    CHECK(p.is_zero());
  }
}

TEST_CASE("elementary symmetric functions equal the coefficients") {
  CHECK(a(1) + a(2) + a(3) + a(4) == b(1));
  FieldElt e2;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) e2 += a(i) * a(j);
  CHECK(e2 == b(2));
  FieldElt e3;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k) e3 += a(i) * a(j) * a(k);
  CHECK(e3 == b(3));
  CHECK(a(1) * a(2) * a(3) * a(4) == b(4));
}

TEST_CASE("published expansion of a2^2 a3 + a3^2 a4 + a4^2 a2") {
  const FieldElt lhs = a(2).pow(2) * a(3) + a(3).pow(2) * a(4) + a(4).pow(2) * a(2);
  CHECK(lhs == reference_first_expansion());
  const FieldElt rhs = a(2).pow(2) * a(4) + a(3).pow(2) * a(2) + a(4).pow(2) * a(3);
  CHECK(rhs == reference_second_expansion());
  CHECK_FALSE((lhs - rhs).is_zero());
  // the difference survives specialization of the coefficients
  const std::array<Rational, 4> sample{Rational(0), Rational(0), Rational(0), Rational(-1)};
  CHECK_FALSE((lhs - rhs).evaluate_b(sample).is_zero());
  // sum of the two must be symmetric-ish sanity: acting by (3,4) swaps them
  CHECK(galois_act(P("(3,4)", 4), lhs) == rhs);
}

TEST_CASE("normal form is unique: rebuilding from the basis is the identity") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 30; ++trial) {
    const FieldElt x = random_poly(rng);
    FieldElt rebuilt;
    for (const auto& [m, c] : x.terms())
      rebuilt += FieldElt::from_coef(c) * FieldElt::alpha_monomial(0, m[0], m[1], m[2]);
    CHECK(rebuilt == x);
    for (const auto& [m, c] : x.terms()) {
      CHECK(m[0] <= 1);
      CHECK(m[1] <= 2);
      CHECK(m[2] <= 3);
    }
  }
}

TEST_CASE("ring axioms hold after normalization on random inputs") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    const FieldElt x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    CHECK(x * FieldElt::one() == x);
  }
}

TEST_CASE("the basis has 24 monomials") {
  int count = 0;
  for (int i2 = 0; i2 <= 1; ++i2)
    for (int i3 = 0; i3 <= 2; ++i3)
      for (int i4 = 0; i4 <= 3; ++i4) {
        ++count;
        const FieldElt m = FieldElt::alpha_monomial(0, i2, i3, i4);
        CHECK(m.terms().size() == 1);  // already reduced
      }
  CHECK(count == 24);
}

TEST_CASE("galois_act is trivial for the identity and fixes invariants") {
  std::mt19937 rng(555);
  const FieldElt x = random_poly(rng);
  CHECK(galois_act(Perm::identity(4), x) == x);
  // (2,3) fixes alpha_1
  CHECK(galois_act(P("(2,3)", 4), a(1)) == a(1));
  // (1,3) sends alpha_1 to alpha_3
  CHECK(galois_act(P("(1,3)", 4), a(1)) == a(3));
  // b's are fixed by everything
  for (int i = 1; i <= 4; ++i) CHECK(galois_act(P("(1,2,3,4)", 4), b(i)) == b(i));
}

TEST_CASE("galois_act is a ring homomorphism and a group action") {
  std::mt19937 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const Perm g = hgtest::random_perm(rng, 4);
    const Perm h = hgtest::random_perm(rng, 4);
    const FieldElt x = random_poly(rng, 3);
    const FieldElt y = random_poly(rng, 3);
    CHECK(galois_act(g, x * y) == galois_act(g, x) * galois_act(g, y));
    CHECK(galois_act(g, x + y) == galois_act(g, x) + galois_act(g, y));
    CHECK(galois_act(compose(g, h), x) == galois_act(g, galois_act(h, x)));
  }
}

TEST_CASE("square root of the discriminant") {
  const FieldElt delta = sqrt_disc();
  // transpositions negate, even permutations fix
  for (const char* tr : {"(1,2)", "(1,3)", "(1,4)", "(2,3)", "(2,4)", "(3,4)"})
    CHECK(galois_act(P(tr, 4), delta) == -delta);
  for (const char* cyc : {"(1,2,3)", "(2,3,4)", "(1,3,4)"})
    CHECK(galois_act(P(cyc, 4), delta) == delta);

  const FieldElt disc = delta * delta;
  CHECK(disc.in_base_field());
  for_each_perm(4, [&](const Perm& g) {
    CHECK(galois_act(g, disc) == disc);
    return true;
  });
}

TEST_CASE("canonical serialization") {
  CHECK(FieldElt::zero().to_string() == "0");
  CHECK(FieldElt::one().to_string() == "1");
  CHECK(b(1).to_string() == "b1");
  CHECK(a(4).pow(3).to_string() == "a4^3");
  CHECK(a(1).to_string() == "-a4 - a3 - a2 + b1");
  CHECK((a(2) * FieldElt::from_rational(Rational(1) / 2)).to_string() == "1/2*a2");
  CHECK((b(1) * b(1) - FieldElt::from_int(2)).to_string() == "b1^2 - 2");
  CHECK(((b(1) - b(2)) * a(4)).to_string() == "(b1 - b2)*a4");
  CHECK(reference_first_expansion().to_string() ==
        "a4^3 + a4^2*a2 - b1*a4^2 + a4*a3^2 - a4*a3*a2 + b2*a4 - a3^2*a2 + b1*a3*a2 - b3");
  CHECK(reference_second_expansion().to_string() ==
        "-a4^3 - a4^2*a2 + b1*a4^2 - a4*a3^2 - a4*a3*a2 + b1*a4*a3 + b1*a4*a2 - b2*a4 + a3^2*a2");
}

TEST_CASE("coefficient polynomial arithmetic and printing") {
  const CoefPoly p = CoefPoly::b(1) * CoefPoly::b(3) + CoefPoly::from_int(2) * CoefPoly::b(2) -
                     CoefPoly::from_rational(Rational(5));
  CHECK(p.to_string() == "b1*b3 + 2*b2 - 5");
  CHECK((p - p).is_zero());
  CHECK(CoefPoly().to_string() == "0");
  CHECK(CoefPoly::from_int(-1).to_string() == "-1");
  const std::array<Rational, 4> vals{Rational(1), Rational(2), Rational(3), Rational(4)};
  CHECK(p.evaluate(vals) == Rational(1) * 3 + 2 * 2 - 5);
  CHECK_FALSE(p.is_constant());
  CHECK(CoefPoly::from_int(7).constant_value() == 7);
}

TEST_CASE("alpha and exponent validation") {
  CHECK_THROWS_AS(FieldElt::alpha(0), PreconditionError);
  CHECK_THROWS_AS(FieldElt::alpha(5), PreconditionError);
  CHECK_THROWS_AS(FieldElt::alpha_monomial(-1, 0, 0, 0), PreconditionError);
  CHECK_THROWS_AS(FieldElt::b(0), PreconditionError);
  CHECK_THROWS_AS(galois_act(Perm::identity(8), FieldElt::one()), PreconditionError);
}

TEST_SUITE_END();
