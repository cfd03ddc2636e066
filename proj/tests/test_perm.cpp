#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hg/errors.hpp"
#include "hg/perm.hpp"

using namespace hg;
using hgtest::P;

TEST_SUITE_BEGIN("perm");

TEST_CASE("compose applies the right factor first") {
  const Perm id = Perm::identity(8);
  const Perm p = P("(1,2,3,4)(5,6,7,8)", 8);
  CHECK(compose(id, p) == p);
  CHECK(compose(p, id) == p);

  // squaring a pair of 4-cycles
  CHECK(compose(p, p) == P("(1,3)(2,4)(5,7)(6,8)", 8));

  // point chase through r_2 s_2 t: 1 -> 7 -> 6 -> 2
  const Perm r2 = P("(1,3)(2,6)(4,8)(5,7)", 8);
  const Perm s2 = P("(1,4)(2,5)(3,8)(6,7)", 8);
  const Perm t = P("(1,7)(2,8)(3,5)(4,6)", 8);
  CHECK(t.apply1(1) == 7);
  CHECK(s2.apply1(7) == 6);
  CHECK(r2.apply1(6) == 2);
  const Perm product = compose(r2, compose(s2, t));
  CHECK(product.apply1(1) == 2);
  CHECK(product.order() == 2);
}

TEST_CASE("compose rejects mixed degrees") {
  CHECK_THROWS_AS(compose(Perm::identity(4), Perm::identity(8)), PreconditionError);
}

TEST_CASE("inverse") {
  CHECK(Perm::identity(5).inverse() == Perm::identity(5));
  CHECK(P("(1,2,3,4)", 4).inverse() == P("(1,4,3,2)", 4));
  const Perm s3 = P("(1,7)(2,3)(4,8)(5,6)", 8);
  CHECK(s3.inverse() == s3);
  const Perm p = P("(1,2,3,4)(5,6,7,8)", 8);
  CHECK(compose(p, p.inverse()).is_identity());
}

TEST_CASE("cycle notation round-trips and normalizes") {
  CHECK(P("(1,2,3,4)(5,6,7,8)", 8).cycle_string() == "(1,2,3,4)(5,6,7,8)");
  CHECK(Perm::identity(8).cycle_string() == "()");
  CHECK(P("()", 8) == Perm::identity(8));
  CHECK(P("  ( 1 , 2 ) ( 3 , 5 ) ", 8) == P("(1,2)(3,5)", 8));
  // non-disjoint cycles compose right-to-left
  CHECK(P("(1,2)(2,3)", 3) == compose(P("(1,2)", 3), P("(2,3)", 3)));
  // cycles starting from a non-minimal point normalize on printing
  CHECK(P("(2,3,1)", 4).cycle_string() == "(1,2,3)");
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(P("", 8), ParseError);
  CHECK_THROWS_AS(P("(1,2", 8), ParseError);
  CHECK_THROWS_AS(P("(1,9)", 8), ParseError);
  CHECK_THROWS_AS(P("(0,1)", 8), ParseError);
  CHECK_THROWS_AS(P("(1,1)", 8), ParseError);
  CHECK_THROWS_AS(P("1,2", 8), ParseError);
  CHECK_THROWS_AS(P("(1 2)", 8), ParseError);
}

TEST_CASE("constructor validates bijectivity") {
  CHECK_THROWS_AS(Perm({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(Perm({0, 3}), PreconditionError);
}

TEST_CASE("order, parity, key") {
  CHECK(P("(1,2,3,4,5,6,7,8)", 8).order() == 8);
  CHECK(P("(1,2,3)(4,5)", 5).order() == 6);
  CHECK(P("(1,2)", 4).is_even() == false);
  CHECK(P("(1,2,3)", 4).is_even() == true);
  CHECK(Perm::identity(4).is_even() == true);
  CHECK(P("(1,2)", 4).key() != P("(1,3)", 4).key());
}

TEST_CASE("associativity and double inverse on random triples") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const Perm a = hgtest::random_perm(rng, 8);
    const Perm b = hgtest::random_perm(rng, 8);
    const Perm c = hgtest::random_perm(rng, 8);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(a.inverse().inverse() == a);
    CHECK(conjugate(a, b).order() == b.order());
  }
}

TEST_CASE("for_each_perm covers S_n in lexicographic order") {
  int count = 0;
  Perm prev;
  for_each_perm(4, [&](const Perm& p) {
    if (count > 0) CHECK(prev < p);
    prev = p;
    ++count;
    return true;
  });
  CHECK(count == 24);
  CHECK_THROWS_AS(for_each_perm(9, [](const Perm&) { return true; }), SizeLimitError);
}

TEST_SUITE_END();
