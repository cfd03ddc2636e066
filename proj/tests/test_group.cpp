#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hg/errors.hpp"
#include "hg/group.hpp"
#include "hg/tables.hpp"

using namespace hg;
using hgtest::P;

namespace {

PermGroup paper_lambda_G() {
  return PermGroup::from_generators(
      8, {P("(1,2,3,4)(5,6,7,8)", 8), P("(1,2)(3,5)(4,6)(7,8)", 8)});
}

PermGroup N(int which) {
  switch (which) {
    case 1:
      return PermGroup::from_generators(8, {P("(1,3)(2,4)(5,7)(6,8)", 8), P("(1,8)(2,7)(3,6)(4,5)", 8),
                                            P("(1,7)(2,8)(3,5)(4,6)", 8)});
    case 2:
      return PermGroup::from_generators(8, {P("(1,3)(2,6)(4,8)(5,7)", 8), P("(1,4)(2,5)(3,8)(6,7)", 8),
                                            P("(1,7)(2,8)(3,5)(4,6)", 8)});
    case 3:
      return PermGroup::from_generators(8, {P("(1,6)(2,4)(3,8)(5,7)", 8), P("(1,7)(2,3)(4,8)(5,6)", 8),
                                            P("(1,8)(2,5)(3,6)(4,7)", 8)});
    default:
      return PermGroup::from_generators(8, {P("(1,3)(2,5)(4,7)(6,8)", 8), P("(1,7)(2,6)(3,4)(5,8)", 8),
                                            P("(1,6)(2,7)(3,8)(4,5)", 8)});
  }
}

}  // namespace

TEST_SUITE_BEGIN("group");

TEST_CASE("generate: empty, lambda(G), N_1") {
  CHECK(generate_closure(8, {}) == std::vector<Perm>{Perm::identity(8)});

  const PermGroup lg = paper_lambda_G();
  CHECK(lg.order() == 24);

  const PermGroup n1 = N(1);
  CHECK(n1.order() == 8);
  for (const Perm& g : n1.elements()) CHECK((g.is_identity() || g.order() == 2));

  CHECK_THROWS_AS(generate_closure(8, {P("(1,2,3,4,5,6,7,8)", 8)}, 5), SizeLimitError);
}

TEST_CASE("Lagrange and element orders") {
  const std::size_t factorial8 = 40320;
  for (const PermGroup& H : {paper_lambda_G(), N(1), N(3), PermGroup::symmetric(4)}) {
    std::size_t fact = 1;
    for (int i = 2; i <= H.degree(); ++i) fact *= static_cast<std::size_t>(i);
    CHECK(fact % H.order() == 0);
    if (H.degree() == 8) CHECK(factorial8 % H.order() == 0);
    for (const Perm& g : H.elements()) CHECK(H.order() % static_cast<std::size_t>(g.order()) == 0);
    CHECK(H.validate_closure());
  }
}

TEST_CASE("is_regular") {
  CHECK(is_regular(PermGroup::trivial(1), 1));
  CHECK(is_regular(N(1), 8));
  CHECK_FALSE(is_regular(paper_lambda_G(), 8));  // order 24 != 8
  CHECK_FALSE(is_regular(PermGroup::from_generators(8, {P("(1,2)", 8)}), 8));
}

TEST_CASE("normalizer_in_sym") {
  const PermGroup s3 = PermGroup::symmetric(3);
  CHECK(normalizer_in_sym(s3).same_elements(s3));

  // |Norm(N_1)| must equal |Hol(C2^3)| = 8 * |GL(3,2)| = 8 * 168
  const std::size_t gl32 = (8 - 1) * (8 - 2) * (8 - 4);
  CHECK(gl32 == 168);
  const PermGroup norm1 = normalizer_in_sym(N(1));
  CHECK(norm1.order() == 8 * gl32);

  const PermGroup lg = paper_lambda_G();
  for (int i = 1; i <= 4; ++i) CHECK(normalizer_in_sym(N(i)).contains_all(lg));
}

TEST_CASE("centralizer_in_sym") {
  CHECK(centralizer_in_sym(PermGroup::trivial(4)).order() == 24);

  const PermGroup n3 = N(3);
  const PermGroup cent3 = centralizer_in_sym(n3);
  CHECK(cent3.contains(Perm::identity(8)));
  CHECK(cent3.contains_all(n3));  // abelian regular group centralizes itself
  CHECK(cent3.same_elements(n3));

  // s tau^-1 s tau is the identity, hence lies in the centralizer
  const Perm s = P("(1,7)(2,8)(3,5)(4,6)", 8);
  const Perm tau = P("(1,2,3,4)(5,6,7,8)", 8);
  const Perm coboundary = compose(compose(compose(s, tau.inverse()), s), tau);
  CHECK(coboundary.is_identity());
  CHECK(cent3.contains(coboundary));
}

TEST_CASE("normalizer contains centralizer contains center") {
  for (const PermGroup& H : {N(1), paper_lambda_G(), CayleyTable::quaternion().right_regular()}) {
    const PermGroup norm = normalizer_in_sym(H);
    const PermGroup cent = centralizer_in_sym(H);
    CHECK(norm.contains_all(cent));
    CHECK(cent.contains_all(center(H).intersection(cent)));
    CHECK(cent.intersection(H).same_elements(center(H)));
  }
}

TEST_CASE("subgroups: trivial, N_1, Q8") {
  const auto trivial_list = subgroups(PermGroup::trivial(3));
  REQUIRE(trivial_list.size() == 1);
  CHECK(trivial_list[0].order() == 1);

  const PermGroup n1 = N(1);
  const auto subs1 = subgroups(n1);
  CHECK(subs1.size() == 16);  // 1 + 7 + 7 + 1 subspaces of F_2^3
  CHECK(subs1.size() == hgtest::brute_force_subgroup_count(n1));
  CHECK(subs1.front().order() == 1);
  CHECK(subs1.back().same_elements(n1));

  const PermGroup q8 = CayleyTable::quaternion().right_regular();
  const auto subsq = subgroups(q8);
  CHECK(subsq.size() == 6);
  CHECK(subsq.size() == hgtest::brute_force_subgroup_count(q8));

  CHECK_THROWS_AS(subgroups(PermGroup::symmetric(5)), SizeLimitError);
}

TEST_CASE("subgroup list is closed under intersection") {
  for (const PermGroup& H : {N(1), PermGroup::symmetric(4), CayleyTable::quaternion().right_regular()}) {
    const auto subs = subgroups(H);
    for (const PermGroup& A : subs)
      for (const PermGroup& B : subs) {
        const PermGroup I = A.intersection(B);
        CHECK(std::any_of(subs.begin(), subs.end(),
                          [&](const PermGroup& S) { return S.same_elements(I); }));
      }
  }
}

TEST_CASE("normalizer elements permute the subgroup list") {
  const PermGroup n1 = N(1);
  const auto subs = subgroups(n1);
  const PermGroup norm = normalizer_in_sym(n1);
  std::mt19937 rng(777);
  std::uniform_int_distribution<std::size_t> pick(0, norm.order() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    const Perm g = norm.elements()[pick(rng)];
    std::set<std::vector<Perm>> orig, conj;
    for (const PermGroup& S : subs) {
      orig.insert(S.elements());
      conj.insert(S.conjugated(g).elements());
    }
    CHECK(orig == conj);
  }
}

TEST_CASE("isomorphisms") {
  const auto triv = isomorphisms(PermGroup::trivial(2), PermGroup::trivial(2));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].at(Perm::identity(2)) == Perm::identity(2));

  CHECK(isomorphisms(N(3), N(4)).size() == 168);  // |GL(3,2)|
  CHECK(isomorphisms(N(1), CayleyTable::quaternion().right_regular()).empty());

  // symmetry and composition with the inverse map
  const PermGroup a = N(1), b = N(2);
  const auto ab = isomorphisms(a, b);
  const auto ba = isomorphisms(b, a);
  CHECK(ab.empty() == ba.empty());
  REQUIRE(!ab.empty());
  const GroupMap& phi = ab.front();
  GroupMap inv;
  for (const auto& [x, y] : phi) inv[y] = x;
  for (const Perm& x : a.elements()) CHECK(inv.at(phi.at(x)) == x);

  // every returned map is a homomorphism on the full table
  for (const Perm& x : a.elements())
    for (const Perm& y : a.elements())
      CHECK(phi.at(compose(x, y)) == compose(phi.at(x), phi.at(y)));
}

TEST_CASE("order8_type") {
  CHECK(order8_type(N(1)) == IsoType8::C2xC2xC2);
  CHECK(order8_type(PermGroup::from_generators(8, {P("(1,2,3,4,5,6,7,8)", 8)})) == IsoType8::C8);
  CHECK(order8_type(CayleyTable::quaternion().right_regular()) == IsoType8::Q8);
  CHECK(order8_type(CayleyTable::dihedral(4).right_regular()) == IsoType8::D8);
  CHECK(order8_type(CayleyTable::order8(IsoType8::C2xC4).right_regular()) == IsoType8::C2xC4);
  CHECK_THROWS_AS(order8_type(PermGroup::trivial(8)), PreconditionError);

  // Q8 regular representation has a single involution
  const PermGroup q8reg = CayleyTable::quaternion().right_regular();
  int involutions = 0;
  for (const Perm& g : q8reg.elements())
    if (g.order() == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("minimal_generators finds small generating sets") {
  CHECK(minimal_generators(PermGroup::from_generators(8, {P("(1,2,3,4,5,6,7,8)", 8)})).size() == 1);
  CHECK(minimal_generators(PermGroup::symmetric(4)).size() == 2);
  CHECK(minimal_generators(N(1)).size() == 3);
  for (const PermGroup& H : {N(1), PermGroup::symmetric(4)})
    CHECK(PermGroup::from_generators(H.degree(), minimal_generators(H)).same_elements(H));
}

TEST_SUITE_END();
