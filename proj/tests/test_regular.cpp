#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "hg/errors.hpp"
#include "hg/regular.hpp"

using namespace hg;
using hgtest::P;

namespace {

PermGroup paper_lambda_G() {
  return PermGroup::from_generators(
      8, {P("(1,2,3,4)(5,6,7,8)", 8), P("(1,2)(3,5)(4,6)(7,8)", 8)});
}

}  // namespace

TEST_SUITE_BEGIN("regular");

TEST_CASE("holomorph orders and the normalizer identity") {
  // |Hol(T)| = |T| * |Aut(T)|; the constructor cross-checks against the
  // normalizer scan for degree <= 8
  const std::pair<IsoType8, std::size_t> expected[] = {{IsoType8::C8, 32},
                                                       {IsoType8::C2xC4, 64},
                                                       {IsoType8::C2xC2xC2, 1344},
                                                       {IsoType8::D8, 64},
                                                       {IsoType8::Q8, 192}};
  for (const auto& [t, order] : expected) {
    const CayleyTable T = CayleyTable::order8(t);
    const PermGroup hol = holomorph(T);
    CHECK(hol.order() == order);
    CHECK(hol.order() == T.automorphisms().size() * 8);
  }
  CHECK(holomorph(CayleyTable::cyclic(1)).order() == 1);
}

TEST_CASE("Hol(Q8) = 8 * |Aut(Q8)| = 8 * 24") {
  CHECK(holomorph(CayleyTable::quaternion()).order() == 8 * 24);
}

TEST_CASE("enumerate_regular: class lengths and orbit-stabilizer") {
  const std::size_t factorial8 = 40320;
  for (IsoType8 t : all_iso_types8) {
    const RegularClass cls = enumerate_regular8(t);
    const std::size_t hol = holomorph(CayleyTable::order8(t)).order();
    CHECK(cls.members.size() * hol == factorial8);
    for (std::size_t i = 0; i + 1 < cls.members.size(); ++i)
      CHECK(cls.members[i].elements() < cls.members[i + 1].elements());
  }
  CHECK(enumerate_regular8(IsoType8::C2xC2xC2).members.size() == 30);
  CHECK(enumerate_regular8(IsoType8::Q8).members.size() == 210);
}

TEST_CASE("every class member is regular of the right type") {
  for (IsoType8 t : {IsoType8::C2xC2xC2, IsoType8::Q8}) {
    const RegularClass cls = enumerate_regular8(t);
    for (const PermGroup& m : cls.members) {
      CHECK(is_regular(m, 8));
      CHECK(order8_type(m) == t);
    }
  }
}

TEST_CASE("conjugation closure of a regular class") {
  const RegularClass cls = enumerate_regular8(IsoType8::C2xC2xC2);
  std::set<std::vector<Perm>> member_sets;
  for (const PermGroup& m : cls.members) member_sets.insert(m.elements());
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, cls.members.size() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const Perm g = hgtest::random_perm(rng, 8);
    const PermGroup conj = cls.members[pick(rng)].conjugated(g);
    CHECK(member_sets.count(conj.elements()) == 1);
  }
}

TEST_CASE("normalized_by") {
  const PermGroup lg = paper_lambda_G();
  const RegularClass cls = enumerate_regular8(IsoType8::C2xC2xC2);
  std::size_t normalized = 0;
  for (const PermGroup& m : cls.members) {
    CHECK(normalized_by(m, m));  // self-normalization
    if (normalized_by(m, lg)) ++normalized;
  }
  CHECK(normalized == 4);  // exactly four of the thirty
  CHECK_THROWS_AS(normalized_by(PermGroup::symmetric(4), PermGroup::symmetric(4)),
                  PreconditionError);  // S4 on 4 points is not regular
}

TEST_CASE("holomorph feasibility filter") {
  CHECK(holomorph_feasibility(IsoType8::C2xC2xC2, 24));
  CHECK(holomorph_feasibility(IsoType8::Q8, 24));
  CHECK_FALSE(holomorph_feasibility(IsoType8::C8, 24));   // |Hol| = 32
  CHECK_FALSE(holomorph_feasibility(IsoType8::C2xC4, 24));
  CHECK_FALSE(holomorph_feasibility(IsoType8::D8, 24));
  for (IsoType8 t : all_iso_types8) CHECK(holomorph_feasibility(t, 1));
  CHECK_THROWS_AS(holomorph_feasibility(IsoType8::C8, 0), PreconditionError);
}

TEST_CASE("transitive subgroup probe") {
  const PermGroup lg = paper_lambda_G();  // a transitive S4 in S_8

  // Hol(Q8) certifiably contains no transitive copy of S4
  const PermGroup hol_q8 = holomorph(CayleyTable::quaternion());
  CHECK_FALSE(has_transitive_iso_subgroup(hol_q8, 24, lg));

  // Hol(C2^3) does (lambda(G) itself is one)
  const PermGroup hol_c23 = holomorph(CayleyTable::order8(IsoType8::C2xC2xC2));
  CHECK(has_transitive_iso_subgroup(hol_c23, 24, lg));

  // probe order exceeding |H|
  CHECK_FALSE(has_transitive_iso_subgroup(PermGroup::trivial(8), 24, lg));
  CHECK_FALSE(has_transitive_iso_subgroup(hol_q8, 23, PermGroup::trivial(8)));
}

TEST_CASE("Hol(Q8) transitive order-24 subgroups exist but none is S_4") {
  const PermGroup hol_q8 = holomorph(CayleyTable::quaternion());
  const auto found = transitive_subgroups_of_order(hol_q8, 24, 3);
  CHECK(found.size() == 16);  // observed count, probed up to 3 generators
  const PermGroup s4 = PermGroup::symmetric(4);
  for (const PermGroup& S : found) {
    CHECK(S.is_transitive());
    CHECK(S.order() == 24);
    CHECK(isomorphisms(S, s4).empty());
  }
}

TEST_CASE("normalization is equivalent to holomorph membership") {
  // For 50 sampled (N, L): L normalizes N iff the relabeled copy of L lies
  // in Hol(T), T the abstract table of N under the point identification
  // sending N to its left-regular representation.
  std::mt19937 rng(99);
  const RegularClass c23 = enumerate_regular8(IsoType8::C2xC2xC2);
  const RegularClass q8 = enumerate_regular8(IsoType8::Q8);
  std::uniform_int_distribution<std::size_t> pick23(0, c23.members.size() - 1);
  std::uniform_int_distribution<std::size_t> pickq8(0, q8.members.size() - 1);
  int true_cases = 0, false_cases = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const PermGroup& N = (trial % 2 == 0) ? c23.members[pick23(rng)] : q8.members[pickq8(rng)];
    const auto [table, m] = abstract_table(N);
    const PermGroup hol = holomorph(table);
    PermGroup L;
    if (trial % 4 < 2) {
      // sample inside the normalizer so both outcomes occur
      const PermGroup norm = normalizer_in_sym(N);
      std::uniform_int_distribution<std::size_t> pe(0, norm.order() - 1);
      L = PermGroup::from_generators(8, {norm.elements()[pe(rng)], norm.elements()[pe(rng)]});
    } else {
      L = PermGroup::from_generators(8, {hgtest::random_perm(rng, 8), hgtest::random_perm(rng, 8)});
    }
    const bool direct = normalized_by(N, L);
    bool via_holomorph = true;
    for (const Perm& l : L.elements())
      if (!hol.contains(conjugate(m, l))) {
        via_holomorph = false;
        break;
      }
    CHECK(direct == via_holomorph);
    (direct ? true_cases : false_cases)++;
  }
  CHECK(true_cases > 0);
  CHECK(false_cases > 0);
}

TEST_SUITE_END();
