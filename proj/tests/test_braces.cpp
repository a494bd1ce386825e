#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endobrace/brace.hpp"
#include "endobrace/zoo.hpp"

using namespace endobrace;

TEST_CASE("circle operation special cases") {
  auto d4 = build_dihedral(8);

  // zero endomorphism: circle equals dot
  auto trivial = circle_from_family(RegularFamily(d4, zero_map(d4), -1));
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h) CHECK(trivial.circ(g, h) == d4->mul(g, h));
  CHECK(trivial.verified.circle_is_group);
  CHECK(trivial.verified.left_brace_axiom);
  CHECK(trivial.verified.bi_skew);

  // identity endomorphism, negative sign: circle is the reversed product
  auto reversed = circle_from_family(RegularFamily(d4, identity_map(d4), -1));
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h) CHECK(reversed.circ(g, h) == d4->mul(h, g));
  CHECK(reversed.verified.bi_skew);

  // identity endomorphism, positive sign on a class-two group:
  // g o h = g * [g, h] * h
  auto twisted = circle_from_family(RegularFamily(d4, identity_map(d4), +1));
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h)
      CHECK(twisted.circ(g, h) == d4->mul(d4->mul(g, d4->commutator(g, h)), h));
}

TEST_CASE("construction refuses families that are not subgroups") {
  auto d16 = build_dihedral(16);
  CHECK_THROWS_AS(circle_from_family(RegularFamily(d16, identity_map(d16), +1)),
                  hypothesis_error);
  // the unchecked builder still reports flags
  auto raw = brace_from_family(RegularFamily(d16, identity_map(d16), +1));
  CHECK_FALSE((raw.verified.circle_is_group && raw.verified.left_brace_axiom));
}

TEST_CASE("circle inverses") {
  auto d4 = build_dihedral(8);
  auto trivial = circle_from_family(RegularFamily(d4, zero_map(d4), -1));
  for (int g = 0; g < 8; ++g) CHECK(circle_inverse(trivial, g) == d4->inv(g));
  CHECK(circle_inverse(trivial, 0) == 0);

  auto reversed = circle_from_family(RegularFamily(d4, identity_map(d4), -1));
  for (int g = 0; g < 8; ++g) CHECK(circle_inverse(reversed, g) == d4->inv(g));

  // closed form matches the table search for every admitted family
  auto q8 = build_quaternion(8);
  auto gens = find_generating_set(*q8, 3);
  for_each_endomorphism(q8, *gens, [&](const GroupMap& psi) {
    auto p = classify(q8, psi);
    for (int eps : {-1, +1}) {
      if (!p.central_for(eps)) continue;
      auto b = circle_from_family(RegularFamily(q8, psi, eps));
      for (int g = 0; g < 8; ++g) {
        int bar = circle_inverse(b, g);
        CHECK(b.circ(g, bar) == 0);
        CHECK(b.circ(bar, g) == 0);
      }
    }
  });
}

TEST_CASE("mutating the circle table breaks the axioms") {
  auto d4 = build_dihedral(8);
  auto b = circle_from_family(RegularFamily(d4, zero_map(d4), -1));
  REQUIRE(verify_skew_brace(b));
  std::swap(b.circle[1 * 8 + 2], b.circle[1 * 8 + 3]);
  CHECK_FALSE(verify_skew_brace(b));
}

TEST_CASE("nu is a homomorphism onto the family") {
  for (auto g : {build_dihedral(8), build_cyclic(6), build_quaternion(8)}) {
    auto gens = find_generating_set(*g, 3);
    for_each_endomorphism(g, *gens, [&](const GroupMap& psi) {
      auto p = classify(g, psi);
      for (int eps : {-1, +1}) {
        if (!p.central_for(eps)) continue;
        RegularFamily f(g, psi, eps);
        auto b = circle_from_family(f);
        for (int x = 0; x < g->order(); ++x) {
          for (int y = 0; y < g->order(); ++y) {
            CHECK(f.nu(b.circ(x, y)) == perm_compose(f.nu(x), f.nu(y)));
          }
        }
      }
    });
  }
}

TEST_CASE("theorem equivalences over a class-three sweep") {
  auto d16 = build_dihedral(16);
  auto gens = find_generating_set(*d16, 3);
  int admitted_neg = 0, admitted_pos = 0;
  for_each_endomorphism(d16, *gens, [&](const GroupMap& psi) {
    auto p = classify(d16, psi);
    {
      auto b = brace_from_family(RegularFamily(d16, psi, -1));
      const bool bi = b.verified.circle_is_group && b.verified.left_brace_axiom &&
                      b.verified.bi_skew;
      CHECK(bi == p.neg_central);
      admitted_neg += p.neg_central;
    }
    {
      auto b = brace_from_family(RegularFamily(d16, psi, +1));
      const bool skew = b.verified.circle_is_group && b.verified.left_brace_axiom;
      CHECK(skew == p.pos_central);
      CHECK(b.verified.bi_skew == p.derived_central);
      admitted_pos += p.pos_central;
    }
  });
  CHECK(admitted_neg > 0);
  CHECK(admitted_pos > 0);
}

TEST_CASE("opposite brace") {
  auto z6 = build_cyclic(6);
  auto b_ab = circle_from_family(RegularFamily(z6, zero_map(z6), -1));
  auto op_ab = opposite_brace(b_ab);
  CHECK(op_ab.host->table() == z6->table());
  CHECK(op_ab.circle == b_ab.circle);

  auto d4 = build_dihedral(8);
  auto b = circle_from_family(RegularFamily(d4, zero_map(d4), -1));
  auto op = opposite_brace(b);
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h) CHECK(op.host->mul(g, h) == d4->mul(h, g));
  CHECK(op.verified.circle_is_group);
  CHECK(op.verified.left_brace_axiom);

  auto opop = opposite_brace(op);
  CHECK(opop.host->table() == d4->table());
  CHECK(opop.circle == b.circle);
}

TEST_CASE("psi remains an endomorphism of the circle operation") {
  auto d4 = build_dihedral(8);
  auto b0 = circle_from_family(RegularFamily(d4, zero_map(d4), -1));
  CHECK(psi_respects_circle(b0, zero_map(d4)));
  auto b1 = circle_from_family(RegularFamily(d4, identity_map(d4), -1));
  CHECK(psi_respects_circle(b1, identity_map(d4)));

  auto ex = paper_example("ex-neg-proj");
  auto b = circle_from_family(RegularFamily(ex.group, ex.psi, ex.epsilon));
  CHECK(psi_respects_circle(b, ex.psi));

  for (auto g : {build_dihedral(8), build_quaternion(8)}) {
    auto gens = find_generating_set(*g, 3);
    for_each_endomorphism(g, *gens, [&](const GroupMap& psi) {
      auto p = classify(g, psi);
      for (int eps : {-1, +1}) {
        if (!p.central_for(eps)) continue;
        CHECK(psi_respects_circle(circle_from_family(RegularFamily(g, psi, eps)), psi));
      }
    });
  }
}

TEST_CASE("circle group object") {
  auto d4 = build_dihedral(8);
  auto b = circle_from_family(RegularFamily(d4, identity_map(d4), -1));
  auto cg = circle_group(b);
  CHECK(cg->order() == 8);
  CHECK(is_isomorphic(*cg, *d4) == std::optional<bool>(true));

  auto d16 = build_dihedral(16);
  auto raw = brace_from_family(RegularFamily(d16, identity_map(d16), +1));
  CHECK_THROWS_AS(circle_group(raw), input_error);
}
