#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endobrace/ybe.hpp"
#include "endobrace/zoo.hpp"

using namespace endobrace;

TEST_CASE("zero endomorphism gives the conjugation-style solution") {
  auto d4 = build_dihedral(8);
  RegularFamily f(d4, zero_map(d4), -1);
  auto s = build_solution(f, Variant::rG);
  for (int g = 0; g < 8; ++g) {
    for (int h = 0; h < 8; ++h) {
      CHECK(s.r(g, h) ==
            std::pair<int, int>{h, d4->mul(d4->mul(d4->inv(h), g), h)});
    }
  }
  CHECK(verify_braid(s).ok);
  CHECK(r_bijective(s));
  CHECK(nondegenerate(s));
}

TEST_CASE("identity endomorphism, negative sign, swapped-operations variant") {
  auto d4 = build_dihedral(8);
  RegularFamily f(d4, identity_map(d4), -1);
  auto s = build_solution(f, Variant::rG1);
  for (int g = 0; g < 8; ++g) {
    for (int h = 0; h < 8; ++h) {
      // (g h g^-1, g h^-1 g^-1 g h) simplified by cancellation
      CHECK(s.r(g, h).first == d4->conj(g, h));
      CHECK(s.r(g, h).second ==
            d4->mul(d4->mul(d4->mul(d4->mul(g, d4->inv(h)), d4->inv(g)), g), h));
    }
  }
  CHECK(verify_braid(s).ok);
}

TEST_CASE("abelian hosts give involutive coinciding pairs") {
  auto z6 = build_cyclic(6);
  auto dbl = make_homomorphism(z6, z6, {0, 2, 4, 0, 2, 4});
  RegularFamily f(z6, dbl, -1);
  auto rg = build_solution(f, Variant::rG);
  auto rgop = build_solution(f, Variant::rGop);
  CHECK(involutive(rg));
  auto rep = verify_pairings(f, rg, rgop);
  CHECK(rep.mutual_inverse);
  CHECK(rep.coincide);
  CHECK(rep.criterion);
}

TEST_CASE("hypothesis gating") {
  auto d16 = build_dihedral(16);
  RegularFamily pos(d16, identity_map(d16), +1);
  CHECK_THROWS_AS(build_solution(pos, Variant::rG), hypothesis_error);

  // heisenberg(3) is class two: identity is admitted for +1 everywhere
  auto h3 = build_heisenberg(3);
  RegularFamily ok(h3, identity_map(h3), +1);
  CHECK_NOTHROW(build_solution(ok, Variant::rG));
  CHECK_NOTHROW(build_solution(ok, Variant::rG1));
}

TEST_CASE("all four variants on the projection example verify") {
  auto ex = paper_example("ex-neg-proj");
  RegularFamily f(ex.group, ex.psi, ex.epsilon);
  auto b = circle_from_family(f);
  Limits wide;
  wide.braid_cap = 64;
  for (Variant v : all_variants()) {
    auto s = build_solution(f, v, wide);
    auto braid = verify_braid(s, wide);
    CHECK(braid.ok);
    CHECK_FALSE(braid.sampled);
    CHECK(r_bijective(s));
    CHECK(nondegenerate(s));
    CHECK(matches_generic(s, b));
  }
  auto rep1 = verify_pairings(f, build_solution(f, Variant::rG, wide),
                              build_solution(f, Variant::rGop, wide));
  CHECK(rep1.mutual_inverse);
  CHECK_FALSE(rep1.coincide);
  CHECK_FALSE(rep1.criterion);
  auto rep2 = verify_pairings(f, build_solution(f, Variant::rG1, wide),
                              build_solution(f, Variant::rG1op, wide));
  CHECK(rep2.mutual_inverse);
  CHECK(rep2.agree());
}

TEST_CASE("closed forms equal the brace-table construction on sweeps") {
  for (auto g : {build_dihedral(8), build_cyclic(6), build_quaternion(8)}) {
    auto gens = find_generating_set(*g, 3);
    for_each_endomorphism(g, *gens, [&](const GroupMap& psi) {
      auto p = classify(g, psi);
      for (int eps : {-1, +1}) {
        if (!p.central_for(eps)) continue;
        RegularFamily f(g, psi, eps);
        auto b = circle_from_family(f);
        for (Variant v : all_variants()) {
          if (eps > 0 && (v == Variant::rG1 || v == Variant::rG1op) && !p.derived_central) {
            CHECK_THROWS_AS(build_solution(f, v), hypothesis_error);
            continue;
          }
          auto s = build_solution(f, v);
          CHECK(matches_generic(s, b));
          CHECK(verify_braid(s).ok);
          CHECK(r_bijective(s));
          CHECK(nondegenerate(s));
        }
      }
    });
  }
}

TEST_CASE("involutivity of rG happens exactly on abelian hosts") {
  for (auto g : {build_cyclic(4), build_cyclic(6), build_dihedral(8), build_quaternion(8)}) {
    RegularFamily f(g, zero_map(g), -1);
    auto s = build_solution(f, Variant::rG);
    CHECK(involutive(s) == g->is_abelian());
  }
}

TEST_CASE("swapped-pair coincidence tracks commutativity of the circle operation") {
  auto d4 = build_dihedral(8);
  // reversed multiplication is nonabelian: criterion fails, maps differ
  RegularFamily f(d4, identity_map(d4), -1);
  auto rep = verify_pairings(f, build_solution(f, Variant::rG1),
                             build_solution(f, Variant::rG1op));
  CHECK(rep.mutual_inverse);
  CHECK_FALSE(rep.criterion);
  CHECK_FALSE(rep.coincide);

  // zero endomorphism: the circle operation is the dot, so coincidence on
  // abelian hosts only
  auto z6 = build_cyclic(6);
  RegularFamily t(z6, zero_map(z6), -1);
  auto rep2 = verify_pairings(t, build_solution(t, Variant::rG1),
                              build_solution(t, Variant::rG1op));
  CHECK(rep2.coincide);
  CHECK(rep2.criterion);
}

TEST_CASE("mutating a materialized sigma table breaks the braid relation") {
  auto d4 = build_dihedral(8);
  RegularFamily f(d4, zero_map(d4), -1);
  auto s = build_solution(f, Variant::rG);
  REQUIRE(verify_braid(s).ok);
  std::swap(s.mutable_sigma()[1 * 8 + 2], s.mutable_sigma()[1 * 8 + 5]);
  CHECK_FALSE(verify_braid(s).ok);
}

TEST_CASE("large hosts evaluate lazily") {
  auto big = build_dihedral(1024);
  RegularFamily f(big, zero_map(big), -1);
  Limits limits;
  limits.braid_samples = 2000;
  auto s = build_solution(f, Variant::rG, limits);
  CHECK_FALSE(s.materialized());
  CHECK(s.r(3, 5) == std::pair<int, int>{5, big->mul(big->mul(big->inv(5), 3), 5)});
  auto braid = verify_braid(s, limits);
  CHECK(braid.ok);
  CHECK(braid.sampled);
}
