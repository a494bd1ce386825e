#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endobrace/regular.hpp"
#include "endobrace/zoo.hpp"

using namespace endobrace;

TEST_CASE("nu special cases") {
  auto d4 = build_dihedral(8);

  RegularFamily zero(d4, zero_map(d4), -1);
  for (int g = 0; g < 8; ++g) CHECK(zero.nu(g) == lambda_perm(d4, g));

  RegularFamily ident(d4, identity_map(d4), -1);
  for (int g = 0; g < 8; ++g) CHECK(ident.nu(g) == rho_perm(d4, d4->inv(g)));

  CHECK(is_identity(ident.nu(0)));
  CHECK_THROWS_AS(RegularFamily(d4, identity_map(d4), 2), input_error);
}

TEST_CASE("regularity holds for arbitrary families") {
  auto q8 = build_quaternion(8);
  auto gens = find_generating_set(*q8, 3);
  for_each_endomorphism(q8, *gens, [&](const GroupMap& psi) {
    for (int eps : {-1, +1}) {
      RegularFamily f(q8, psi, eps);
      for (int g = 0; g < 8; ++g) CHECK(f.nu_apply(g, 0) == g);
    }
  });
}

TEST_CASE("oracles on known instances") {
  auto d4 = build_dihedral(8);
  RegularFamily zero(d4, zero_map(d4), -1);
  CHECK(oracle_is_subgroup(zero).value);
  CHECK(oracle_normalized_by_lambda(zero).value);
  CHECK(oracle_normalizes_lambda(zero).value);
  CHECK_FALSE(oracle_is_subgroup(zero).sampled);

  auto ex = paper_example("ex-neg-proj");
  RegularFamily proj(ex.group, ex.psi, ex.epsilon);
  CHECK(oracle_is_subgroup(proj).value);
  CHECK(oracle_normalized_by_lambda(proj).value);
  CHECK(oracle_normalizes_lambda(proj).value);

  // class three host, identity endomorphism, positive sign: not a subgroup
  auto d16 = build_dihedral(16);
  RegularFamily bad(d16, identity_map(d16), +1);
  auto res = oracle_is_subgroup(bad);
  CHECK_FALSE(res.value);
  CHECK(res.witness.has_value());
  CHECK(classify(d16, identity_map(d16)).pos_central == res.value);
}

TEST_CASE("sampled oracles report their sampling") {
  auto big = build_dihedral(96);
  Limits limits;
  limits.samples = 20000;
  RegularFamily f(big, zero_map(big), -1);
  auto res = oracle_is_subgroup(f, limits);
  CHECK(res.value);
  CHECK(res.sampled);
}

TEST_CASE("normalizes-lambda holds for every family shape") {
  auto d16 = build_dihedral(16);
  auto gens = find_generating_set(*d16, 3);
  for_each_endomorphism(d16, *gens, [&](const GroupMap& psi) {
    for (int eps : {-1, +1}) {
      RegularFamily f(d16, psi, eps);
      CHECK(oracle_normalizes_lambda(f).value);
    }
  });
}

TEST_CASE("same family criterion") {
  auto d4 = build_dihedral(8);
  auto zero = zero_map(d4);
  CHECK(same_family(d4, zero, zero, -1));

  // r^a s^b -> r^(2a): central values, same family as zero
  auto central = make_homomorphism(d4, d4, {0, 2, 0, 2, 0, 2, 0, 2});
  CHECK(same_family(d4, zero, central, -1));
  CHECK_FALSE(maps_equal(zero, central));
  CHECK(families_elementwise_equal(RegularFamily(d4, zero, -1),
                                   RegularFamily(d4, central, -1)));

  CHECK_FALSE(same_family(d4, zero, identity_map(d4), -1));

  auto d16 = build_dihedral(16);
  CHECK_THROWS_AS(same_family(d16, identity_map(d16), zero_map(d16), +1), hypothesis_error);
}

TEST_CASE("same family criterion matches elementwise comparison on sweeps") {
  for (auto g : {build_cyclic(6), build_dihedral(8)}) {
    auto gens = find_generating_set(*g, 3);
    auto endos = enumerate_endomorphisms(g, *gens);
    for (int eps : {-1, +1}) {
      std::vector<GroupMap> valid;
      for (const auto& e : endos) {
        if (classify(g, e).central_for(eps)) valid.push_back(e);
      }
      for (const auto& a : valid) {
        for (const auto& b : valid) {
          CHECK(same_family(g, a, b, eps) ==
                families_elementwise_equal(RegularFamily(g, a, eps), RegularFamily(g, b, eps)));
        }
      }
    }
  }
}

TEST_CASE("fitting decomposition") {
  auto z3 = build_cyclic(3);
  auto aut = make_homomorphism(z3, z3, {0, 2, 1});
  auto d1 = fitting_decomposition(z3, aut);
  CHECK(d1.n == 1);
  CHECK(d1.j.is_trivial());
  CHECK(d1.i.order() == 3);

  auto d4 = build_dihedral(8);
  auto d2 = fitting_decomposition(d4, zero_map(d4));
  CHECK(d2.n == 1);
  CHECK(d2.j.order() == 8);
  CHECK(d2.i.is_trivial());

  auto ex = paper_example("ex-neg-proj");
  auto d3 = fitting_decomposition(ex.group, ex.psi);
  CHECK(d3.n == 1);
  std::vector<int> s_times_1, one_times_s;
  for (int a = 0; a < 8; ++a) {
    s_times_1.push_back(a * 8);
    one_times_s.push_back(a);
  }
  CHECK(d3.j.elements == s_times_1);
  CHECK(d3.i.elements == one_times_s);
  CHECK(verify_fitting(d3, ex.group, ex.psi).all());
  RegularFamily fam(ex.group, ex.psi, ex.epsilon);
  CHECK(verify_fitting_family(fam, d3).all());
}

TEST_CASE("fitting needs a stabilizing power beyond one") {
  // x -> 2x on Z8: kernel chain {0,4} < {0,2,4,6}, image chain shrinks twice
  auto z8 = build_cyclic(8);
  auto dbl = make_homomorphism(z8, z8, {0, 2, 4, 6, 0, 2, 4, 6});
  auto d = fitting_decomposition(z8, dbl);
  CHECK(d.n == 3);
  CHECK(d.j.order() == 8);
  CHECK(d.i.is_trivial());
  CHECK(verify_fitting(d, z8, dbl).all());
}

TEST_CASE("fitting across sweeps") {
  for (auto g : {build_dihedral(8), build_quaternion(8), build_cyclic(8)}) {
    auto gens = find_generating_set(*g, 3);
    for_each_endomorphism(g, *gens, [&](const GroupMap& psi) {
      auto d = fitting_decomposition(g, psi);
      CHECK(verify_fitting(d, g, psi).all());
      auto p = classify(g, psi);
      for (int eps : {-1, +1}) {
        if (!p.central_for(eps)) continue;
        RegularFamily f(g, psi, eps);
        CHECK(verify_fitting_family(f, d).all());
      }
    });
  }
}
