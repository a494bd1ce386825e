#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endobrace/morphisms.hpp"
#include "endobrace/zoo.hpp"

using namespace endobrace;

TEST_CASE("constructor orders and nilpotency classes") {
  CHECK(build_cyclic(6)->order() == 6);
  CHECK(nilpotency_class(build_dihedral(8)) == 2);
  CHECK(nilpotency_class(build_dihedral(16)) == 3);
  CHECK(nilpotency_class(build_dihedral(32)) == 4);

  auto h3 = build_heisenberg(3);
  CHECK(h3->order() == 27);
  CHECK(nilpotency_class(h3) == 2);

  auto u42 = build_unitriangular(4, 2);
  CHECK(u42->order() == 64);
  CHECK(nilpotency_class(u42) == 3);

  CHECK(is_isomorphic(*build_heisenberg(2), *build_dihedral(8)) == std::optional<bool>(true));
  Limits wide;
  wide.iso_cap = 27;
  CHECK(is_isomorphic(*build_unitriangular(3, 3), *build_heisenberg(3), wide) ==
        std::optional<bool>(true));
}

TEST_CASE("quaternion groups") {
  auto q8 = build_quaternion(8);
  CHECK(q8->order() == 8);
  // exactly one involution
  int involutions = 0;
  for (int g = 1; g < 8; ++g) involutions += q8->element_order(g) == 2;
  CHECK(involutions == 1);
  CHECK(nilpotency_class(q8) == 2);
  CHECK(nilpotency_class(build_quaternion(16)) == 3);
}

TEST_CASE("spec parsing") {
  CHECK(build_zoo("zoo:cyclic:6")->order() == 6);
  CHECK(build_zoo("cyclic(6)")->order() == 6);
  CHECK(build_zoo("zoo:unitriangular:3,2")->order() == 8);
  CHECK(build_zoo("product(dihedral(8),cyclic(2))")->order() == 16);
  CHECK(build_zoo("product(cyclic(2),cyclic(2),cyclic(2))")->order() == 8);

  auto q = build_zoo("quotient(dihedral(16),3)");
  CHECK(q->order() == 8);
  CHECK(nilpotency_class(q) == 2);

  CHECK_THROWS_AS(build_zoo("zoo:nope:3"), input_error);
  CHECK_THROWS_AS(build_zoo("cyclic(10000)"), input_error);
  CHECK_THROWS_AS(build_zoo("dihedral(7)"), input_error);
  CHECK_THROWS_AS(build_zoo("product(cyclic(2))"), input_error);
  CHECK_THROWS_AS(build_zoo("cyclic(2)trailing"), input_error);
}

TEST_CASE("order cap") {
  Limits tight;
  tight.zoo_order_cap = 100;
  CHECK_THROWS_AS(build_zoo("dihedral(128)", tight), input_error);
  CHECK(build_zoo("dihedral(64)", tight)->order() == 64);
}

TEST_CASE("example instances build with verified endomorphisms") {
  for (const auto& name : paper_example_names()) {
    auto ex = paper_example(name);
    CHECK(ex.psi.is_homomorphism);
    CHECK((ex.epsilon == 1 || ex.epsilon == -1));
    CHECK(ex.group->order() >= 8);
  }
  CHECK_THROWS_AS(paper_example("ex-missing"), input_error);
}

TEST_CASE("ex-neg-proj shape") {
  auto ex = paper_example("ex-neg-proj");
  CHECK(ex.group->order() == 64);
  CHECK(ex.epsilon == -1);
  // psi(a, b) = (1, b) in the pair encoding
  for (int g = 0; g < 64; ++g) CHECK(ex.psi.images[g] == g % 8);
  auto profile = classify(ex.group, ex.psi);
  CHECK(profile.neg_central);
  CHECK(profile.neg_vanishing);
  CHECK_FALSE(profile.abelian);
  CHECK(profile.idempotent);
  CHECK_FALSE(profile.fixed_point_free);
}

TEST_CASE("identity examples") {
  auto neg = paper_example("ex-neg-identity");
  CHECK(neg.epsilon == -1);
  CHECK(maps_equal(neg.psi, identity_map(neg.group)));
  auto profile = classify(neg.group, neg.psi);
  CHECK(profile.neg_central);
  CHECK(profile.derived_central);  // class two host
  CHECK_FALSE(profile.abelian);

  auto pos = paper_example("ex-pos-identity");
  CHECK(pos.epsilon == +1);
}

TEST_CASE("ex-pos-class2 is an automorphism separating the conditions") {
  auto ex = paper_example("ex-pos-class2");
  auto profile = classify(ex.group, ex.psi);
  CHECK(profile.derived_central);
  CHECK_FALSE(profile.abelian);
  // bijective endomorphism
  std::vector<char> hit(8, 0);
  for (int g = 0; g < 8; ++g) hit[ex.psi.images[g]] = 1;
  for (char c : hit) CHECK(c == 1);
}

TEST_CASE("ex-pos-class3 profile") {
  auto ex = paper_example("ex-pos-class3");
  CHECK(ex.group->order() == 128);
  auto profile = classify(ex.group, ex.psi);
  CHECK(profile.derived_central);
  CHECK_FALSE(profile.abelian);
}

TEST_CASE("ex-pos-class3-fpf-variant profile") {
  auto ex = paper_example("ex-pos-class3-fpf-variant");
  CHECK(ex.group->order() == 512);
  auto profile = classify(ex.group, ex.psi);
  CHECK(profile.pos_vanishing);
  CHECK_FALSE(profile.abelian);
  CHECK(profile.fixed_point_free);
}

TEST_CASE("ex-neg-class3 psi commutator lands outside the kernel of the center") {
  auto ex = paper_example("ex-neg-class3");
  CHECK(ex.group->order() == 2048);
  auto profile = classify(ex.group, ex.psi);
  CHECK(profile.neg_central);
  CHECK_FALSE(profile.neg_vanishing);  // the image in the center is nontrivial
  CHECK_FALSE(profile.abelian);
}

TEST_CASE("group identification") {
  CHECK(identify_group(*build_cyclic(4)) == std::optional<std::string>("cyclic(4)"));
  CHECK(identify_group(*build_dihedral(8)) == std::optional<std::string>("dihedral(8)"));
  CHECK(identify_group(*build_quaternion(8)) == std::optional<std::string>("quaternion(8)"));
  auto klein = direct_product(build_cyclic(2), build_cyclic(2)).group;
  CHECK(identify_group(*klein) == std::optional<std::string>("cyclic(2) x cyclic(2)"));
  auto d4xz2 = build_zoo("product(dihedral(8),cyclic(2))");
  CHECK(identify_group(*d4xz2) == std::optional<std::string>("dihedral(8) x cyclic(2)"));
  CHECK_FALSE(identify_group(*build_dihedral(64)).has_value());
  CHECK(group_invariants_label(build_dihedral(8)) == "order 8, nonabelian, center 2, exponent 4");
}
