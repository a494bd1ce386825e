#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "endobrace/morphisms.hpp"
#include "endobrace/zoo.hpp"

using namespace endobrace;

namespace {

// Independent route: try all |G|^|G| image tables and keep the
// homomorphisms. Only sane for tiny groups.
std::set<std::vector<int>> all_endos_by_exhaustion(const GroupPtr& g) {
  const int n = g->order();
  std::set<std::vector<int>> found;
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  while (true) {
    bool hom = true;
    for (int x = 0; x < n && hom; ++x) {
      for (int y = 0; y < n; ++y) {
        if (images[g->mul(x, y)] != g->mul(images[x], images[y])) {
          hom = false;
          break;
        }
      }
    }
    if (hom) found.insert(images);
    int pos = n - 1;
    while (pos >= 0 && images[pos] == n - 1) {
      images[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++images[pos];
  }
  return found;
}

std::set<std::vector<int>> image_set(const std::vector<GroupMap>& endos) {
  std::set<std::vector<int>> out;
  for (const auto& e : endos) out.insert(e.images);
  return out;
}

}  // namespace

TEST_CASE("psi commutator") {
  auto d4 = build_dihedral(8);
  auto id = identity_map(d4);
  auto zero = zero_map(d4);
  for (int g = 0; g < 8; ++g) {
    CHECK(psi_commutator(*d4, id, g) == 0);
    CHECK(psi_commutator(*d4, zero, g) == g);
  }
  CHECK(psi_commutator_subgroup(d4, id).is_trivial());
  CHECK(psi_commutator_subgroup(d4, zero).order() == 8);

  auto ex = paper_example("ex-neg-proj");
  for (int g = 0; g < 64; ++g) {
    CHECK(psi_commutator(*ex.group, ex.psi, g) == (g / 8) * 8);  // (a, b) -> (a, 1)
  }
  CHECK(psi_commutator_subgroup(ex.group, ex.psi).order() == 8);

  GroupMap not_verified{d4, d4, std::vector<int>(8, 0), false};
  CHECK_THROWS_AS(psi_commutator(*d4, not_verified, 1), input_error);
}

TEST_CASE("fixed points and idempotency") {
  auto z3 = build_cyclic(3);
  CHECK_FALSE(is_fixed_point_free(*z3, identity_map(z3)));
  CHECK(is_fixed_point_free(*z3, make_homomorphism(z3, z3, {0, 2, 1})));
  CHECK(is_fixed_point_free(*z3, zero_map(z3)));

  auto d4 = build_dihedral(8);
  CHECK(is_idempotent(*d4, zero_map(d4)));
  CHECK(is_idempotent(*d4, identity_map(d4)));

  auto ex = paper_example("ex-neg-proj");
  CHECK(is_idempotent(*ex.group, ex.psi));
}

TEST_CASE("idempotent endomorphisms fix exactly their image") {
  auto ex = paper_example("ex-neg-proj");
  auto img = image_subgroup(ex.psi);
  std::vector<int> fixed;
  for (int g = 0; g < ex.group->order(); ++g) {
    if (ex.psi.images[g] == g) fixed.push_back(g);
  }
  CHECK(fixed == img.elements);
}

TEST_CASE("classification flags on identity") {
  auto d4 = build_dihedral(8);
  auto p = classify(d4, identity_map(d4));
  CHECK(p.derived_central);  // class two
  CHECK(p.pos_central);
  CHECK(p.neg_central);
  CHECK(p.neg_vanishing);    // [g, id] = 1
  CHECK_FALSE(p.abelian);
  CHECK(p.idempotent);

  auto d16 = build_dihedral(16);  // class three
  auto q = classify(d16, identity_map(d16));
  CHECK_FALSE(q.derived_central);
  CHECK_FALSE(q.pos_central);
  CHECK(q.neg_central);
}

TEST_CASE("enumeration counts") {
  auto z2 = build_cyclic(2);
  CHECK(enumerate_endomorphisms(z2, {1}).size() == 2);

  auto z4 = build_cyclic(4);
  auto endos4 = enumerate_endomorphisms(z4, {1});
  CHECK(endos4.size() == 4);

  auto z6 = build_cyclic(6);
  CHECK(enumerate_endomorphisms(z6, {1}).size() == 6);

  auto d4 = build_dihedral(8);
  auto gens = find_generating_set(*d4, 3);
  REQUIRE(gens.has_value());
  auto endos = enumerate_endomorphisms(d4, *gens);
  CHECK(endos.size() == 36);

  CHECK_THROWS_AS(enumerate_endomorphisms(d4, {1}), input_error);  // rotations only
}

TEST_CASE("enumeration agrees with raw exhaustion") {
  for (auto g : {build_cyclic(4), build_cyclic(6), build_quaternion(8), build_dihedral(8)}) {
    auto gens = find_generating_set(*g, 3);
    REQUIRE(gens.has_value());
    auto fast = image_set(enumerate_endomorphisms(g, *gens));
    auto slow = all_endos_by_exhaustion(g);
    CHECK(fast == slow);
  }
}

TEST_CASE("implication lattice over full sweeps") {
  for (auto g : {build_cyclic(8), build_dihedral(8), build_quaternion(8), build_dihedral(16),
                 build_heisenberg(3)}) {
    auto gens = find_generating_set(*g, 3);
    REQUIRE(gens.has_value());
    for_each_endomorphism(g, *gens, [&](const GroupMap& psi) {
      auto p = classify(g, psi);
      if (p.abelian) {
        CHECK(p.neg_central);
        CHECK(p.derived_central);
      }
      if (p.derived_central) CHECK(p.pos_central);
      if (p.neg_vanishing) CHECK(p.neg_central);
      if (p.pos_vanishing) CHECK(p.pos_central);
      if (p.idempotent) {
        auto img = image_subgroup(psi);
        std::vector<int> fixed;
        for (int x = 0; x < g->order(); ++x) {
          if (psi.images[x] == x) fixed.push_back(x);
        }
        CHECK(fixed == img.elements);
      }
    });
  }
}

TEST_CASE("endo powers") {
  auto z8 = build_cyclic(8);
  auto dbl = make_homomorphism(z8, z8, {0, 2, 4, 6, 0, 2, 4, 6});
  auto sq = endo_power(dbl, 2);
  for (int x = 0; x < 8; ++x) CHECK(sq.images[x] == (4 * x) % 8);
  CHECK(maps_equal(endo_power(dbl, 0), identity_map(z8)));
  CHECK(maps_equal(endo_power(dbl, 1), dbl));
}
