#include "endobrace/morphisms.hpp"

#include <algorithm>

namespace endobrace {

namespace {

void require_endo(const GroupMap& psi, const char* who) {
  if (!psi.is_homomorphism || psi.source->uid() != psi.target->uid()) {
    throw input_error(std::string(who) + ": expected a verified endomorphism");
  }
}

bool subset_of(const Subgroup& a, const std::vector<char>& mask) {
  for (int x : a.elements) {
    if (!mask[x]) return false;
  }
  return true;
}

Subgroup map_image_of(const Subgroup& s, const GroupMap& psi) {
  std::vector<int> vals;
  vals.reserve(s.elements.size());
  for (int x : s.elements) vals.push_back(psi.images[x]);
  return make_subgroup(psi.target, std::move(vals));
}

}  // namespace

int psi_commutator(const Group& g, const GroupMap& psi, int x) {
  require_endo(psi, "psi_commutator");
  g.check_element(x);
  return g.mul(x, g.inv(psi.images[x]));
}

Subgroup psi_commutator_subgroup(GroupPtr g, const GroupMap& psi) {
  require_endo(psi, "psi_commutator_subgroup");
  const int n = g->order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> gens;
  for (int x = 0; x < n; ++x) {
    int c = g->mul(x, g->inv(psi.images[x]));
    if (!seen[c]) {
      seen[c] = 1;
      gens.push_back(c);
    }
  }
  return generated_subgroup(std::move(g), gens);
}

bool is_fixed_point_free(const Group& g, const GroupMap& psi) {
  for (int x = 1; x < g.order(); ++x) {
    if (psi.images[x] == x) return false;
  }
  return true;
}

bool is_idempotent(const Group& g, const GroupMap& psi) {
  for (int x = 0; x < g.order(); ++x) {
    if (psi.images[psi.images[x]] != psi.images[x]) return false;
  }
  return true;
}

GroupMap endo_power(const GroupMap& psi, int k) {
  require_endo(psi, "endo_power");
  if (k < 0) throw input_error("endo_power: exponent must be nonnegative");
  GroupMap acc = identity_map(psi.source);
  for (int i = 0; i < k; ++i) acc = compose_maps(psi, acc);
  return acc;
}

EndoProfile classify(GroupPtr g, const GroupMap& psi) {
  require_endo(psi, "classify");
  EndoProfile p;
  auto z = center(g).mask();
  auto full = full_subgroup(g);

  auto derived = commutator_subgroup(full, full);
  auto psi_derived = map_image_of(derived, psi);
  p.abelian = psi_derived.is_trivial();
  p.derived_central = subset_of(psi_derived, z);

  auto gpsi = psi_commutator_subgroup(g, psi);
  auto neg_core = map_image_of(commutator_subgroup(gpsi, full), psi);
  p.neg_vanishing = neg_core.is_trivial();
  p.neg_central = subset_of(neg_core, z);

  auto image = image_subgroup(psi);
  auto pos_core = map_image_of(commutator_subgroup(image, full), psi);
  p.pos_vanishing = pos_core.is_trivial();
  p.pos_central = subset_of(pos_core, z);

  p.fixed_point_free = is_fixed_point_free(*g, psi);
  p.idempotent = is_idempotent(*g, psi);
  return p;
}

void for_each_endomorphism(GroupPtr g, const std::vector<int>& gens,
                           const std::function<void(const GroupMap&)>& fn) {
  const int n = g->order();
  if (static_cast<int>(generated_subgroup(g, gens).order()) != n) {
    throw input_error("for_each_endomorphism: the given set does not generate the group");
  }
  if (gens.empty()) {
    fn(identity_map(g));  // trivial group
    return;
  }
  const int k = static_cast<int>(gens.size());

  // Breadth-first spanning tree: element -> (parent, generator index).
  std::vector<int> order_of(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) order_of[x] = g->element_order(x);
  std::vector<int> bfs{0}, parent(static_cast<std::size_t>(n), -1),
      via(static_cast<std::size_t>(n), -1);
  {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      int x = bfs[head];
      for (int i = 0; i < k; ++i) {
        int y = g->mul(x, gens[i]);
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          via[y] = i;
          bfs.push_back(y);
        }
      }
    }
  }

  std::vector<int> choice(static_cast<std::size_t>(k), 0);
  std::vector<int> phi(static_cast<std::size_t>(n));
  while (true) {
    bool viable = true;
    for (int i = 0; i < k && viable; ++i) {
      viable = order_of[gens[i]] % order_of[choice[i]] == 0;
    }
    if (viable) {
      phi[0] = 0;
      for (std::size_t t = 1; t < bfs.size(); ++t) {
        int x = bfs[t];
        phi[x] = g->mul(phi[parent[x]], choice[via[x]]);
      }
      // Cheap pruning on generator edges before the full pair scan.
      bool edges_ok = true;
      for (int x = 0; x < n && edges_ok; ++x) {
        for (int i = 0; i < k; ++i) {
          if (phi[g->mul(x, gens[i])] != g->mul(phi[x], choice[i])) {
            edges_ok = false;
            break;
          }
        }
      }
      if (edges_ok) {
        bool hom = true;
        for (int x = 0; x < n && hom; ++x) {
          for (int y = 0; y < n; ++y) {
            if (phi[g->mul(x, y)] != g->mul(phi[x], phi[y])) {
              hom = false;
              break;
            }
          }
        }
        if (hom) fn(GroupMap{g, g, phi, true});
      }
    }
    int pos = k - 1;
    while (pos >= 0 && choice[pos] == n - 1) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++choice[pos];
  }
}

std::vector<GroupMap> enumerate_endomorphisms(GroupPtr g, const std::vector<int>& gens) {
  std::vector<GroupMap> out;
  for_each_endomorphism(std::move(g), gens, [&](const GroupMap& m) { out.push_back(m); });
  return out;
}

}  // namespace endobrace
