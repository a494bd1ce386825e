#pragma once

#include <functional>
#include <vector>

#include "endobrace/group.hpp"

namespace endobrace {

// Condition profile of an endomorphism psi of G, written with
// [g,psi] = g * psi(g)^-1 and [G,psi] the subgroup those generate.
struct EndoProfile {
  bool abelian = false;          // psi([G,G]) = 1, i.e. the image is abelian
  bool neg_central = false;      // psi([[G,psi],G]) <= Z(G)
  bool pos_central = false;      // psi([psi(G),G]) <= Z(G)
  bool derived_central = false;  // psi([G,G]) <= Z(G)
  bool neg_vanishing = false;    // psi([[G,psi],G]) = 1
  bool pos_vanishing = false;    // psi([psi(G),G]) = 1
  bool fixed_point_free = false; // psi(g) = g only for g = 1
  bool idempotent = false;       // psi o psi = psi

  // The admissibility condition for a sign: neg_central for epsilon = -1,
  // pos_central for epsilon = +1.
  bool central_for(int epsilon) const { return epsilon < 0 ? neg_central : pos_central; }
  bool vanishing_for(int epsilon) const { return epsilon < 0 ? neg_vanishing : pos_vanishing; }
};

// g * psi(g)^-1.
int psi_commutator(const Group& g, const GroupMap& psi, int x);
// Subgroup generated by all g * psi(g)^-1.
Subgroup psi_commutator_subgroup(GroupPtr g, const GroupMap& psi);

EndoProfile classify(GroupPtr g, const GroupMap& psi);
bool is_fixed_point_free(const Group& g, const GroupMap& psi);
bool is_idempotent(const Group& g, const GroupMap& psi);
GroupMap endo_power(const GroupMap& psi, int k);

// All endomorphisms of G, visited once each in lexicographic order of the
// generator-image tuple. Candidates extend generator images along a
// breadth-first spanning tree, get pruned on the cheap generator-edge
// condition, and survivors pass the full |G|^2 homomorphism check.
void for_each_endomorphism(GroupPtr g, const std::vector<int>& gens,
                           const std::function<void(const GroupMap&)>& fn);
std::vector<GroupMap> enumerate_endomorphisms(GroupPtr g, const std::vector<int>& gens);

}  // namespace endobrace
