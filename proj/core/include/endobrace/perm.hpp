#pragma once

#include <tuple>
#include <vector>

#include "endobrace/group.hpp"

namespace endobrace {

// A permutation of the element-id set of a fixed host group.
struct Perm {
  GroupPtr host;
  std::vector<int> images;

  int apply(int x) const { return images[x]; }
  int degree() const { return static_cast<int>(images.size()); }
};

bool operator==(const Perm& p, const Perm& q);
bool operator!=(const Perm& p, const Perm& q);

Perm make_perm(GroupPtr host, std::vector<int> images);  // validates the bijection
Perm identity_perm(GroupPtr host);
bool is_identity(const Perm& p);

// apply(perm_compose(p, q), x) == apply(p, apply(q, x)); inverses compose to
// the identity.
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);

Perm lambda_perm(GroupPtr host, int g);  // h -> g * h
Perm rho_perm(GroupPtr host, int g);     // h -> h * g^-1
Perm iota_perm(GroupPtr host, int g);    // h -> g * h * g^-1
std::tuple<Perm, Perm, Perm> lambda_rho_iota(GroupPtr host, int g);

// Subgroup of Perm(host) generated by `gens`; gives up past max_size.
std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t max_size);

// Centralizer in the full symmetric group of a regular permutation family.
// Any permutation commuting with a transitive set is pinned down by the image
// of one point, so there are at most n candidates to test.
std::vector<Perm> centralizer_of_regular(const std::vector<Perm>& family);

}  // namespace endobrace
