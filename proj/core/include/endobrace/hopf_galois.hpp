#pragma once

#include <string>

#include "endobrace/brace.hpp"
#include "endobrace/regular.hpp"

namespace endobrace {

// nu'(g) : h -> h o g, the member of the opposite subgroup indexed by g.
Perm nu_prime(const RegularFamily& f, int g);

// The full opposite family {nu'(g)}, verified regular; callers compare it
// against centralizer_of_regular for an independent check.
std::vector<Perm> opposite_subgroup(const RegularFamily& f);

// A subgroup of the regular family (or of its opposite), stored by the g
// indices of its members together with how each member permutation is
// realized.
struct SpecialSubgroup {
  enum class Kind { lambda_of_g, rho_of_g_inv, nu_of_g, nu_prime_of_g };

  std::string name;
  Kind kind = Kind::nu_of_g;
  std::vector<int> g_elements;  // sorted
  bool closed = false;
  bool normalized_by_lambda = false;
  bool trivial_lambda_action = false;

  int order() const { return static_cast<int>(g_elements.size()); }
};

Perm member_perm(const RegularFamily& f, const SpecialSubgroup& s, int g);

// The distinguished subgroups: N0 over ker(psi); for epsilon = -1 also N1
// over the fixed points and N01 = N0 N1; LambdaN and PN are the members that
// are plain left/right translations; Nprime is the opposite subgroup.
struct HGReport {
  int epsilon = 0;
  std::vector<SpecialSubgroup> subgroups;
  std::string type_of_n;   // catalogue label when identifiable, else invariants
  bool type_is_label = false;
};
HGReport special_subgroups(const RegularFamily& f, const Limits& limits = {});

// For idempotent psi with epsilon = -1: exhibits the isomorphism between the
// circle group and ker(psi) x im(psi), with factor descriptions.
struct IdempotentType {
  bool verified = false;
  int kernel_order = 0;
  int image_order = 0;
  std::string description;
};
IdempotentType idempotent_type(const RegularFamily& f, const Limits& limits = {});

// For fixed-point-free psi under the vanishing hypothesis of the sign
// (psi([[G,psi],G]) = 1 for epsilon = -1, psi([psi(G),G]) = 1 for +1):
// alpha(g) = g * psi(g^epsilon) is a verified isomorphism from the circle
// group to the host. Throws hypothesis_error naming whichever hypothesis
// fails.
GroupMap fpf_isomorphism(const RegularFamily& f, const Limits& limits = {});

// Whether conjugation by every left translation commutes with
// nu(g) -> lambda(alpha(g)). False as soon as some conjugate leaves the
// family.
bool check_G_equivariance(const RegularFamily& f, const std::vector<int>& alpha);

}  // namespace endobrace
