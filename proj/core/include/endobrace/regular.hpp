#pragma once

#include <optional>
#include <utility>

#include "endobrace/morphisms.hpp"
#include "endobrace/perm.hpp"

namespace endobrace {

// The regular permutation family attached to an endomorphism psi and a sign
// epsilon = +-1:
//
//   nu(g) : h -> g * psi(g^epsilon) * h * psi(g^-epsilon)
//
// Always a regular subset of Perm(G) normalizing the left translations;
// whether it is a subgroup is what the oracles below decide.
class RegularFamily {
 public:
  RegularFamily(GroupPtr host, GroupMap psi, int epsilon);

  const GroupPtr& host() const { return host_; }
  const GroupMap& psi() const { return psi_; }
  int epsilon() const { return epsilon_; }

  int conjugator(int g) const { return u_[g]; }  // psi(g^epsilon)
  int nu_apply(int g, int h) const {
    const Group& G = *host_;
    const int u = u_[g];
    return G.mul(G.mul(G.mul(g, u), h), G.inv(u));
  }
  int circle(int g, int h) const { return nu_apply(g, h); }  // g o h
  Perm nu(int g) const;
  std::vector<int> nu_images(int g) const;

 private:
  GroupPtr host_;
  GroupMap psi_;
  int epsilon_;
  std::vector<int> u_;
};

struct OracleResult {
  bool value = false;
  bool sampled = false;
  std::optional<std::pair<int, int>> witness;  // first failing pair, if any
};

// Definition-level scans over pairs: permutations are composed and compared
// elementwise, with membership in N tested through regularity (a candidate
// pi lies in N iff pi equals nu(pi(1))). Exhaustive up to
// limits.exhaustive_cap, sampled with limits.seed above.
OracleResult oracle_is_subgroup(const RegularFamily& f, const Limits& limits = {});
OracleResult oracle_normalized_by_lambda(const RegularFamily& f, const Limits& limits = {});
OracleResult oracle_normalizes_lambda(const RegularFamily& f, const Limits& limits = {});

// Center criterion for two endomorphisms to span the same family: for every
// g, psi1(g) * psi2(g^-1) lies in Z(G). Both endomorphisms must satisfy the
// admissibility condition for the given epsilon; otherwise hypothesis_error.
bool same_family(GroupPtr g, const GroupMap& psi1, const GroupMap& psi2, int epsilon);

// Elementwise comparison of the two nu tables (the slow route same_family is
// checked against).
bool families_elementwise_equal(const RegularFamily& a, const RegularFamily& b);

// Smallest n >= 1 with ker(psi^n) and im(psi^n) both stable; J and I are that
// kernel and image.
struct FittingDecomposition {
  int n = 0;
  Subgroup j;
  Subgroup i;
};
FittingDecomposition fitting_decomposition(GroupPtr g, const GroupMap& psi);

struct FittingChecks {
  bool j_normal = false;
  bool trivial_intersection = false;
  bool product_covers = false;
  bool order_product = false;
  bool psi_nilpotent_on_j = false;
  bool psi_bijective_on_i = false;
  bool all() const {
    return j_normal && trivial_intersection && product_covers && order_product &&
           psi_nilpotent_on_j && psi_bijective_on_i;
  }
};
FittingChecks verify_fitting(const FittingDecomposition& d, GroupPtr g, const GroupMap& psi);

// Family-side claims, meaningful when the family is a subgroup: the
// permutations over J are normal in the closure of nu(J) u nu(I), and that
// closure is the whole family.
struct FamilyFittingChecks {
  bool nu_j_normal = false;
  bool closure_is_family = false;
  bool all() const { return nu_j_normal && closure_is_family; }
};
FamilyFittingChecks verify_fitting_family(const RegularFamily& f, const FittingDecomposition& d);

}  // namespace endobrace
