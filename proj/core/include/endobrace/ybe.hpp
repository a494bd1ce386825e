#pragma once

#include <optional>
#include <tuple>

#include "endobrace/brace.hpp"

namespace endobrace {

// The four solution variants attached to a family: the brace solution, its
// companion from the reversed dot, and for bi-skew braces the two with the
// operations swapped.
enum class Variant { rG, rGop, rG1, rG1op };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& text);
std::vector<Variant> all_variants();

// A map r(g, h) = (sigma_g(h), tau_h(g)) on G x G given by closed forms in
// psi; sigma/tau are materialized as n x n tables up to
// Limits::materialize_cap and evaluated on the fly above it.
class YBSolution {
 public:
  YBSolution(GroupPtr host, Variant variant, int epsilon, std::vector<int> psi_images,
             const Limits& limits);

  const GroupPtr& host() const { return host_; }
  Variant variant() const { return variant_; }
  int epsilon() const { return epsilon_; }
  bool materialized() const { return materialized_; }

  std::pair<int, int> r(int g, int h) const;
  std::pair<int, int> closed_form(int g, int h) const;

  const std::vector<int>& sigma_table() const { return sigma_; }
  const std::vector<int>& tau_table() const { return tau_; }
  std::vector<int>& mutable_sigma() { return sigma_; }
  const std::vector<int>& psi_images() const { return psi_; }

 private:
  GroupPtr host_;
  Variant variant_;
  int epsilon_;
  std::vector<int> psi_;
  bool materialized_;
  std::vector<int> sigma_, tau_;  // n*n when materialized: sigma_[g*n+h], tau_[h*n+g]
};

// Builds the solution for the variant after checking the hypothesis it
// needs: the admissibility condition of the sign for rG/rGop, and
// additionally psi([G,G]) <= Z(G) for rG1/rG1op when epsilon = +1.
YBSolution build_solution(const RegularFamily& f, Variant v, const Limits& limits = {});

// The same map computed from brace tables alone (circle, bar and dot), an
// independent route used for cross-checking the closed forms.
std::pair<int, int> generic_solution(const SkewBrace& b, Variant v, int g, int h);
bool matches_generic(const YBSolution& s, const SkewBrace& b);

struct BraidResult {
  bool ok = false;
  bool sampled = false;
  std::optional<std::tuple<int, int, int>> witness;
};
// (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r), exhaustive up to
// limits.braid_cap, sampled above.
BraidResult verify_braid(const YBSolution& s, const Limits& limits = {});

bool r_bijective(const YBSolution& s);
bool nondegenerate(const YBSolution& s);  // every sigma_x and tau_x bijective
bool involutive(const YBSolution& s);

struct PairingReport {
  bool mutual_inverse = false;
  bool coincide = false;          // literal equality of the two maps
  bool criterion = false;         // the stated coincidence criterion
  bool agree() const { return coincide == criterion; }
};
// For (rG, rGop) the criterion is commutativity of the dot operation; for
// (rG1, rG1op) it is commutativity of the circle operation, stated as
// g * psi(g^eps) * h * psi(g^-eps) = h * psi(h^eps) * g * psi(h^-eps).
PairingReport verify_pairings(const RegularFamily& f, const YBSolution& s1, const YBSolution& s2);

}  // namespace endobrace
