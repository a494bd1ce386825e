#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "endobrace/errors.hpp"
#include "endobrace/limits.hpp"

namespace endobrace {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite group on element ids 0..n-1, stored as a full Cayley table with
// id 0 the identity. Immutable once built; construction validates the group
// axioms (associativity exhaustively up to Limits::assoc_cap, sampled above).
class Group {
 public:
  static GroupPtr from_table(std::string name, int order, std::vector<int> table,
                             const Limits& limits = {});

  int order() const { return n_; }
  const std::string& name() const { return name_; }

  int mul(int g, int h) const { return table_[static_cast<std::size_t>(g) * n_ + h]; }
  int inv(int g) const { return inv_[g]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv_[g]); }        // g h g^-1
  int commutator(int g, int h) const { return mul(conj(g, h), inv_[h]); } // g h g^-1 h^-1
  int power(int g, long long e) const;
  int element_order(int g) const;
  int exponent() const;
  bool is_abelian() const;

  const std::vector<int>& table() const { return table_; }
  const std::vector<int>& inverses() const { return inv_; }

  // Identity shared by copies of the same constructed object; used to detect
  // mixed-host arguments.
  std::uint64_t uid() const { return uid_; }

  void check_element(int g) const;

 private:
  Group(std::string name, int order, std::vector<int> table, std::vector<int> inv);

  std::string name_;
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::uint64_t uid_;
};

// Range-checked table lookup.
int multiply(const Group& g, int a, int b);

// Subgroup as a sorted element list; always contains 0 and is closed under
// multiplication and inversion (verified on construction).
struct Subgroup {
  GroupPtr host;
  std::vector<int> elements;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
  std::vector<char> mask() const;
  bool is_trivial() const { return elements.size() == 1; }
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
Subgroup make_subgroup(GroupPtr g, std::vector<int> elements);
Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens);
Subgroup center(GroupPtr g);
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(GroupPtr g);
bool is_normal(const Subgroup& h);
bool subgroups_equal(const Subgroup& a, const Subgroup& b);

// gamma_1 = G, gamma_{k+1} = [gamma_k, G]; the list stops at the first
// repeated term.
std::vector<Subgroup> lower_central_series(GroupPtr g);
// Length of the series when it reaches 1, otherwise nullopt.
std::optional<int> nilpotency_class(GroupPtr g);

// A total map between groups, stored as its full image table. The
// is_homomorphism flag is only set by make_homomorphism, which checks all
// pairs.
struct GroupMap {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> images;
  bool is_homomorphism = false;

  int operator()(int g) const { return images[g]; }
};

GroupMap make_homomorphism(GroupPtr source, GroupPtr target, std::vector<int> images);
GroupMap identity_map(GroupPtr g);
GroupMap zero_map(GroupPtr g);
GroupMap compose_maps(const GroupMap& f, const GroupMap& g);  // f after g
bool maps_equal(const GroupMap& f, const GroupMap& g);

Subgroup kernel(const GroupMap& f);
Subgroup image_subgroup(const GroupMap& f);

struct QuotientResult {
  GroupPtr group;
  GroupMap projection;
};
// Coset group of a normal subgroup; the identity coset gets id 0 and the
// projection is a verified homomorphism.
QuotientResult quotient(GroupPtr g, const Subgroup& n, const Limits& limits = {});

struct ProductResult {
  GroupPtr group;
  GroupMap inject_left, inject_right;
  GroupMap project_left, project_right;
};
// Cayley table on pairs, id (a, b) -> a * |B| + b.
ProductResult direct_product(GroupPtr a, GroupPtr b, const Limits& limits = {});

struct SubgroupGroup {
  GroupPtr group;
  GroupMap embedding;  // new ids -> host ids
};
SubgroupGroup subgroup_as_group(const Subgroup& h, std::string name,
                                const Limits& limits = {});

// Smallest generating set of size <= max_size, searched by brute force.
std::optional<std::vector<int>> find_generating_set(const Group& g, int max_size);

// Brute-force isomorphism test; nullopt when either order exceeds
// limits.iso_cap.
std::optional<bool> is_isomorphic(const Group& a, const Group& b,
                                  const Limits& limits = {});

}  // namespace endobrace
