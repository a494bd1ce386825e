#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endobrace/group.hpp"

namespace endobrace {

enum class ZooFamily { cyclic, dihedral, quaternion, heisenberg, unitriangular, product, quotient };

// Recursive constructor recipe. Atoms use `params`; `product` holds two or
// more children; `quotient` holds one child plus params[0] = k, meaning the
// child modulo the k-th term of its lower central series.
struct ZooSpec {
  ZooFamily family;
  std::vector<int> params;
  std::vector<ZooSpec> children;
};

// Accepts "cyclic(6)", "product(dihedral(8),cyclic(2))",
// "quotient(dihedral(16),3)" and the flat CLI form "zoo:cyclic:6"
// ("zoo:unitriangular:4,2" for multi-parameter atoms).
ZooSpec parse_zoo_spec(const std::string& text);

GroupPtr build(const ZooSpec& spec, const Limits& limits = {});
GroupPtr build_zoo(const std::string& text, const Limits& limits = {});

GroupPtr build_cyclic(int order, const Limits& limits = {});
GroupPtr build_dihedral(int order, const Limits& limits = {});      // order = 2m
GroupPtr build_quaternion(int order, const Limits& limits = {});    // generalized, order = 4m
GroupPtr build_heisenberg(int p, const Limits& limits = {});        // order p^3
GroupPtr build_unitriangular(int n, int p, const Limits& limits = {});

std::string zoo_list_text();

// A named (group, endomorphism, sign) instance with a known condition
// profile. The class-k building blocks are instantiated with dihedral
// 2-groups.
struct PaperExample {
  std::string name;
  GroupPtr group;
  GroupMap psi;
  int epsilon;
  std::string note;
};

PaperExample paper_example(const std::string& name, const Limits& limits = {});
std::vector<std::string> paper_example_names();

// Label of an isomorphic catalogue group (orders up to limits.iso_cap), e.g.
// "cyclic(4) x cyclic(2)" or "dihedral(8)".
std::optional<std::string> identify_group(const Group& g, const Limits& limits = {});
// Fallback description: order, abelianness, center size, exponent.
std::string group_invariants_label(GroupPtr g);

}  // namespace endobrace
