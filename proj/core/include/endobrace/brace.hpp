#pragma once

#include <optional>

#include "endobrace/regular.hpp"

namespace endobrace {

struct BraceFlags {
  bool circle_is_group = false;
  bool left_brace_axiom = false;  // g o (h k) = (g o h) g^-1 (g o k)
  bool bi_skew = false;           // additionally g (h o k) = (g h) o gbar o (g k)
  bool sampled = false;           // triple scans were sampled rather than exhaustive
};

// Two group operations on one element set: the host's multiplication (dot)
// and the circle table. circle_inv stays empty when circle is not a group.
// Braces built from a family remember (psi, epsilon) so the closed-form
// circle inverse can be cross-checked against the table.
struct SkewBrace {
  GroupPtr host;
  std::vector<int> circle;  // n*n row-major
  std::vector<int> circle_inv;
  BraceFlags verified;
  std::optional<GroupMap> psi;
  int epsilon = 0;

  int order() const { return host->order(); }
  int dot(int g, int h) const { return host->mul(g, h); }
  int circ(int g, int h) const {
    return circle[static_cast<std::size_t>(g) * host->order() + h];
  }
  int bar(int g) const { return circle_inv[g]; }
};

// Fills the circle table g o h = nu(g)(h) and computes all verification
// flags; never refuses.
SkewBrace brace_from_family(const RegularFamily& f, const Limits& limits = {});

// Same, but refuses (hypothesis_error) unless psi satisfies the
// admissibility condition for the family's sign.
SkewBrace circle_from_family(const RegularFamily& f, const Limits& limits = {});

// Circle inverse by the closed form psi(g^-epsilon) * g^-1 * psi(g^epsilon),
// cross-checked against the table-derived inverse; requires a brace that
// remembers its psi.
int circle_inverse(const SkewBrace& b, int g);

bool verify_skew_brace(const SkewBrace& b, const Limits& limits = {});
bool verify_bi_skew(const SkewBrace& b, const Limits& limits = {});

// The companion brace with the dot operation reversed; the circle operation
// is kept.
SkewBrace opposite_brace(const SkewBrace& b, const Limits& limits = {});

// psi(g o h) = psi(g) o psi(h) on all pairs.
bool psi_respects_circle(const SkewBrace& b, const GroupMap& psi);

// The circle table as a Group object (requires circle_is_group).
GroupPtr circle_group(const SkewBrace& b, const Limits& limits = {});

}  // namespace endobrace
