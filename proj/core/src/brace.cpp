#include "endobrace/brace.hpp"

#include <algorithm>

namespace endobrace {

namespace {

bool circle_table_is_group(const SkewBrace& b, const Limits& limits) {
  const int n = b.order();
  // Identity behaviour and Latin-square rows/columns.
  for (int g = 0; g < n; ++g) {
    if (b.circ(0, g) != g || b.circ(g, 0) != g) return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < n; ++h) {
      int v = b.circ(g, h);
      if (seen[v]) return false;
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < n; ++h) {
      int v = b.circ(h, g);
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  auto assoc_at = [&](int g, int h, int k) {
    return b.circ(b.circ(g, h), k) == b.circ(g, b.circ(h, k));
  };
  if (n <= limits.exhaustive_cap) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
          if (!assoc_at(g, h, k)) return false;
  } else {
    SampleRng rng(limits.seed);
    for (std::int64_t t = 0; t < limits.samples; ++t) {
      if (!assoc_at(rng.below(n), rng.below(n), rng.below(n))) return false;
    }
  }
  return true;
}

std::vector<int> circle_inverses_from_table(const SkewBrace& b) {
  const int n = b.order();
  std::vector<int> inv(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (b.circ(g, h) == 0 && b.circ(h, g) == 0) {
        inv[g] = h;
        break;
      }
    }
    if (inv[g] < 0) throw input_error("circle table has no two-sided inverse for element " +
                                      std::to_string(g));
  }
  return inv;
}

template <typename TripleFn>
bool scan_triples(int n, const Limits& limits, bool& sampled, TripleFn&& ok) {
  if (n <= limits.exhaustive_cap) {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
          if (!ok(g, h, k)) return false;
    return true;
  }
  sampled = true;
  SampleRng rng(limits.seed);
  for (std::int64_t t = 0; t < limits.samples; ++t) {
    if (!ok(rng.below(n), rng.below(n), rng.below(n))) return false;
  }
  return true;
}

}  // namespace

SkewBrace brace_from_family(const RegularFamily& f, const Limits& limits) {
  const int n = f.host()->order();
  SkewBrace b;
  b.host = f.host();
  b.psi = f.psi();
  b.epsilon = f.epsilon();
  b.circle.resize(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      b.circle[static_cast<std::size_t>(g) * n + h] = f.nu_apply(g, h);
    }
  }
  b.verified.sampled = n > limits.exhaustive_cap;
  b.verified.circle_is_group = circle_table_is_group(b, limits);
  if (b.verified.circle_is_group) {
    b.circle_inv = circle_inverses_from_table(b);
    b.verified.left_brace_axiom = verify_skew_brace(b, limits);
    b.verified.bi_skew = b.verified.left_brace_axiom && verify_bi_skew(b, limits);
  }
  return b;
}

SkewBrace circle_from_family(const RegularFamily& f, const Limits& limits) {
  auto profile = classify(f.host(), f.psi());
  if (!profile.central_for(f.epsilon())) {
    throw hypothesis_error(std::string("circle_from_family: the family for epsilon ") +
                           (f.epsilon() > 0 ? "+1" : "-1") +
                           " is not a subgroup; psi fails " +
                           (f.epsilon() > 0 ? "psi([psi(G),G]) <= Z(G)"
                                            : "psi([[G,psi],G]) <= Z(G)"));
  }
  SkewBrace b = brace_from_family(f, limits);
  if (!b.verified.circle_is_group) {
    throw hypothesis_error("circle_from_family: circle table failed the group axioms");
  }
  return b;
}

int circle_inverse(const SkewBrace& b, int g) {
  b.host->check_element(g);
  if (b.circle_inv.empty()) {
    throw input_error("circle_inverse: circle operation is not a verified group");
  }
  if (!b.psi) return b.circle_inv[g];
  const Group& G = *b.host;
  const auto& psi = b.psi->images;
  const int pg = psi[g];
  const int closed = b.epsilon > 0 ? G.mul(G.mul(G.inv(pg), G.inv(g)), pg)
                                   : G.mul(G.mul(pg, G.inv(g)), G.inv(pg));
  if (closed != b.circle_inv[g]) {
    throw input_error("circle_inverse: closed form disagrees with the table at element " +
                      std::to_string(g));
  }
  return closed;
}

bool verify_skew_brace(const SkewBrace& b, const Limits& limits) {
  const Group& G = *b.host;
  const int n = b.order();
  bool sampled = false;
  return scan_triples(n, limits, sampled, [&](int g, int h, int k) {
    return b.circ(g, G.mul(h, k)) == G.mul(G.mul(b.circ(g, h), G.inv(g)), b.circ(g, k));
  });
}

bool verify_bi_skew(const SkewBrace& b, const Limits& limits) {
  if (!b.verified.circle_is_group || b.circle_inv.empty()) return false;
  const Group& G = *b.host;
  const int n = b.order();
  bool sampled = false;
  return scan_triples(n, limits, sampled, [&](int g, int h, int k) {
    return G.mul(g, b.circ(h, k)) ==
           b.circ(b.circ(G.mul(g, h), b.bar(g)), G.mul(g, k));
  });
}

SkewBrace opposite_brace(const SkewBrace& b, const Limits& limits) {
  const int n = b.order();
  std::vector<int> reversed(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      reversed[static_cast<std::size_t>(g) * n + h] = b.host->mul(h, g);
    }
  }
  SkewBrace op;
  op.host = Group::from_table(b.host->name() + "_op", n, std::move(reversed), limits);
  op.circle = b.circle;
  op.circle_inv = b.circle_inv;
  op.epsilon = 0;  // not of family shape with respect to the reversed dot
  op.verified.sampled = n > limits.exhaustive_cap;
  op.verified.circle_is_group = b.verified.circle_is_group;
  if (op.verified.circle_is_group) {
    op.verified.left_brace_axiom = verify_skew_brace(op, limits);
    op.verified.bi_skew = op.verified.left_brace_axiom && verify_bi_skew(op, limits);
  }
  return op;
}

bool psi_respects_circle(const SkewBrace& b, const GroupMap& psi) {
  const int n = b.order();
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (psi.images[b.circ(g, h)] != b.circ(psi.images[g], psi.images[h])) return false;
    }
  }
  return true;
}

GroupPtr circle_group(const SkewBrace& b, const Limits& limits) {
  if (!b.verified.circle_is_group) {
    throw input_error("circle_group: circle operation is not a verified group");
  }
  return Group::from_table(b.host->name() + "_circle", b.order(), b.circle, limits);
}

}  // namespace endobrace
