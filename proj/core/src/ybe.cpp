#include "endobrace/ybe.hpp"

#include <algorithm>

namespace endobrace {

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::rG: return "rG";
    case Variant::rGop: return "rGop";
    case Variant::rG1: return "rG1";
    case Variant::rG1op: return "rG1op";
  }
  return "?";
}

Variant parse_variant(const std::string& text) {
  if (text == "rG") return Variant::rG;
  if (text == "rGop") return Variant::rGop;
  if (text == "rG1") return Variant::rG1;
  if (text == "rG1op") return Variant::rG1op;
  throw input_error("unknown solution variant '" + text + "'");
}

std::vector<Variant> all_variants() {
  return {Variant::rG, Variant::rGop, Variant::rG1, Variant::rG1op};
}

YBSolution::YBSolution(GroupPtr host, Variant variant, int epsilon, std::vector<int> psi_images,
                       const Limits& limits)
    : host_(std::move(host)),
      variant_(variant),
      epsilon_(epsilon),
      psi_(std::move(psi_images)),
      materialized_(host_->order() <= limits.materialize_cap) {
  const int n = host_->order();
  if (materialized_) {
    sigma_.resize(static_cast<std::size_t>(n) * n);
    tau_.resize(static_cast<std::size_t>(n) * n);
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) {
        auto [x, y] = closed_form(g, h);
        sigma_[static_cast<std::size_t>(g) * n + h] = x;
        tau_[static_cast<std::size_t>(h) * n + g] = y;
      }
    }
  }
}

std::pair<int, int> YBSolution::r(int g, int h) const {
  if (materialized_) {
    const int n = host_->order();
    return {sigma_[static_cast<std::size_t>(g) * n + h],
            tau_[static_cast<std::size_t>(h) * n + g]};
  }
  return closed_form(g, h);
}

std::pair<int, int> YBSolution::closed_form(int g, int h) const {
  const Group& G = *host_;
  auto P = [&](int x) { return psi_[x]; };
  auto m = [&](int a, int b) { return G.mul(a, b); };
  auto iv = [&](int x) { return G.inv(x); };

  if (epsilon_ < 0) {
    switch (variant_) {
      case Variant::rG:
        return {m(m(P(iv(g)), h), P(g)),
                m(m(m(m(m(m(P(m(iv(g), h)), iv(h)), P(g)), g), P(iv(g))), h), P(m(iv(h), g)))};
      case Variant::rGop:
        return {m(m(m(m(g, P(iv(g))), h), P(g)), iv(g)), m(m(P(h), g), P(iv(h)))};
      case Variant::rG1:
        return {m(m(P(g), h), P(iv(g))), m(m(m(m(P(g), iv(h)), P(iv(g))), g), h)};
      case Variant::rG1op:
        return {m(m(m(m(g, h), P(iv(h))), iv(g)), P(h)), m(m(P(iv(h)), g), P(h))};
    }
  } else {
    switch (variant_) {
      case Variant::rG:
        return {m(m(P(g), h), P(iv(g))),
                m(m(m(m(m(m(P(m(iv(h), g)), iv(h)), P(iv(g))), g), P(g)), h), P(m(iv(g), h)))};
      case Variant::rGop:
        return {m(m(m(m(g, P(g)), h), P(iv(g))), iv(g)),
                m(m(P(m(m(g, iv(h)), iv(g))), g), P(m(m(g, h), iv(g))))};
      case Variant::rG1:
        return {m(m(P(iv(g)), h), P(g)), m(m(m(m(P(iv(g)), iv(h)), P(g)), g), h)};
      case Variant::rG1op:
        return {m(m(m(m(g, h), P(h)), iv(g)), P(iv(h))), m(m(P(h), g), P(iv(h)))};
    }
  }
  throw input_error("unknown variant");
}

YBSolution build_solution(const RegularFamily& f, Variant v, const Limits& limits) {
  auto profile = classify(f.host(), f.psi());
  if (!profile.central_for(f.epsilon())) {
    throw hypothesis_error(std::string("build_solution: hypothesis ") +
                           (f.epsilon() > 0 ? "psi([psi(G),G]) <= Z(G)"
                                            : "psi([[G,psi],G]) <= Z(G)") +
                           " fails");
  }
  if (f.epsilon() > 0 && (v == Variant::rG1 || v == Variant::rG1op) && !profile.derived_central) {
    throw hypothesis_error("build_solution: variant " + std::string(variant_name(v)) +
                           " additionally needs psi([G,G]) <= Z(G), which fails");
  }
  return YBSolution(f.host(), v, f.epsilon(), f.psi().images, limits);
}

std::pair<int, int> generic_solution(const SkewBrace& b, Variant v, int g, int h) {
  const Group& G = *b.host;
  switch (v) {
    case Variant::rG: {
      const int u = G.mul(G.inv(g), b.circ(g, h));
      return {u, b.circ(b.circ(b.bar(u), g), h)};
    }
    case Variant::rGop: {
      const int u = G.mul(b.circ(g, h), G.inv(g));
      return {u, b.circ(b.circ(b.bar(u), g), h)};
    }
    case Variant::rG1: {
      const int u = b.circ(b.bar(g), G.mul(g, h));
      return {u, G.mul(G.inv(u), G.mul(g, h))};
    }
    case Variant::rG1op: {
      const int u = b.circ(G.mul(g, h), b.bar(g));
      return {u, G.mul(G.inv(u), G.mul(g, h))};
    }
  }
  throw input_error("unknown variant");
}

bool matches_generic(const YBSolution& s, const SkewBrace& b) {
  const int n = s.host()->order();
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (s.r(g, h) != generic_solution(b, s.variant(), g, h)) return false;
    }
  }
  return true;
}

namespace {

using Triple = std::tuple<int, int, int>;

Triple r12(const YBSolution& s, const Triple& t) {
  auto [a, b, c] = t;
  auto [x, y] = s.r(a, b);
  return {x, y, c};
}

Triple r23(const YBSolution& s, const Triple& t) {
  auto [a, b, c] = t;
  auto [x, y] = s.r(b, c);
  return {a, x, y};
}

bool braid_at(const YBSolution& s, int g, int h, int k) {
  Triple t{g, h, k};
  return r12(s, r23(s, r12(s, t))) == r23(s, r12(s, r23(s, t)));
}

}  // namespace

BraidResult verify_braid(const YBSolution& s, const Limits& limits) {
  const int n = s.host()->order();
  BraidResult res;
  if (n <= limits.braid_cap) {
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) {
        for (int k = 0; k < n; ++k) {
          if (!braid_at(s, g, h, k)) {
            res.witness = {g, h, k};
            return res;
          }
        }
      }
    }
    res.ok = true;
    return res;
  }
  res.sampled = true;
  SampleRng rng(limits.seed);
  for (std::int64_t t = 0; t < limits.braid_samples; ++t) {
    int g = rng.below(n), h = rng.below(n), k = rng.below(n);
    if (!braid_at(s, g, h, k)) {
      res.witness = {g, h, k};
      return res;
    }
  }
  res.ok = true;
  return res;
}

bool r_bijective(const YBSolution& s) {
  const int n = s.host()->order();
  std::vector<char> hit(static_cast<std::size_t>(n) * n, 0);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      auto [x, y] = s.r(g, h);
      std::size_t id = static_cast<std::size_t>(x) * n + y;
      if (hit[id]) return false;
      hit[id] = 1;
    }
  }
  return true;
}

bool nondegenerate(const YBSolution& s) {
  const int n = s.host()->order();
  std::vector<char> seen(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < n; ++h) {
      int v = s.r(g, h).first;  // sigma_g
      if (seen[v]) return false;
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < n; ++h) {
      int v = s.r(h, g).second;  // tau_g
      if (seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

bool involutive(const YBSolution& s) {
  const int n = s.host()->order();
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      auto [x, y] = s.r(g, h);
      if (s.r(x, y) != std::pair<int, int>{g, h}) return false;
    }
  }
  return true;
}

PairingReport verify_pairings(const RegularFamily& f, const YBSolution& s1,
                              const YBSolution& s2) {
  PairingReport rep;
  const int n = f.host()->order();
  rep.mutual_inverse = true;
  rep.coincide = true;
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      auto [x, y] = s1.r(g, h);
      if (s2.r(x, y) != std::pair<int, int>{g, h}) rep.mutual_inverse = false;
      auto [a, b] = s2.r(g, h);
      if (s1.r(a, b) != std::pair<int, int>{g, h}) rep.mutual_inverse = false;
      if (std::pair<int, int>{x, y} != std::pair<int, int>{a, b}) rep.coincide = false;
    }
  }
  const bool dot_pair = s1.variant() == Variant::rG || s1.variant() == Variant::rGop;
  if (dot_pair) {
    rep.criterion = f.host()->is_abelian();
  } else {
    rep.criterion = true;
    for (int g = 0; g < n && rep.criterion; ++g) {
      for (int h = 0; h < n; ++h) {
        if (f.circle(g, h) != f.circle(h, g)) {
          rep.criterion = false;
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace endobrace
