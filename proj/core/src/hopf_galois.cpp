#include "endobrace/hopf_galois.hpp"

#include <algorithm>
#include <sstream>

#include "endobrace/zoo.hpp"

namespace endobrace {

Perm nu_prime(const RegularFamily& f, int g) {
  f.host()->check_element(g);
  const int n = f.host()->order();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) images[h] = f.circle(h, g);
  return Perm{f.host(), std::move(images)};
}

std::vector<Perm> opposite_subgroup(const RegularFamily& f) {
  auto profile = classify(f.host(), f.psi());
  if (!profile.central_for(f.epsilon())) {
    throw hypothesis_error("opposite_subgroup: the family is not a subgroup");
  }
  const int n = f.host()->order();
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    Perm p = nu_prime(f, g);
    if (p.images[0] != g) {
      throw input_error("opposite_subgroup: family is not regular at " + std::to_string(g));
    }
    out.push_back(std::move(p));
  }
  return out;
}

Perm member_perm(const RegularFamily& f, const SpecialSubgroup& s, int g) {
  switch (s.kind) {
    case SpecialSubgroup::Kind::lambda_of_g: return lambda_perm(f.host(), g);
    case SpecialSubgroup::Kind::rho_of_g_inv: return rho_perm(f.host(), f.host()->inv(g));
    case SpecialSubgroup::Kind::nu_of_g: return f.nu(g);
    case SpecialSubgroup::Kind::nu_prime_of_g: return nu_prime(f, g);
  }
  throw input_error("member_perm: bad kind");
}

namespace {

// Closure, lambda-conjugation and lambda-action flags. Every member shape
// used here sends 1 to its index, so a conjugate or product is located by
// its value at 1 and then compared elementwise.
void fill_subgroup_flags(const RegularFamily& f, SpecialSubgroup& s) {
  const Group& G = *f.host();
  const int n = G.order();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int g : s.g_elements) in[g] = 1;

  std::vector<Perm> members;
  members.reserve(s.g_elements.size());
  for (int g : s.g_elements) members.push_back(member_perm(f, s, g));

  s.closed = true;
  for (const Perm& a : members) {
    if (!s.closed) break;
    for (const Perm& b : members) {
      Perm ab = perm_compose(a, b);
      int m = ab.images[0];
      if (!in[m] || ab != member_perm(f, s, m)) {
        s.closed = false;
        break;
      }
    }
  }

  s.normalized_by_lambda = true;
  s.trivial_lambda_action = true;
  for (int h = 0; h < n && s.normalized_by_lambda; ++h) {
    Perm lh = lambda_perm(f.host(), h);
    Perm lh_inv = perm_inverse(lh);
    for (std::size_t i = 0; i < members.size(); ++i) {
      Perm conj = perm_compose(perm_compose(lh, members[i]), lh_inv);
      if (conj != members[i]) s.trivial_lambda_action = false;
      int m = conj.images[0];
      if (!in[m] || conj != member_perm(f, s, m)) {
        s.normalized_by_lambda = false;
        break;
      }
    }
  }
}

}  // namespace

HGReport special_subgroups(const RegularFamily& f, const Limits& limits) {
  auto profile = classify(f.host(), f.psi());
  if (!profile.central_for(f.epsilon())) {
    throw hypothesis_error(std::string("special_subgroups: psi fails ") +
                           (f.epsilon() > 0 ? "psi([psi(G),G]) <= Z(G)"
                                            : "psi([[G,psi],G]) <= Z(G)"));
  }
  const Group& G = *f.host();
  const int n = G.order();
  HGReport rep;
  rep.epsilon = f.epsilon();

  auto push = [&](std::string name, SpecialSubgroup::Kind kind, std::vector<int> elems) {
    SpecialSubgroup s;
    s.name = std::move(name);
    s.kind = kind;
    std::sort(elems.begin(), elems.end());
    s.g_elements = std::move(elems);
    fill_subgroup_flags(f, s);
    rep.subgroups.push_back(std::move(s));
  };

  push("N0", SpecialSubgroup::Kind::lambda_of_g, kernel(f.psi()).elements);

  std::vector<int> fixed;
  for (int g = 0; g < n; ++g) {
    if (f.psi().images[g] == g) fixed.push_back(g);
  }
  if (f.epsilon() < 0) {
    push("N1", SpecialSubgroup::Kind::rho_of_g_inv, fixed);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> prod;
    for (int a : kernel(f.psi()).elements) {
      for (int b : fixed) {
        int x = G.mul(a, b);
        if (!seen[x]) {
          seen[x] = 1;
          prod.push_back(x);
        }
      }
    }
    push("N01", SpecialSubgroup::Kind::nu_of_g, std::move(prod));
  }

  // Members that coincide with a plain left/right translation, found by
  // direct permutation comparison.
  std::vector<int> lam, pts;
  for (int g = 0; g < n; ++g) {
    Perm ng = f.nu(g);
    if (ng == lambda_perm(f.host(), g)) lam.push_back(g);
    if (ng == rho_perm(f.host(), G.inv(g))) pts.push_back(g);
  }
  push("LambdaN", SpecialSubgroup::Kind::lambda_of_g, std::move(lam));
  push("PN", SpecialSubgroup::Kind::rho_of_g_inv, std::move(pts));

  {
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) all[g] = g;
    push("Nprime", SpecialSubgroup::Kind::nu_prime_of_g, std::move(all));
  }

  SkewBrace b = brace_from_family(f, limits);
  GroupPtr circ = b.verified.circle_is_group ? circle_group(b, limits) : nullptr;
  if (circ) {
    auto label = identify_group(*circ, limits);
    if (label) {
      rep.type_of_n = *label;
      rep.type_is_label = true;
    } else {
      rep.type_of_n = group_invariants_label(circ);
    }
  } else {
    rep.type_of_n = "circle operation is not a group";
  }
  return rep;
}

IdempotentType idempotent_type(const RegularFamily& f, const Limits& limits) {
  if (!is_idempotent(*f.host(), f.psi())) {
    throw hypothesis_error("idempotent_type: psi is not idempotent");
  }
  if (f.epsilon() != -1) {
    throw hypothesis_error("idempotent_type: defined for epsilon = -1");
  }
  auto profile = classify(f.host(), f.psi());
  if (!profile.neg_central) {
    throw hypothesis_error("idempotent_type: psi fails psi([[G,psi],G]) <= Z(G)");
  }
  const Group& G = *f.host();
  const int n = G.order();
  auto ker = kernel(f.psi());
  auto img = image_subgroup(f.psi());

  // For idempotent psi the image is exactly the fixed-point set.
  for (int x : img.elements) {
    if (f.psi().images[x] != x) {
      throw input_error("idempotent_type: image contains a non-fixed point");
    }
  }

  IdempotentType out;
  out.kernel_order = ker.order();
  out.image_order = img.order();

  // Unique factorization g = g0 * g1 with g0 in the kernel, g1 in the image.
  auto ker_mask = ker.mask();
  std::vector<int> part0(static_cast<std::size_t>(n), -1), part1(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    int count = 0;
    for (int g1 : img.elements) {
      int g0 = G.mul(g, G.inv(g1));
      if (ker_mask[g0]) {
        part0[g] = g0;
        part1[g] = g1;
        ++count;
      }
    }
    if (count != 1) {
      throw input_error("idempotent_type: factorization over kernel x image is not unique");
    }
  }

  auto kg = subgroup_as_group(ker, "ker", limits);
  auto ig = subgroup_as_group(img, "im", limits);
  auto prod = direct_product(kg.group, ig.group, limits);

  std::vector<int> to_local_k(static_cast<std::size_t>(n), -1),
      to_local_i(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < ker.order(); ++i) to_local_k[ker.elements[i]] = i;
  for (int i = 0; i < img.order(); ++i) to_local_i[img.elements[i]] = i;

  // phi : circle group -> (ker x im), g -> (g0, g1); verified bijective
  // homomorphism.
  const int ni = ig.group->order();
  std::vector<int> phi(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) phi[g] = to_local_k[part0[g]] * ni + to_local_i[part1[g]];
  SkewBrace b = circle_from_family(f, limits);
  GroupPtr circ = circle_group(b, limits);
  GroupMap iso = make_homomorphism(circ, prod.group, phi);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int g = 0; g < n; ++g) {
    if (hit[iso.images[g]]) throw input_error("idempotent_type: phi is not a bijection");
    hit[iso.images[g]] = 1;
  }
  out.verified = true;

  auto k_label = identify_group(*kg.group, limits);
  auto i_label = identify_group(*ig.group, limits);
  std::ostringstream os;
  os << "N = ker(psi) x im(psi), orders " << ker.order() << " x " << img.order();
  os << "; ker = " << (k_label ? *k_label : group_invariants_label(kg.group));
  os << "; im = " << (i_label ? *i_label : group_invariants_label(ig.group));
  out.description = os.str();
  return out;
}

GroupMap fpf_isomorphism(const RegularFamily& f, const Limits& limits) {
  const Group& G = *f.host();
  if (!is_fixed_point_free(G, f.psi())) {
    throw hypothesis_error("fpf_isomorphism: psi has a nontrivial fixed point");
  }
  auto profile = classify(f.host(), f.psi());
  if (!profile.vanishing_for(f.epsilon())) {
    throw hypothesis_error(std::string("fpf_isomorphism: hypothesis ") +
                           (f.epsilon() > 0 ? "psi([psi(G),G]) = 1"
                                            : "psi([[G,psi],G]) = 1") +
                           " fails");
  }
  const int n = G.order();
  std::vector<int> alpha(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    alpha[g] = f.epsilon() > 0 ? G.mul(g, f.psi().images[g])
                               : G.mul(g, G.inv(f.psi().images[g]));
  }
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v : alpha) {
    if (hit[v]) throw input_error("fpf_isomorphism: alpha is not a bijection");
    hit[v] = 1;
  }
  SkewBrace b = circle_from_family(f, limits);
  GroupPtr circ = circle_group(b, limits);
  return make_homomorphism(circ, f.host(), std::move(alpha));
}

bool check_G_equivariance(const RegularFamily& f, const std::vector<int>& alpha) {
  const Group& G = *f.host();
  const int n = G.order();
  std::vector<int> ng(static_cast<std::size_t>(n)), conj(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    for (int x = 0; x < n; ++x) ng[x] = f.nu_apply(g, x);
    for (int h = 0; h < n; ++h) {
      const int hi = G.inv(h);
      for (int x = 0; x < n; ++x) conj[x] = G.mul(h, ng[G.mul(hi, x)]);
      const int m = conj[0];
      for (int x = 0; x < n; ++x) {
        if (conj[x] != f.nu_apply(m, x)) return false;  // conjugate left the family
      }
      if (alpha[m] != G.conj(h, alpha[g])) return false;
    }
  }
  return true;
}

}  // namespace endobrace
