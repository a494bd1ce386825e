#include "endobrace/regular.hpp"

#include <algorithm>

namespace endobrace {

RegularFamily::RegularFamily(GroupPtr host, GroupMap psi, int epsilon)
    : host_(std::move(host)), psi_(std::move(psi)), epsilon_(epsilon) {
  if (epsilon_ != 1 && epsilon_ != -1) throw input_error("epsilon must be +1 or -1");
  if (!psi_.is_homomorphism || psi_.source->uid() != host_->uid() ||
      psi_.target->uid() != host_->uid()) {
    throw input_error("RegularFamily: psi must be a verified endomorphism of the host");
  }
  const int n = host_->order();
  u_.resize(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    u_[g] = epsilon_ > 0 ? psi_.images[g] : host_->inv(psi_.images[g]);
  }
}

Perm RegularFamily::nu(int g) const {
  host_->check_element(g);
  return Perm{host_, nu_images(g)};
}

std::vector<int> RegularFamily::nu_images(int g) const {
  const int n = host_->order();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) images[h] = nu_apply(g, h);
  return images;
}

namespace {

// All nu tables materialized (rows) together with their inverses; only used
// below the exhaustive cap.
struct NuTables {
  int n;
  std::vector<int> nu;      // n*n, row g = images of nu(g)
  std::vector<int> nu_inv;  // n*n, row g = images of nu(g)^-1

  explicit NuTables(const RegularFamily& f) : n(f.host()->order()) {
    nu.resize(static_cast<std::size_t>(n) * n);
    nu_inv.resize(static_cast<std::size_t>(n) * n);
    for (int g = 0; g < n; ++g) {
      int* row = &nu[static_cast<std::size_t>(g) * n];
      int* inv_row = &nu_inv[static_cast<std::size_t>(g) * n];
      for (int h = 0; h < n; ++h) row[h] = f.nu_apply(g, h);
      for (int h = 0; h < n; ++h) inv_row[row[h]] = h;
    }
  }
  const int* row(int g) const { return &nu[static_cast<std::size_t>(g) * n]; }
  const int* inv_row(int g) const { return &nu_inv[static_cast<std::size_t>(g) * n]; }
};

template <typename PairFn>
OracleResult scan_pairs(const RegularFamily& f, const Limits& limits, PairFn&& in_family) {
  const int n = f.host()->order();
  OracleResult res;
  if (n <= limits.exhaustive_cap) {
    for (int g = 0; g < n; ++g) {
      for (int h = 0; h < n; ++h) {
        if (!in_family(g, h)) {
          res.witness = {g, h};
          return res;
        }
      }
    }
    res.value = true;
    return res;
  }
  res.sampled = true;
  SampleRng rng(limits.seed);
  for (std::int64_t t = 0; t < limits.samples; ++t) {
    int g = rng.below(n), h = rng.below(n);
    if (!in_family(g, h)) {
      res.witness = {g, h};
      return res;
    }
  }
  res.value = true;
  return res;
}

}  // namespace

OracleResult oracle_is_subgroup(const RegularFamily& f, const Limits& limits) {
  const Group& G = *f.host();
  const int n = G.order();
  if (n <= limits.exhaustive_cap) {
    NuTables t(f);
    return scan_pairs(f, limits, [&](int g, int h) {
      const int* ng = t.row(g);
      const int* nh_inv = t.inv_row(h);
      const int m = ng[nh_inv[0]];
      const int* nm = t.row(m);
      for (int x = 0; x < n; ++x) {
        if (ng[nh_inv[x]] != nm[x]) return false;
      }
      return true;
    });
  }
  // Sampled path: rows are rebuilt per pair.
  std::vector<int> ng(static_cast<std::size_t>(n)), nh_inv(static_cast<std::size_t>(n));
  return scan_pairs(f, limits, [&](int g, int h) {
    for (int x = 0; x < n; ++x) ng[x] = f.nu_apply(g, x);
    for (int x = 0; x < n; ++x) nh_inv[f.nu_apply(h, x)] = x;
    const int m = ng[nh_inv[0]];
    for (int x = 0; x < n; ++x) {
      if (ng[nh_inv[x]] != f.nu_apply(m, x)) return false;
    }
    return true;
  });
}

OracleResult oracle_normalized_by_lambda(const RegularFamily& f, const Limits& limits) {
  const Group& G = *f.host();
  const int n = G.order();
  if (n <= limits.exhaustive_cap) {
    NuTables t(f);
    return scan_pairs(f, limits, [&](int g, int h) {
      // pi = lambda(h) nu(g) lambda(h)^-1
      const int* ng = t.row(g);
      const int hi = G.inv(h);
      const int m = G.mul(h, ng[hi]);
      const int* nm = t.row(m);
      for (int x = 0; x < n; ++x) {
        if (G.mul(h, ng[G.mul(hi, x)]) != nm[x]) return false;
      }
      return true;
    });
  }
  return scan_pairs(f, limits, [&](int g, int h) {
    const int hi = G.inv(h);
    const int m = G.mul(h, f.nu_apply(g, hi));
    for (int x = 0; x < n; ++x) {
      if (G.mul(h, f.nu_apply(g, G.mul(hi, x))) != f.nu_apply(m, x)) return false;
    }
    return true;
  });
}

OracleResult oracle_normalizes_lambda(const RegularFamily& f, const Limits& limits) {
  const Group& G = *f.host();
  const int n = G.order();
  if (n <= limits.exhaustive_cap) {
    NuTables t(f);
    return scan_pairs(f, limits, [&](int g, int h) {
      // pi = nu(g) lambda(h) nu(g)^-1, tested against lambda(pi(1))
      const int* ng = t.row(g);
      const int* ng_inv = t.inv_row(g);
      const int m = ng[G.mul(h, ng_inv[0])];
      for (int x = 0; x < n; ++x) {
        if (ng[G.mul(h, ng_inv[x])] != G.mul(m, x)) return false;
      }
      return true;
    });
  }
  std::vector<int> ng(static_cast<std::size_t>(n)), ng_inv(static_cast<std::size_t>(n));
  return scan_pairs(f, limits, [&](int g, int h) {
    for (int x = 0; x < n; ++x) ng[x] = f.nu_apply(g, x);
    for (int x = 0; x < n; ++x) ng_inv[ng[x]] = x;
    const int m = ng[G.mul(h, ng_inv[0])];
    for (int x = 0; x < n; ++x) {
      if (ng[G.mul(h, ng_inv[x])] != G.mul(m, x)) return false;
    }
    return true;
  });
}

bool same_family(GroupPtr g, const GroupMap& psi1, const GroupMap& psi2, int epsilon) {
  auto p1 = classify(g, psi1);
  auto p2 = classify(g, psi2);
  if (!p1.central_for(epsilon)) {
    throw hypothesis_error("same_family: the first endomorphism fails the admissibility "
                           "condition for epsilon " + std::string(epsilon > 0 ? "+1" : "-1"));
  }
  if (!p2.central_for(epsilon)) {
    throw hypothesis_error("same_family: the second endomorphism fails the admissibility "
                           "condition for epsilon " + std::string(epsilon > 0 ? "+1" : "-1"));
  }
  auto z = center(g).mask();
  for (int x = 0; x < g->order(); ++x) {
    if (!z[g->mul(psi1.images[x], psi2.images[g->inv(x)])]) return false;
  }
  return true;
}

bool families_elementwise_equal(const RegularFamily& a, const RegularFamily& b) {
  if (a.host()->uid() != b.host()->uid()) return false;
  const int n = a.host()->order();
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (a.nu_apply(g, h) != b.nu_apply(g, h)) return false;
    }
  }
  return true;
}

FittingDecomposition fitting_decomposition(GroupPtr g, const GroupMap& psi) {
  if (!psi.is_homomorphism || psi.source->uid() != g->uid() || psi.target->uid() != g->uid()) {
    throw input_error("fitting_decomposition: expected a verified endomorphism of g");
  }
  GroupMap pw = psi;
  for (int n = 1;; ++n) {
    GroupMap next = compose_maps(psi, pw);
    auto ker_n = kernel(pw);
    auto ker_next = kernel(next);
    auto im_n = image_subgroup(pw);
    auto im_next = image_subgroup(next);
    if (ker_n.elements == ker_next.elements && im_n.elements == im_next.elements) {
      return FittingDecomposition{n, std::move(ker_n), std::move(im_n)};
    }
    pw = std::move(next);
  }
}

FittingChecks verify_fitting(const FittingDecomposition& d, GroupPtr g, const GroupMap& psi) {
  FittingChecks c;
  const Group& G = *g;
  c.j_normal = is_normal(d.j);

  std::vector<int> inter;
  std::set_intersection(d.j.elements.begin(), d.j.elements.end(), d.i.elements.begin(),
                        d.i.elements.end(), std::back_inserter(inter));
  c.trivial_intersection = inter == std::vector<int>{0};

  c.order_product = static_cast<long long>(d.j.order()) * d.i.order() == G.order();

  std::vector<char> covered(static_cast<std::size_t>(G.order()), 0);
  for (int a : d.j.elements) {
    for (int b : d.i.elements) covered[G.mul(a, b)] = 1;
  }
  c.product_covers = std::all_of(covered.begin(), covered.end(), [](char x) { return x == 1; });

  GroupMap pw = endo_power(psi, d.n);
  c.psi_nilpotent_on_j = std::all_of(d.j.elements.begin(), d.j.elements.end(),
                                     [&](int x) { return pw.images[x] == 0; });

  auto mask = d.i.mask();
  std::vector<char> hit(static_cast<std::size_t>(G.order()), 0);
  bool bij = true;
  for (int x : d.i.elements) {
    int y = psi.images[x];
    if (!mask[y] || hit[y]) {
      bij = false;
      break;
    }
    hit[y] = 1;
  }
  c.psi_bijective_on_i = bij;
  return c;
}

FamilyFittingChecks verify_fitting_family(const RegularFamily& f, const FittingDecomposition& d) {
  FamilyFittingChecks c;
  const int n = f.host()->order();

  std::vector<Perm> gens;
  gens.reserve(d.j.elements.size() + d.i.elements.size());
  for (int x : d.j.elements) gens.push_back(f.nu(x));
  for (int x : d.i.elements) gens.push_back(f.nu(x));
  auto closure = perm_closure(gens, static_cast<std::size_t>(n) + 1);

  c.closure_is_family = static_cast<int>(closure.size()) == n;
  if (c.closure_is_family) {
    for (const Perm& p : closure) {
      if (p != f.nu(p.images[0])) {
        c.closure_is_family = false;
        break;
      }
    }
  }

  // nu(J) normal under conjugation by every member of the family.
  auto j_mask = d.j.mask();
  c.nu_j_normal = true;
  for (int x = 0; x < n && c.nu_j_normal; ++x) {
    Perm nx = f.nu(x);
    Perm nx_inv = perm_inverse(nx);
    for (int j : d.j.elements) {
      Perm conj = perm_compose(perm_compose(nx, f.nu(j)), nx_inv);
      int m = conj.images[0];
      if (!j_mask[m] || conj != f.nu(m)) {
        c.nu_j_normal = false;
        break;
      }
    }
  }
  return c;
}

}  // namespace endobrace
