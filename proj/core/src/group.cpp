#include "endobrace/group.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <unordered_map>

namespace endobrace {

namespace {

std::atomic<std::uint64_t> next_uid{1};

std::vector<int> close_under_mul(const Group& g, const std::vector<int>& seed) {
  const int n = g.order();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (int s : seed) {
    g.check_element(s);
    add(s);
  }
  // Every ordered pair is multiplied exactly once: when the outer index
  // reaches the later of the two members. A finite subset of a group closed
  // under multiplication is a subgroup.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul(members[i], members[j]));
      add(g.mul(members[j], members[i]));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

void require_same_host(const Subgroup& a, const Subgroup& b, const char* who) {
  if (!a.host || !b.host || a.host->uid() != b.host->uid()) {
    throw input_error(std::string(who) + ": subgroups of different hosts");
  }
}

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

Group::Group(std::string name, int order, std::vector<int> table, std::vector<int> inv)
    : name_(std::move(name)),
      n_(order),
      table_(std::move(table)),
      inv_(std::move(inv)),
      uid_(next_uid.fetch_add(1)) {}

GroupPtr Group::from_table(std::string name, int order, std::vector<int> table,
                           const Limits& limits) {
  if (order < 1) throw input_error("group order must be positive");
  const std::size_t n = static_cast<std::size_t>(order);
  if (table.size() != n * n) {
    throw input_error("Cayley table size does not match order " + std::to_string(order));
  }
  for (int v : table) {
    if (v < 0 || v >= order) throw input_error("Cayley table entry out of range");
  }
  auto at = [&](int g, int h) { return table[static_cast<std::size_t>(g) * n + h]; };

  for (int g = 0; g < order; ++g) {
    if (at(0, g) != g || at(g, 0) != g) {
      throw input_error("element 0 is not a two-sided identity");
    }
  }
  // Rows and columns must be permutations.
  std::vector<char> seen(n);
  for (int g = 0; g < order; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < order; ++h) {
      int v = at(g, h);
      if (seen[v]) throw input_error("row " + std::to_string(g) + " is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < order; ++h) {
      int v = at(h, g);
      if (seen[v]) throw input_error("column " + std::to_string(g) + " is not a permutation");
      seen[v] = 1;
    }
  }
  // Associativity: exhaustive at desk scale, randomized spot checks above.
  auto check_triple = [&](int g, int h, int k) {
    if (at(at(g, h), k) != at(g, at(h, k))) {
      throw input_error("Cayley table is not associative at (" + std::to_string(g) + "," +
                        std::to_string(h) + "," + std::to_string(k) + ")");
    }
  };
  if (order <= limits.assoc_cap) {
    for (int g = 0; g < order; ++g)
      for (int h = 0; h < order; ++h)
        for (int k = 0; k < order; ++k) check_triple(g, h, k);
  } else {
    SampleRng rng(limits.seed);
    for (std::int64_t t = 0; t < limits.assoc_samples; ++t) {
      check_triple(rng.below(order), rng.below(order), rng.below(order));
    }
  }
  std::vector<int> inv(n);
  for (int g = 0; g < order; ++g) {
    int found = -1;
    for (int h = 0; h < order; ++h) {
      if (at(g, h) == 0) {
        found = h;
        break;
      }
    }
    if (found < 0 || at(found, g) != 0) {
      throw input_error("element " + std::to_string(g) + " has no two-sided inverse");
    }
    inv[g] = found;
  }
  return GroupPtr(new Group(std::move(name), order, std::move(table), std::move(inv)));
}

void Group::check_element(int g) const {
  if (g < 0 || g >= n_) {
    throw input_error("element id " + std::to_string(g) + " out of range for group of order " +
                      std::to_string(n_));
  }
}

int Group::power(int g, long long e) const {
  check_element(g);
  int base = g;
  if (e < 0) {
    base = inv_[g];
    e = -e;
  }
  int acc = 0;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int Group::element_order(int g) const {
  check_element(g);
  int x = g;
  int k = 1;
  while (x != 0) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

int Group::exponent() const {
  long long e = 1;
  for (int g = 0; g < n_; ++g) e = lcm_ll(e, element_order(g));
  return static_cast<int>(e);
}

bool Group::is_abelian() const {
  for (int g = 0; g < n_; ++g)
    for (int h = g + 1; h < n_; ++h)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

int multiply(const Group& g, int a, int b) {
  g.check_element(a);
  g.check_element(b);
  return g.mul(a, b);
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

std::vector<char> Subgroup::mask() const {
  std::vector<char> m(static_cast<std::size_t>(host->order()), 0);
  for (int e : elements) m[e] = 1;
  return m;
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{std::move(g), {0}}; }

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> all(static_cast<std::size_t>(g->order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{std::move(g), std::move(all)};
}

Subgroup make_subgroup(GroupPtr g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) {
    throw input_error("subgroup must contain the identity");
  }
  std::vector<char> in(static_cast<std::size_t>(g->order()), 0);
  for (int e : elements) {
    g->check_element(e);
    in[e] = 1;
  }
  for (int a : elements) {
    if (!in[g->inv(a)]) throw input_error("subgroup not closed under inversion");
    for (int b : elements) {
      if (!in[g->mul(a, b)]) throw input_error("subgroup not closed under multiplication");
    }
  }
  return Subgroup{std::move(g), std::move(elements)};
}

Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens) {
  auto elems = close_under_mul(*g, gens);
  return Subgroup{std::move(g), std::move(elems)};
}

Subgroup center(GroupPtr g) {
  const int n = g->order();
  std::vector<int> z;
  for (int c = 0; c < n; ++c) {
    bool central = true;
    for (int h = 0; h < n; ++h) {
      if (g->mul(c, h) != g->mul(h, c)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(c);
  }
  return Subgroup{std::move(g), std::move(z)};
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_host(a, b, "commutator_subgroup");
  const Group& g = *a.host;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> gens;
  for (int x : a.elements) {
    for (int y : b.elements) {
      int c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  }
  return generated_subgroup(a.host, gens);
}

Subgroup derived_subgroup(GroupPtr g) {
  auto full = full_subgroup(g);
  return commutator_subgroup(full, full);
}

bool is_normal(const Subgroup& h) {
  const Group& g = *h.host;
  auto in = h.mask();
  for (int x = 0; x < g.order(); ++x) {
    for (int m : h.elements) {
      if (!in[g.conj(x, m)]) return false;
    }
  }
  return true;
}

bool subgroups_equal(const Subgroup& a, const Subgroup& b) {
  return a.host->uid() == b.host->uid() && a.elements == b.elements;
}

std::vector<Subgroup> lower_central_series(GroupPtr g) {
  std::vector<Subgroup> series;
  series.push_back(full_subgroup(g));
  auto full = full_subgroup(g);
  while (true) {
    Subgroup next = commutator_subgroup(series.back(), full);
    if (next.elements == series.back().elements) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<int> nilpotency_class(GroupPtr g) {
  auto series = lower_central_series(g);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

GroupMap make_homomorphism(GroupPtr source, GroupPtr target, std::vector<int> images) {
  const int n = source->order();
  if (static_cast<int>(images.size()) != n) {
    throw input_error("image table size does not match source order");
  }
  for (int v : images) target->check_element(v);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (images[source->mul(g, h)] != target->mul(images[g], images[h])) {
        throw input_error("map is not a homomorphism at pair (" + std::to_string(g) + "," +
                          std::to_string(h) + ")");
      }
    }
  }
  return GroupMap{std::move(source), std::move(target), std::move(images), true};
}

GroupMap identity_map(GroupPtr g) {
  std::vector<int> ids(static_cast<std::size_t>(g->order()));
  std::iota(ids.begin(), ids.end(), 0);
  return GroupMap{g, g, std::move(ids), true};
}

GroupMap zero_map(GroupPtr g) {
  std::vector<int> ids(static_cast<std::size_t>(g->order()), 0);
  return GroupMap{g, g, std::move(ids), true};
}

GroupMap compose_maps(const GroupMap& f, const GroupMap& g) {
  if (f.source->uid() != g.target->uid()) {
    throw input_error("compose_maps: inner source/target mismatch");
  }
  std::vector<int> images(g.images.size());
  for (std::size_t x = 0; x < g.images.size(); ++x) images[x] = f.images[g.images[x]];
  return GroupMap{g.source, f.target, std::move(images), f.is_homomorphism && g.is_homomorphism};
}

bool maps_equal(const GroupMap& f, const GroupMap& g) {
  return f.source->uid() == g.source->uid() && f.target->uid() == g.target->uid() &&
         f.images == g.images;
}

Subgroup kernel(const GroupMap& f) {
  if (!f.is_homomorphism) throw input_error("kernel: map is not a verified homomorphism");
  std::vector<int> elems;
  for (int g = 0; g < f.source->order(); ++g) {
    if (f.images[g] == 0) elems.push_back(g);
  }
  return make_subgroup(f.source, std::move(elems));
}

Subgroup image_subgroup(const GroupMap& f) {
  if (!f.is_homomorphism) throw input_error("image_subgroup: map is not a verified homomorphism");
  std::vector<int> elems(f.images);
  return make_subgroup(f.target, std::move(elems));
}

QuotientResult quotient(GroupPtr g, const Subgroup& n, const Limits& limits) {
  if (g->uid() != n.host->uid()) throw input_error("quotient: subgroup of a different host");
  if (!is_normal(n)) throw input_error("quotient: subgroup is not normal");
  const int order = g->order();
  std::vector<int> coset(static_cast<std::size_t>(order), -1);
  std::vector<int> reps;
  // Scanning ids in increasing order puts the identity coset first.
  for (int x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : n.elements) coset[g->mul(x, m)] = c;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      table[static_cast<std::size_t>(a) * q + b] = coset[g->mul(reps[a], reps[b])];
    }
  }
  GroupPtr qg = Group::from_table(g->name() + "/" + std::to_string(n.order()), q,
                                  std::move(table), limits);
  GroupMap proj = make_homomorphism(g, qg, std::move(coset));
  return QuotientResult{std::move(qg), std::move(proj)};
}

ProductResult direct_product(GroupPtr a, GroupPtr b, const Limits& limits) {
  const int na = a->order();
  const int nb = b->order();
  const int n = na * nb;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const int xa = x / nb, xb = x % nb;
    for (int y = 0; y < n; ++y) {
      const int ya = y / nb, yb = y % nb;
      table[static_cast<std::size_t>(x) * n + y] = a->mul(xa, ya) * nb + b->mul(xb, yb);
    }
  }
  GroupPtr p = Group::from_table(a->name() + "x" + b->name(), n, std::move(table), limits);

  std::vector<int> inj_a(static_cast<std::size_t>(na)), inj_b(static_cast<std::size_t>(nb));
  for (int x = 0; x < na; ++x) inj_a[x] = x * nb;
  for (int x = 0; x < nb; ++x) inj_b[x] = x;
  std::vector<int> prj_a(static_cast<std::size_t>(n)), prj_b(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    prj_a[x] = x / nb;
    prj_b[x] = x % nb;
  }
  return ProductResult{p, make_homomorphism(a, p, std::move(inj_a)),
                       make_homomorphism(b, p, std::move(inj_b)),
                       make_homomorphism(p, a, std::move(prj_a)),
                       make_homomorphism(p, b, std::move(prj_b))};
}

SubgroupGroup subgroup_as_group(const Subgroup& h, std::string name, const Limits& limits) {
  const Group& g = *h.host;
  const int m = h.order();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (int i = 0; i < m; ++i) local[h.elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      table[static_cast<std::size_t>(i) * m + j] = local[g.mul(h.elements[i], h.elements[j])];
    }
  }
  GroupPtr sub = Group::from_table(std::move(name), m, std::move(table), limits);
  GroupMap embed = make_homomorphism(sub, h.host, h.elements);
  return SubgroupGroup{std::move(sub), std::move(embed)};
}

namespace {

bool combination_generates(const Group& g, const std::vector<int>& gens) {
  return static_cast<int>(close_under_mul(g, gens).size()) == g.order();
}

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_generating_set(const Group& g, int max_size) {
  const int n = g.order();
  if (n == 1) return std::vector<int>{};
  for (int k = 1; k <= max_size; ++k) {
    if (k > n - 1) break;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 1);  // skip the identity
    do {
      if (combination_generates(g, idx)) return idx;
    } while (next_combination(idx, n));
  }
  return std::nullopt;
}

namespace {

// Breadth-first spanning data: each non-identity element reached as
// parent * gens[via].
struct WordTable {
  std::vector<int> bfs_order;
  std::vector<int> parent;
  std::vector<int> via;
};

WordTable build_word_table(const Group& g, const std::vector<int>& gens) {
  const int n = g.order();
  WordTable wt;
  wt.parent.assign(static_cast<std::size_t>(n), -1);
  wt.via.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  wt.bfs_order.push_back(0);
  for (std::size_t head = 0; head < wt.bfs_order.size(); ++head) {
    int x = wt.bfs_order[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = g.mul(x, gens[i]);
      if (!seen[y]) {
        seen[y] = 1;
        wt.parent[y] = x;
        wt.via[y] = static_cast<int>(i);
        wt.bfs_order.push_back(y);
      }
    }
  }
  return wt;
}

}  // namespace

std::optional<bool> is_isomorphic(const Group& a, const Group& b, const Limits& limits) {
  if (a.order() > limits.iso_cap || b.order() > limits.iso_cap) return std::nullopt;
  const int n = a.order();
  if (n != b.order()) return false;
  if (n == 1) return true;

  std::vector<int> ord_a(static_cast<std::size_t>(n)), ord_b(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    ord_a[x] = a.element_order(x);
    ord_b[x] = b.element_order(x);
  }
  {
    auto sa = ord_a, sb = ord_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }

  auto gens = find_generating_set(a, 4);
  if (!gens) return std::nullopt;  // would need a larger generating set than expected at this size
  auto wt = build_word_table(a, *gens);
  const int k = static_cast<int>(gens->size());

  std::vector<int> choice(static_cast<std::size_t>(k), 0);
  std::vector<int> phi(static_cast<std::size_t>(n));
  while (true) {
    bool order_ok = true;
    for (int i = 0; i < k && order_ok; ++i) {
      order_ok = ord_b[choice[i]] == ord_a[(*gens)[i]];
    }
    if (order_ok) {
      phi[0] = 0;
      for (std::size_t t = 1; t < wt.bfs_order.size(); ++t) {
        int x = wt.bfs_order[t];
        phi[x] = b.mul(phi[wt.parent[x]], choice[wt.via[x]]);
      }
      std::vector<char> hit(static_cast<std::size_t>(n), 0);
      bool bij = true;
      for (int x = 0; x < n && bij; ++x) {
        if (hit[phi[x]]) bij = false;
        hit[phi[x]] = 1;
      }
      if (bij) {
        bool hom = true;
        for (int x = 0; x < n && hom; ++x) {
          for (int y = 0; y < n; ++y) {
            if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) {
              hom = false;
              break;
            }
          }
        }
        if (hom) return true;
      }
    }
    int pos = k - 1;
    while (pos >= 0 && choice[pos] == n - 1) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++choice[pos];
  }
  return false;
}

}  // namespace endobrace
