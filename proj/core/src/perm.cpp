#include "endobrace/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace endobrace {

namespace {

void require_same_host(const Perm& p, const Perm& q, const char* who) {
  if (!p.host || !q.host || p.host->uid() != q.host->uid()) {
    throw input_error(std::string(who) + ": permutations of different hosts");
  }
}

}  // namespace

bool operator==(const Perm& p, const Perm& q) {
  return p.host->uid() == q.host->uid() && p.images == q.images;
}

bool operator!=(const Perm& p, const Perm& q) { return !(p == q); }

Perm make_perm(GroupPtr host, std::vector<int> images) {
  const int n = host->order();
  if (static_cast<int>(images.size()) != n) {
    throw input_error("permutation image table size does not match host order");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : images) {
    host->check_element(v);
    if (seen[v]) throw input_error("permutation image table is not a bijection");
    seen[v] = 1;
  }
  return Perm{std::move(host), std::move(images)};
}

Perm identity_perm(GroupPtr host) {
  std::vector<int> ids(static_cast<std::size_t>(host->order()));
  std::iota(ids.begin(), ids.end(), 0);
  return Perm{std::move(host), std::move(ids)};
}

bool is_identity(const Perm& p) {
  for (int x = 0; x < p.degree(); ++x) {
    if (p.images[x] != x) return false;
  }
  return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  require_same_host(p, q, "perm_compose");
  std::vector<int> images(q.images.size());
  for (std::size_t x = 0; x < q.images.size(); ++x) images[x] = p.images[q.images[x]];
  return Perm{p.host, std::move(images)};
}

Perm perm_inverse(const Perm& p) {
  std::vector<int> images(p.images.size());
  for (std::size_t x = 0; x < p.images.size(); ++x) images[p.images[x]] = static_cast<int>(x);
  return Perm{p.host, std::move(images)};
}

Perm lambda_perm(GroupPtr host, int g) {
  host->check_element(g);
  const int n = host->order();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) images[h] = host->mul(g, h);
  return Perm{std::move(host), std::move(images)};
}

Perm rho_perm(GroupPtr host, int g) {
  host->check_element(g);
  const int n = host->order();
  const int gi = host->inv(g);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) images[h] = host->mul(h, gi);
  return Perm{std::move(host), std::move(images)};
}

Perm iota_perm(GroupPtr host, int g) {
  host->check_element(g);
  const int n = host->order();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) images[h] = host->conj(g, h);
  return Perm{std::move(host), std::move(images)};
}

std::tuple<Perm, Perm, Perm> lambda_rho_iota(GroupPtr host, int g) {
  return {lambda_perm(host, g), rho_perm(host, g), iota_perm(host, g)};
}

std::vector<Perm> perm_closure(const std::vector<Perm>& gens, std::size_t max_size) {
  if (gens.empty()) return {};
  std::set<std::vector<int>> seen;
  std::vector<Perm> members;
  auto add = [&](Perm p) {
    if (seen.insert(p.images).second) members.push_back(std::move(p));
  };
  add(identity_perm(gens.front().host));
  for (const Perm& g : gens) add(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members.size() > max_size) break;
    for (std::size_t j = 0; j <= i; ++j) {
      add(perm_compose(members[i], members[j]));
      add(perm_compose(members[j], members[i]));
    }
  }
  return members;
}

std::vector<Perm> centralizer_of_regular(const std::vector<Perm>& family) {
  std::vector<Perm> result;
  if (family.empty()) return result;
  GroupPtr host = family.front().host;
  const int n = host->order();

  for (int t = 0; t < n; ++t) {
    // A centralizing pi with pi(0) = t must satisfy pi(eta(0)) = eta(t).
    std::vector<int> cand(static_cast<std::size_t>(n), -1);
    bool ok = true;
    for (const Perm& eta : family) {
      int from = eta.images[0];
      int to = eta.images[t];
      if (cand[from] >= 0 && cand[from] != to) {
        ok = false;
        break;
      }
      cand[from] = to;
    }
    if (!ok) continue;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n && ok; ++x) {
      ok = cand[x] >= 0 && !hit[cand[x]];
      if (ok) hit[cand[x]] = 1;
    }
    if (!ok) continue;
    for (const Perm& eta : family) {
      for (int x = 0; x < n && ok; ++x) {
        ok = cand[eta.images[x]] == eta.images[cand[x]];
      }
      if (!ok) break;
    }
    if (ok) result.push_back(Perm{host, std::move(cand)});
  }
  return result;
}

}  // namespace endobrace
