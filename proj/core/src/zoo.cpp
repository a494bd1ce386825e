#include "endobrace/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace endobrace {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long long atom_order(const ZooSpec& spec) {
  switch (spec.family) {
    case ZooFamily::cyclic:
      return spec.params.at(0);
    case ZooFamily::dihedral:
      return spec.params.at(0);
    case ZooFamily::quaternion:
      return spec.params.at(0);
    case ZooFamily::heisenberg: {
      long long p = spec.params.at(0);
      return p * p * p;
    }
    case ZooFamily::unitriangular: {
      long long n = spec.params.at(0), p = spec.params.at(1);
      long long e = n * (n - 1) / 2;
      long long o = 1;
      for (long long i = 0; i < e; ++i) o *= p;
      return o;
    }
    case ZooFamily::product: {
      long long o = 1;
      for (const auto& c : spec.children) o *= atom_order(c);
      return o;
    }
    case ZooFamily::quotient:
      return atom_order(spec.children.at(0));  // upper bound
  }
  return 0;
}

}  // namespace

GroupPtr build_cyclic(int order, const Limits& limits) {
  if (order < 1) throw input_error("cyclic: order must be positive");
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      table[static_cast<std::size_t>(i) * order + j] = (i + j) % order;
  return Group::from_table("C" + std::to_string(order), order, std::move(table), limits);
}

// ids 0..m-1 are r^k, ids m..2m-1 are s*r^(k-m), with s*r^a*s = r^-a.
GroupPtr build_dihedral(int order, const Limits& limits) {
  if (order < 2 || order % 2 != 0) throw input_error("dihedral: order must be even and >= 2");
  const int m = order / 2;
  auto rot = [&](int a) { return ((a % m) + m) % m; };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      int v;
      if (x < m && y < m) {
        v = rot(x + y);
      } else if (x < m) {
        v = m + rot((y - m) - x);
      } else if (y < m) {
        v = m + rot((x - m) + y);
      } else {
        v = rot((y - m) - (x - m));
      }
      table[static_cast<std::size_t>(x) * order + y] = v;
    }
  }
  return Group::from_table("D" + std::to_string(order), order, std::move(table), limits);
}

// Generalized quaternion/dicyclic of order 4m: a of order 2m, b^2 = a^m,
// b a b^-1 = a^-1. ids 0..2m-1 are a^k, ids 2m..4m-1 are b*a^(k-2m).
GroupPtr build_quaternion(int order, const Limits& limits) {
  if (order < 8 || order % 4 != 0) {
    throw input_error("quaternion: order must be a multiple of 4 and >= 8");
  }
  const int m2 = order / 2;  // order of a
  const int m = order / 4;
  auto rot = [&](int a) { return ((a % m2) + m2) % m2; };
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      int v;
      if (x < m2 && y < m2) {
        v = rot(x + y);
      } else if (x < m2) {
        v = m2 + rot((y - m2) - x);
      } else if (y < m2) {
        v = m2 + rot((x - m2) + y);
      } else {
        v = rot(m + (y - m2) - (x - m2));
      }
      table[static_cast<std::size_t>(x) * order + y] = v;
    }
  }
  return Group::from_table("Q" + std::to_string(order), order, std::move(table), limits);
}

// Triples (x, y, z) over F_p with (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
GroupPtr build_heisenberg(int p, const Limits& limits) {
  if (!is_prime(p)) throw input_error("heisenberg: parameter must be prime");
  const int n = p * p * p;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    const int x = g / (p * p), y = (g / p) % p, z = g % p;
    for (int h = 0; h < n; ++h) {
      const int x2 = h / (p * p), y2 = (h / p) % p, z2 = h % p;
      const int xv = (x + x2) % p, yv = (y + y2) % p, zv = (z + z2 + x * y2) % p;
      table[static_cast<std::size_t>(g) * n + h] = (xv * p + yv) * p + zv;
    }
  }
  return Group::from_table("H" + std::to_string(p), n, std::move(table), limits);
}

GroupPtr build_unitriangular(int n, int p, const Limits& limits) {
  if (n < 2) throw input_error("unitriangular: dimension must be >= 2");
  if (!is_prime(p)) throw input_error("unitriangular: characteristic must be prime");
  const int slots = n * (n - 1) / 2;
  long long order_ll = 1;
  for (int i = 0; i < slots; ++i) order_ll *= p;
  if (order_ll > (1 << 20)) throw input_error("unitriangular: group too large");
  const int order = static_cast<int>(order_ll);

  std::vector<std::pair<int, int>> pos;  // strictly upper positions, row-major
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);

  auto decode = [&](int id, std::vector<int>& mat) {
    std::fill(mat.begin(), mat.end(), 0);
    for (int i = 0; i < n; ++i) mat[i * n + i] = 1;
    for (int t = slots - 1; t >= 0; --t) {
      mat[pos[t].first * n + pos[t].second] = id % p;
      id /= p;
    }
  };
  auto encode = [&](const std::vector<int>& mat) {
    int id = 0;
    for (int t = 0; t < slots; ++t) id = id * p + mat[pos[t].first * n + pos[t].second];
    return id;
  };

  std::vector<int> a(static_cast<std::size_t>(n) * n), b(a.size()), c(a.size());
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int g = 0; g < order; ++g) {
    decode(g, a);
    for (int h = 0; h < order; ++h) {
      decode(h, b);
      for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
          int s = 0;
          for (int k = i; k <= j; ++k) s += a[i * n + k] * b[k * n + j];
          c[i * n + j] = s % p;
        }
      }
      table[static_cast<std::size_t>(g) * order + h] = encode(c);
    }
  }
  return Group::from_table("U" + std::to_string(n) + "_" + std::to_string(p), order,
                           std::move(table), limits);
}

namespace {

Subgroup lower_central_term(GroupPtr g, int k) {
  auto series = lower_central_series(g);
  const int idx = std::min<int>(k - 1, static_cast<int>(series.size()) - 1);
  if (k < 1) throw input_error("quotient: lower-central index must be >= 1");
  return series[static_cast<std::size_t>(idx)];
}

}  // namespace

GroupPtr build(const ZooSpec& spec, const Limits& limits) {
  if (atom_order(spec) > limits.zoo_order_cap) {
    throw input_error("zoo: resulting order exceeds the cap of " +
                      std::to_string(limits.zoo_order_cap));
  }
  switch (spec.family) {
    case ZooFamily::cyclic:
      return build_cyclic(spec.params.at(0), limits);
    case ZooFamily::dihedral:
      return build_dihedral(spec.params.at(0), limits);
    case ZooFamily::quaternion:
      return build_quaternion(spec.params.at(0), limits);
    case ZooFamily::heisenberg:
      return build_heisenberg(spec.params.at(0), limits);
    case ZooFamily::unitriangular:
      return build_unitriangular(spec.params.at(0), spec.params.at(1), limits);
    case ZooFamily::product: {
      if (spec.children.size() < 2) throw input_error("product: needs at least two factors");
      GroupPtr acc = build(spec.children[0], limits);
      for (std::size_t i = 1; i < spec.children.size(); ++i) {
        acc = direct_product(acc, build(spec.children[i], limits), limits).group;
      }
      return acc;
    }
    case ZooFamily::quotient: {
      if (spec.children.size() != 1 || spec.params.size() != 1) {
        throw input_error("quotient: needs one group and one lower-central index");
      }
      GroupPtr base = build(spec.children[0], limits);
      return quotient(base, lower_central_term(base, spec.params[0]), limits).group;
    }
  }
  throw input_error("zoo: unknown family");
}

namespace {

struct SpecParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (start == pos) throw input_error("zoo spec: expected a name at position " +
                                        std::to_string(start) + " in '" + text + "'");
    return text.substr(start, pos - start);
  }

  int number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw input_error("zoo spec: expected a number in '" + text + "'");
    return std::stoi(text.substr(start, pos - start));
  }

  bool peek_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  ZooSpec parse_spec() {
    std::string name = ident();
    ZooSpec spec;
    if (name == "cyclic") spec.family = ZooFamily::cyclic;
    else if (name == "dihedral") spec.family = ZooFamily::dihedral;
    else if (name == "quaternion") spec.family = ZooFamily::quaternion;
    else if (name == "heisenberg") spec.family = ZooFamily::heisenberg;
    else if (name == "unitriangular") spec.family = ZooFamily::unitriangular;
    else if (name == "product") spec.family = ZooFamily::product;
    else if (name == "quotient") spec.family = ZooFamily::quotient;
    else throw input_error("zoo spec: unknown family '" + name + "'");

    if (!eat('(')) throw input_error("zoo spec: expected '(' after '" + name + "'");
    bool first = true;
    while (!eat(')')) {
      if (!first && !eat(',')) throw input_error("zoo spec: expected ',' or ')' in '" + text + "'");
      first = false;
      if (spec.family == ZooFamily::product) {
        spec.children.push_back(parse_spec());
      } else if (spec.family == ZooFamily::quotient) {
        if (spec.children.empty()) spec.children.push_back(parse_spec());
        else spec.params.push_back(number());
      } else {
        spec.params.push_back(number());
      }
    }
    return spec;
  }
};

ZooSpec parse_colon_form(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ':' || c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  if (parts.empty()) throw input_error("zoo spec: empty");
  std::string functional = parts[0] + "(";
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (i > 1) functional += ",";
    functional += parts[i];
  }
  functional += ")";
  SpecParser p{functional};
  return p.parse_spec();
}

}  // namespace

ZooSpec parse_zoo_spec(const std::string& text) {
  std::string body = text;
  if (body.rfind("zoo:", 0) == 0) body = body.substr(4);
  if (body.find('(') != std::string::npos) {
    SpecParser p{body};
    ZooSpec spec = p.parse_spec();
    p.skip_ws();
    if (p.pos != body.size()) throw input_error("zoo spec: trailing input in '" + text + "'");
    return spec;
  }
  return parse_colon_form(body);
}

GroupPtr build_zoo(const std::string& text, const Limits& limits) {
  return build(parse_zoo_spec(text), limits);
}

std::string zoo_list_text() {
  std::ostringstream os;
  os << "zoo families:\n"
     << "  cyclic(n)             cyclic group of order n\n"
     << "  dihedral(n)           dihedral group of order n (n even)\n"
     << "  quaternion(n)         generalized quaternion/dicyclic group of order n (4 | n)\n"
     << "  heisenberg(p)         order p^3, class 2 (p prime)\n"
     << "  unitriangular(n,p)    upper unitriangular n x n matrices over F_p\n"
     << "  product(a,b,...)      direct product of zoo specs\n"
     << "  quotient(a,k)         a modulo the k-th lower central series term\n"
     << "flat form: zoo:cyclic:6, zoo:unitriangular:4,2\n\n"
     << "named examples (group, endomorphism, sign):\n";
  for (const auto& name : paper_example_names()) {
    auto ex = paper_example(name);
    os << "  paper:" << name << "  (order " << ex.group->order() << ", epsilon "
       << (ex.epsilon > 0 ? "+1" : "-1") << "; " << ex.note << ")\n";
  }
  return os.str();
}

namespace {

// Projection between two lower-central quotients of the same base group:
// lifts through the first projection, pushes down the second.
GroupMap induced_projection(const GroupMap& onto_t, const GroupMap& onto_u) {
  const int nt = onto_t.target->order();
  std::vector<int> images(static_cast<std::size_t>(nt), -1);
  for (int s = 0; s < onto_t.source->order(); ++s) {
    int t = onto_t.images[s];
    if (images[t] < 0) images[t] = onto_u.images[s];
  }
  return make_homomorphism(onto_t.target, onto_u.target, std::move(images));
}

PaperExample make_identity_example(const std::string& name, int epsilon, const Limits& limits) {
  GroupPtr g = build_dihedral(8, limits);
  return PaperExample{name, g, identity_map(g), epsilon,
                      "identity endomorphism on the dihedral group of order 8"};
}

// G = S x S with S = dihedral(8); psi(a, b) = (1, b).
PaperExample make_neg_proj(const Limits& limits) {
  GroupPtr s = build_dihedral(8, limits);
  auto prod = direct_product(s, s, limits);
  const int ns = s->order();
  const int n = prod.group->order();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) images[g] = g % ns;
  return PaperExample{"ex-neg-proj", prod.group,
                      make_homomorphism(prod.group, prod.group, std::move(images)), -1,
                      "projection onto the second factor of S x S, S = dihedral(8)"};
}

// G = S x S x T with S = dihedral(16), T = S modulo its third lower-central
// term; psi(a, b, c) = (a, a, pi(b)).
PaperExample make_neg_class3(const Limits& limits) {
  GroupPtr s = build_dihedral(16, limits);
  auto series = lower_central_series(s);
  auto qt = quotient(s, series.at(2), limits);
  GroupPtr t = qt.group;
  auto ss = direct_product(s, s, limits);
  auto sst = direct_product(ss.group, t, limits);
  const int ns = s->order(), nt = t->order();
  const int n = sst.group->order();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    const int ab = g / nt;
    const int a = ab / ns, b = ab % ns;
    images[g] = (a * ns + a) * nt + qt.projection.images[b];
  }
  return PaperExample{"ex-neg-class3", sst.group,
                      make_homomorphism(sst.group, sst.group, std::move(images)), -1,
                      "psi(a,b,c) = (a, a, pi(b)) on S x S x T, S = dihedral(16), T = S/gamma3"};
}

// dihedral(8) automorphism fixing the rotation and twisting the reflection.
PaperExample make_pos_class2(const Limits& limits) {
  GroupPtr g = build_dihedral(8, limits);
  std::vector<int> images(8);
  for (int x = 0; x < 4; ++x) images[x] = x;
  for (int x = 4; x < 8; ++x) images[x] = 4 + ((x - 4 + 1) % 4);
  return PaperExample{"ex-pos-class2", g, make_homomorphism(g, g, std::move(images)), +1,
                      "automorphism r -> r, s -> s*r of the dihedral group of order 8"};
}

// G = S x T with S = dihedral(16), T = S/gamma3; psi(x, y) = (1, pi(x)).
PaperExample make_pos_class3(const Limits& limits) {
  GroupPtr s = build_dihedral(16, limits);
  auto series = lower_central_series(s);
  auto qt = quotient(s, series.at(2), limits);
  GroupPtr t = qt.group;
  auto st = direct_product(s, t, limits);
  const int nt = t->order();
  const int n = st.group->order();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) images[g] = qt.projection.images[g / nt];
  return PaperExample{"ex-pos-class3", st.group,
                      make_homomorphism(st.group, st.group, std::move(images)), +1,
                      "psi(x,y) = (1, pi(x)) on S x T, S = dihedral(16), T = S/gamma3"};
}

// Shared shape of the two staircase examples: G = S x T x U with T, U
// successive lower-central quotients of S, and psi(a,b,c) = (1, pi(a),
// sigma(b)).
PaperExample make_staircase(const std::string& name, int s_order, int t_term, int u_term,
                            const std::string& note, const Limits& limits) {
  GroupPtr s = build_dihedral(s_order, limits);
  auto series = lower_central_series(s);
  auto qt = quotient(s, series.at(static_cast<std::size_t>(t_term - 1)), limits);
  auto qu = quotient(s, series.at(static_cast<std::size_t>(u_term - 1)), limits);
  GroupPtr t = qt.group;
  GroupPtr u = qu.group;
  GroupMap sigma = induced_projection(qt.projection, qu.projection);

  auto st = direct_product(s, t, limits);
  auto stu = direct_product(st.group, u, limits);
  const int nt = t->order(), nu = u->order();
  const int n = stu.group->order();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    const int ab = g / nu;
    const int a = ab / nt, b = ab % nt;
    images[g] = (0 * nt + qt.projection.images[a]) * nu + sigma.images[b];
  }
  return PaperExample{name, stu.group,
                      make_homomorphism(stu.group, stu.group, std::move(images)), +1, note};
}

}  // namespace

std::vector<std::string> paper_example_names() {
  return {"ex-neg-identity", "ex-neg-proj",   "ex-neg-class3",
          "ex-pos-identity", "ex-pos-class2", "ex-pos-class3",
          "ex-pos-class3-fpf-variant", "ex-pos-class4"};
}

PaperExample paper_example(const std::string& name, const Limits& limits) {
  if (name == "ex-neg-identity") return make_identity_example(name, -1, limits);
  if (name == "ex-pos-identity") return make_identity_example(name, +1, limits);
  if (name == "ex-neg-proj") return make_neg_proj(limits);
  if (name == "ex-neg-class3") return make_neg_class3(limits);
  if (name == "ex-pos-class2") return make_pos_class2(limits);
  if (name == "ex-pos-class3") return make_pos_class3(limits);
  if (name == "ex-pos-class3-fpf-variant") {
    return make_staircase(name, 16, 3, 2,
                          "fixed-point-free psi(a,b,c) = (1, pi(a), sigma(b)) on S x T x U, "
                          "S = dihedral(16)",
                          limits);
  }
  if (name == "ex-pos-class4") {
    return make_staircase(name, 32, 4, 3,
                          "psi(a,b,c) = (1, pi(a), sigma(b)) on S x T x U, S = dihedral(32)",
                          limits);
  }
  throw input_error("unknown example name '" + name + "'");
}

namespace {

void abelian_factorizations(int m, int min_factor, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out);

// All multisets of prime-power cyclic factors with the given product. Small
// orders only, so brute recursion is fine.
void abelian_factorizations(int m, int min_factor, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (m == 1) {
    out.push_back(cur);
    return;
  }
  for (int f = min_factor; f <= m; ++f) {
    if (m % f != 0) continue;
    bool prime_power = false;
    for (int p = 2; p <= f; ++p) {
      if (is_prime(p)) {
        int v = f;
        while (v % p == 0) v /= p;
        if (v == 1) {
          prime_power = true;
          break;
        }
      }
    }
    if (!prime_power) continue;
    cur.push_back(f);
    abelian_factorizations(m / f, f, cur, out);
    cur.pop_back();
  }
}

struct Candidate {
  std::string label;
  GroupPtr group;
};

std::vector<Candidate> catalogue_for_order(int m, const Limits& limits) {
  std::vector<Candidate> out;
  std::vector<std::vector<int>> facs;
  std::vector<int> cur;
  abelian_factorizations(m, 2, cur, facs);
  if (m == 1) out.push_back({"cyclic(1)", build_cyclic(1, limits)});
  for (const auto& f : facs) {
    GroupPtr g = build_cyclic(f[0], limits);
    std::string label = "cyclic(" + std::to_string(f[0]) + ")";
    for (std::size_t i = 1; i < f.size(); ++i) {
      g = direct_product(g, build_cyclic(f[i], limits), limits).group;
      label += " x cyclic(" + std::to_string(f[i]) + ")";
    }
    out.push_back({std::move(label), std::move(g)});
  }
  if (m >= 6 && m % 2 == 0) {
    out.push_back({"dihedral(" + std::to_string(m) + ")", build_dihedral(m, limits)});
  }
  if (m >= 8 && m % 4 == 0) {
    out.push_back({"quaternion(" + std::to_string(m) + ")", build_quaternion(m, limits)});
  }
  for (int p = 3; p * p * p <= m; p += 2) {
    if (is_prime(p) && p * p * p == m) {
      out.push_back({"heisenberg(" + std::to_string(p) + ")", build_heisenberg(p, limits)});
    }
  }
  for (int d = 6; d < m; d += 2) {
    if (m % d != 0) continue;
    int c = m / d;
    out.push_back({"dihedral(" + std::to_string(d) + ") x cyclic(" + std::to_string(c) + ")",
                   direct_product(build_dihedral(d, limits), build_cyclic(c, limits), limits)
                       .group});
    if (d >= 8 && d % 4 == 0) {
      out.push_back({"quaternion(" + std::to_string(d) + ") x cyclic(" + std::to_string(c) + ")",
                     direct_product(build_quaternion(d, limits), build_cyclic(c, limits), limits)
                         .group});
    }
  }
  return out;
}

}  // namespace

std::optional<std::string> identify_group(const Group& g, const Limits& limits) {
  if (g.order() > limits.iso_cap) return std::nullopt;
  for (const auto& cand : catalogue_for_order(g.order(), limits)) {
    auto iso = is_isomorphic(g, *cand.group, limits);
    if (iso && *iso) return cand.label;
  }
  return std::nullopt;
}

std::string group_invariants_label(GroupPtr g) {
  std::ostringstream os;
  os << "order " << g->order() << ", " << (g->is_abelian() ? "abelian" : "nonabelian")
     << ", center " << center(g).order() << ", exponent " << g->exponent();
  return os.str();
}

}  // namespace endobrace
