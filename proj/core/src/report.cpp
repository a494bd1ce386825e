#include "endobrace/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "endobrace/brace.hpp"
#include "endobrace/cayley_io.hpp"
#include "endobrace/hopf_galois.hpp"
#include "endobrace/ybe.hpp"
#include "endobrace/zoo.hpp"

namespace endobrace {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kAllChecks = {"classify", "oracles", "fitting", "brace",
                                             "ybe",      "hg",      "equivariance"};

std::set<std::string> requested_checks(const RunConfig& config) {
  if (config.checks.empty()) return {kAllChecks.begin(), kAllChecks.end()};
  std::set<std::string> out;
  for (const auto& c : config.checks) {
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end()) {
      throw input_error("unknown check '" + c + "'");
    }
    out.insert(c);
  }
  return out;
}

json flags_json(const EndoProfile& p) {
  json j;
  j["abelian"] = p.abelian;
  j["neg_central"] = p.neg_central;
  j["pos_central"] = p.pos_central;
  j["derived_central"] = p.derived_central;
  j["neg_vanishing"] = p.neg_vanishing;
  j["pos_vanishing"] = p.pos_vanishing;
  j["fixed_point_free"] = p.fixed_point_free;
  j["idempotent"] = p.idempotent;
  return j;
}

json oracle_json(const OracleResult& r) {
  json j;
  j["value"] = r.value;
  j["sampled"] = r.sampled;
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  return j;
}

std::string describe_endo(const GroupMap& psi) {
  const int n = psi.source->order();
  bool ident = true, zero = true;
  for (int g = 0; g < n; ++g) {
    ident = ident && psi.images[g] == g;
    zero = zero && psi.images[g] == 0;
  }
  if (ident) return "identity";
  if (zero) return "zero";
  std::ostringstream os;
  os << "images[";
  for (int g = 0; g < std::min(n, 16); ++g) {
    if (g) os << ' ';
    os << psi.images[g];
  }
  if (n > 16) os << " ...";
  os << "]";
  return os.str();
}

}  // namespace

ResolvedInput resolve_input(const RunConfig& config) {
  ResolvedInput in;
  std::optional<GroupMap> default_psi;
  std::optional<int> default_eps;

  if (config.group_source.empty()) throw input_error("no group source given");
  if (config.group_source.rfind("paper:", 0) == 0) {
    auto ex = paper_example(config.group_source.substr(6), config.limits);
    in.group = ex.group;
    default_psi = ex.psi;
    default_eps = ex.epsilon;
    in.group_desc = config.group_source + " (" + ex.note + ")";
  } else if (config.group_source.rfind("zoo:", 0) == 0) {
    in.group = build_zoo(config.group_source, config.limits);
    in.group_desc = config.group_source;
  } else {
    in.group = load_group_file(config.group_source, config.limits);
    in.group_desc = "file " + config.group_source;
  }

  if (config.endo_source.empty()) {
    if (!default_psi) throw input_error("no endomorphism source given");
    in.psi = *default_psi;
    in.endo_desc = "example default";
  } else if (config.endo_source == "identity") {
    in.psi = identity_map(in.group);
    in.endo_desc = "identity";
  } else if (config.endo_source == "zero") {
    in.psi = zero_map(in.group);
    in.endo_desc = "zero";
  } else if (config.endo_source.rfind("gen:", 0) == 0) {
    in.psi = parse_generator_endo(in.group, config.endo_source);
    in.endo_desc = config.endo_source;
  } else {
    auto images = load_image_table_file(config.endo_source, in.group->order());
    in.psi = make_homomorphism(in.group, in.group, std::move(images));
    in.endo_desc = "file " + config.endo_source;
  }

  if (config.epsilon == 1 || config.epsilon == -1) {
    in.epsilon = config.epsilon;
  } else if (default_eps) {
    in.epsilon = *default_eps;
  } else {
    throw input_error("epsilon not given (use --epsilon +1 or -1)");
  }
  return in;
}

namespace {

json input_json(const RunConfig& config, const ResolvedInput& in) {
  json j;
  j["group"] = in.group_desc;
  j["name"] = in.group->name();
  j["order"] = in.group->order();
  j["endo"] = in.endo_desc;
  j["epsilon"] = in.epsilon;
  j["cap"] = config.limits.exhaustive_cap;
  j["samples"] = config.limits.samples;
  j["seed"] = config.limits.seed;
  return j;
}

struct Mismatches {
  json list = json::array();
  void add(const std::string& check, const std::string& detail) {
    json j;
    j["check"] = check;
    j["detail"] = detail;
    list.push_back(std::move(j));
  }
};

void check_profile_implications(const EndoProfile& p, Mismatches& mm) {
  if (p.abelian && !(p.neg_central && p.derived_central)) {
    mm.add("classify", "abelian image does not imply the central conditions");
  }
  if (p.derived_central && !p.pos_central) {
    mm.add("classify", "psi([G,G]) <= Z holds but psi([psi(G),G]) <= Z fails");
  }
  if (p.neg_vanishing && !p.neg_central) mm.add("classify", "vanishing without centrality (-1)");
  if (p.pos_vanishing && !p.pos_central) mm.add("classify", "vanishing without centrality (+1)");
}

}  // namespace

RunResult run(const RunConfig& config) {
  auto wanted = requested_checks(config);
  ResolvedInput in = resolve_input(config);
  const Limits& limits = config.limits;
  RegularFamily family(in.group, in.psi, in.epsilon);
  EndoProfile profile = classify(in.group, in.psi);
  const bool admitted = profile.central_for(in.epsilon);

  json rep;
  Mismatches mm;
  rep["input"] = input_json(config, in);
  rep["input"]["checks"] = json::array();
  for (const auto& c : kAllChecks) {
    if (wanted.count(c)) rep["input"]["checks"].push_back(c);
  }

  if (wanted.count("classify")) {
    rep["flags"] = flags_json(profile);
    check_profile_implications(profile, mm);
  }

  std::optional<OracleResult> sub, normed;
  if (wanted.count("oracles")) {
    sub = oracle_is_subgroup(family, limits);
    normed = oracle_normalized_by_lambda(family, limits);
    auto norms = oracle_normalizes_lambda(family, limits);
    json j;
    j["is_subgroup"] = oracle_json(*sub);
    j["normalized_by_lambda"] = oracle_json(*normed);
    j["normalizes_lambda"] = oracle_json(norms);
    rep["oracles"] = std::move(j);

    if (!norms.value) mm.add("oracles", "the family does not normalize the left translations");
    if (in.epsilon < 0) {
      if (sub->value != profile.neg_central) {
        mm.add("oracles", "subgroup oracle disagrees with psi([[G,psi],G]) <= Z");
      }
      if (normed->value != profile.neg_central) {
        mm.add("oracles", "normalized-by-lambda oracle disagrees with psi([[G,psi],G]) <= Z");
      }
    } else {
      if (sub->value != profile.pos_central) {
        mm.add("oracles", "subgroup oracle disagrees with psi([psi(G),G]) <= Z");
      }
      if ((sub->value && normed->value) != profile.derived_central) {
        mm.add("oracles", "subgroup+normalized oracles disagree with psi([G,G]) <= Z");
      }
    }
  }

  std::optional<FittingDecomposition> fitting;
  if (wanted.count("fitting")) {
    fitting = fitting_decomposition(in.group, in.psi);
    auto checks = verify_fitting(*fitting, in.group, in.psi);
    json j;
    j["n"] = fitting->n;
    j["j_order"] = fitting->j.order();
    j["i_order"] = fitting->i.order();
    json cj;
    cj["j_normal"] = checks.j_normal;
    cj["trivial_intersection"] = checks.trivial_intersection;
    cj["product_covers"] = checks.product_covers;
    cj["order_product"] = checks.order_product;
    cj["psi_nilpotent_on_j"] = checks.psi_nilpotent_on_j;
    cj["psi_bijective_on_i"] = checks.psi_bijective_on_i;
    j["checks"] = std::move(cj);
    if (!checks.all()) mm.add("fitting", "a decomposition property failed");
    if (admitted) {
      auto fam = verify_fitting_family(family, *fitting);
      json fj;
      fj["nu_j_normal"] = fam.nu_j_normal;
      fj["closure_is_family"] = fam.closure_is_family;
      j["family"] = std::move(fj);
      if (!fam.all()) mm.add("fitting", "the family-side decomposition failed");
    }
    rep["fitting"] = std::move(j);
  }

  std::optional<SkewBrace> brace;
  const bool need_brace = wanted.count("brace") || wanted.count("ybe");
  if (need_brace) brace = brace_from_family(family, limits);

  if (wanted.count("brace")) {
    json j;
    j["circle_is_group"] = brace->verified.circle_is_group;
    j["left_brace_axiom"] = brace->verified.left_brace_axiom;
    j["bi_skew"] = brace->verified.bi_skew;
    j["sampled"] = brace->verified.sampled;
    const bool skew_ok = brace->verified.circle_is_group && brace->verified.left_brace_axiom;
    if (in.epsilon < 0) {
      if (skew_ok != profile.neg_central || brace->verified.bi_skew != profile.neg_central) {
        mm.add("brace", "brace axioms disagree with psi([[G,psi],G]) <= Z");
      }
    } else {
      if (skew_ok != profile.pos_central) {
        mm.add("brace", "skew axioms disagree with psi([psi(G),G]) <= Z");
      }
      if (brace->verified.bi_skew != profile.derived_central) {
        mm.add("brace", "bi-skew axioms disagree with psi([G,G]) <= Z");
      }
    }
    if (brace->verified.circle_is_group) {
      bool inv_ok = true;
      for (int g = 0; g < in.group->order() && inv_ok; ++g) {
        try {
          circle_inverse(*brace, g);
        } catch (const input_error&) {
          inv_ok = false;
        }
      }
      j["circle_inverse_closed_form_ok"] = inv_ok;
      if (!inv_ok) mm.add("brace", "closed-form circle inverse disagrees with the table");
      bool respects = psi_respects_circle(*brace, in.psi);
      j["psi_respects_circle"] = respects;
      if (!respects) mm.add("brace", "psi is not an endomorphism of the circle operation");
    }
    rep["brace"] = std::move(j);

    if (config.export_brace_path) {
      if (!brace->verified.circle_is_group) {
        throw hypothesis_error("cannot export: circle operation is not a group");
      }
      std::ofstream out(*config.export_brace_path);
      if (!out) throw input_error("cannot write '" + *config.export_brace_path + "'");
      write_group(out, *in.group);
      out << "\n";
      write_group(out, *circle_group(*brace, limits));
    }
  }

  if (wanted.count("ybe")) {
    json arr = json::array();
    std::vector<std::optional<YBSolution>> sols(4);
    for (Variant v : all_variants()) {
      json j;
      j["variant"] = variant_name(v);
      try {
        YBSolution s = build_solution(family, v, limits);
        j["admitted"] = true;
        auto braid = verify_braid(s, limits);
        json bj;
        bj["ok"] = braid.ok;
        bj["sampled"] = braid.sampled;
        j["braid"] = std::move(bj);
        const bool bij = r_bijective(s);
        const bool nd = nondegenerate(s);
        const bool generic_ok = brace->verified.circle_is_group && matches_generic(s, *brace);
        j["bijective"] = bij;
        j["nondegenerate"] = nd;
        j["matches_generic"] = generic_ok;
        if (!braid.ok) mm.add("ybe", std::string(variant_name(v)) + ": braid relation failed");
        if (!bij) mm.add("ybe", std::string(variant_name(v)) + ": r is not bijective");
        if (!nd) mm.add("ybe", std::string(variant_name(v)) + ": degenerate solution");
        if (!generic_ok) {
          mm.add("ybe", std::string(variant_name(v)) + ": closed form disagrees with the "
                                                       "brace-table construction");
        }
        if (v == Variant::rG) {
          const bool inv = involutive(s);
          j["involutive"] = inv;
          if (inv != in.group->is_abelian()) {
            mm.add("ybe", "involutivity of rG does not match commutativity of the group");
          }
        }
        sols[static_cast<int>(v)] = std::move(s);
      } catch (const hypothesis_error& e) {
        j["admitted"] = false;
        j["reason"] = e.what();
      }
      arr.push_back(std::move(j));
    }
    auto pair_report = [&](Variant a, Variant b, const char* label) {
      if (!sols[static_cast<int>(a)] || !sols[static_cast<int>(b)]) return;
      auto pr = verify_pairings(family, *sols[static_cast<int>(a)], *sols[static_cast<int>(b)]);
      json j;
      j["pairing"] = label;
      j["mutual_inverse"] = pr.mutual_inverse;
      j["coincide"] = pr.coincide;
      j["criterion"] = pr.criterion;
      if (!pr.mutual_inverse) mm.add("ybe", std::string(label) + ": not mutual inverses");
      if (!pr.agree()) mm.add("ybe", std::string(label) + ": coincidence criterion mismatch");
      arr.push_back(std::move(j));
    };
    pair_report(Variant::rG, Variant::rGop, "rG/rGop");
    pair_report(Variant::rG1, Variant::rG1op, "rG1/rG1op");
    rep["ybe"] = std::move(arr);
  }

  if (wanted.count("hg") || wanted.count("equivariance")) {
    json j;
    if (wanted.count("hg")) {
      if (admitted) {
        HGReport hg = special_subgroups(family, limits);
        json subs;
        for (const auto& s : hg.subgroups) {
          json sj;
          sj["order"] = s.order();
          sj["elements"] = s.g_elements;
          sj["normalized_by_lambda"] = s.normalized_by_lambda;
          sj["trivial_action"] = s.trivial_lambda_action;
          subs[s.name] = std::move(sj);
          if (!s.closed) mm.add("hg", s.name + " is not closed");
          if (!s.normalized_by_lambda) {
            mm.add("hg", s.name + " is not normalized by the left translations");
          }
          if ((s.name == "N1" || s.name == "PN") && !s.trivial_lambda_action) {
            mm.add("hg", s.name + " should carry a trivial lambda action");
          }
        }
        j["subgroups"] = std::move(subs);
        j["type_of_N"] = hg.type_of_n;

        json oj;
        auto opposite = opposite_subgroup(family);
        bool realizes = true;
        for (int g = 0; g < in.group->order() && realizes; ++g) {
          for (int h = 0; h < in.group->order(); ++h) {
            if (opposite[g].images[h] != family.circle(h, g)) {
              realizes = false;
              break;
            }
          }
        }
        oj["realizes_reversed_circle"] = realizes;
        if (!realizes) mm.add("hg", "opposite family does not realize h o g");
        if (in.group->order() <= limits.centralizer_cap) {
          std::vector<Perm> nu_all;
          for (int g = 0; g < in.group->order(); ++g) nu_all.push_back(family.nu(g));
          auto cent = centralizer_of_regular(nu_all);
          auto key = [](const Perm& p) { return p.images; };
          std::set<std::vector<int>> a, b;
          for (const auto& p : opposite) a.insert(key(p));
          for (const auto& p : cent) b.insert(key(p));
          oj["matches_centralizer"] = a == b;
          if (a != b) mm.add("hg", "opposite family differs from the brute-force centralizer");
          bool self = true;
          std::set<std::vector<int>> nu_set;
          for (const auto& p : nu_all) nu_set.insert(key(p));
          self = nu_set == a;
          SkewBrace bb = brace_from_family(family, limits);
          bool circle_abelian = true;
          for (int g = 0; g < in.group->order() && circle_abelian; ++g)
            for (int h = 0; h < in.group->order(); ++h)
              if (bb.circ(g, h) != bb.circ(h, g)) {
                circle_abelian = false;
                break;
              }
          oj["equals_family"] = self;
          oj["family_abelian"] = circle_abelian;
          if (self != circle_abelian) {
            mm.add("hg", "N' = N does not match commutativity of the family");
          }
        }
        j["opposite"] = std::move(oj);

        json ij;
        try {
          auto idem = idempotent_type(family, limits);
          ij["applicable"] = true;
          ij["verified"] = idem.verified;
          ij["description"] = idem.description;
          if (!idem.verified) mm.add("hg", "idempotent decomposition failed");
        } catch (const hypothesis_error& e) {
          ij["applicable"] = false;
          ij["reason"] = e.what();
        }
        j["idempotent"] = std::move(ij);
      } else {
        j["skipped"] = "the family is not a subgroup";
      }
    }
    if (wanted.count("equivariance")) {
      json fj;
      try {
        GroupMap alpha = fpf_isomorphism(family, limits);
        fj["applicable"] = true;
        fj["alpha_is_isomorphism"] = true;
        const bool equi = check_G_equivariance(family, alpha.images);
        fj["equivariant"] = equi;
        const bool predicted = in.epsilon < 0 ? true : profile.abelian;
        if (equi != predicted) {
          mm.add("equivariance", in.epsilon < 0
                                     ? "expected equivariance under the vanishing hypothesis"
                                     : "equivariance should hold exactly for abelian psi");
        }
      } catch (const hypothesis_error& e) {
        fj["applicable"] = false;
        fj["reason"] = e.what();
      }
      j["fpf"] = std::move(fj);
    }
    rep["hg"] = std::move(j);
  }

  rep["mismatches"] = mm.list;

  RunResult out;
  out.exit_code = mm.list.empty() ? 0 : 1;
  out.json = rep.dump(2) + "\n";

  std::ostringstream text;
  text << "group: " << in.group_desc << " (order " << in.group->order() << ")\n";
  text << "endo: " << in.endo_desc << "  epsilon: " << (in.epsilon > 0 ? "+1" : "-1") << "\n";
  if (wanted.count("classify")) {
    text << "conditions:\n";
    text << "  psi([G,G]) = 1:              " << (profile.abelian ? "yes" : "no") << "\n";
    text << "  psi([[G,psi],G]) <= Z(G):    " << (profile.neg_central ? "yes" : "no") << "\n";
    text << "  psi([psi(G),G]) <= Z(G):     " << (profile.pos_central ? "yes" : "no") << "\n";
    text << "  psi([G,G]) <= Z(G):          " << (profile.derived_central ? "yes" : "no") << "\n";
    text << "  fixed point free:            " << (profile.fixed_point_free ? "yes" : "no") << "\n";
    text << "  idempotent:                  " << (profile.idempotent ? "yes" : "no") << "\n";
  }
  if (rep.contains("oracles")) {
    text << "oracles: subgroup=" << rep["oracles"]["is_subgroup"]["value"].get<bool>()
         << " normalized=" << rep["oracles"]["normalized_by_lambda"]["value"].get<bool>()
         << " normalizes=" << rep["oracles"]["normalizes_lambda"]["value"].get<bool>()
         << (rep["oracles"]["is_subgroup"]["sampled"].get<bool>() ? " (sampled)" : "") << "\n";
  }
  if (rep.contains("brace")) {
    text << "brace: group=" << rep["brace"]["circle_is_group"].get<bool>()
         << " skew=" << rep["brace"]["left_brace_axiom"].get<bool>()
         << " bi-skew=" << rep["brace"]["bi_skew"].get<bool>() << "\n";
  }
  if (rep.contains("ybe")) {
    for (const auto& e : rep["ybe"]) {
      if (e.contains("variant")) {
        text << "ybe " << e["variant"].get<std::string>() << ": ";
        if (e["admitted"].get<bool>()) {
          text << "braid=" << e["braid"]["ok"].get<bool>()
               << " bijective=" << e["bijective"].get<bool>()
               << " nondegenerate=" << e["nondegenerate"].get<bool>()
               << " generic=" << e["matches_generic"].get<bool>() << "\n";
        } else {
          text << "not admitted\n";
        }
      }
    }
  }
  if (rep.contains("hg") && rep["hg"].contains("subgroups")) {
    text << "hg subgroups:";
    for (auto& [k, v] : rep["hg"]["subgroups"].items()) {
      text << " " << k << "(order " << v["order"].get<int>() << ")";
    }
    text << "\n  type of N: " << rep["hg"]["type_of_N"].get<std::string>() << "\n";
  }
  text << "mismatches: " << mm.list.size() << "\n";
  for (const auto& m : mm.list) {
    text << "  " << m["check"].get<std::string>() << ": " << m["detail"].get<std::string>()
         << "\n";
  }
  out.text = text.str();
  return out;
}

RunResult enumerate_and_classify(const RunConfig& config) {
  RunConfig gcfg = config;
  gcfg.endo_source = "zero";  // resolve_input needs one; the sweep ignores it
  if (gcfg.epsilon == 0) gcfg.epsilon = -1;
  ResolvedInput in = resolve_input(gcfg);
  const Limits& limits = config.limits;
  const bool both = config.epsilon == 0;

  auto gens = find_generating_set(*in.group, 3);
  if (!gens) {
    throw input_error("enumeration needs a generating set of size <= 3");
  }

  json rep;
  rep["input"] = input_json(config, in);
  rep["input"].erase("endo");
  rep["input"]["epsilon"] = both ? "both" : (config.epsilon > 0 ? "+1" : "-1");
  rep["generators"] = *gens;

  long long total = 0;
  std::map<std::string, long long> counts;
  for (const char* key :
       {"abelian", "neg_central", "pos_central", "derived_central", "fixed_point_free",
        "idempotent", "subgroup_neg", "normalized_neg", "subgroup_pos", "normalized_pos"}) {
    counts[key] = 0;
  }
  Mismatches mm;

  for_each_endomorphism(in.group, *gens, [&](const GroupMap& psi) {
    ++total;
    EndoProfile p = classify(in.group, psi);
    counts["abelian"] += p.abelian;
    counts["neg_central"] += p.neg_central;
    counts["pos_central"] += p.pos_central;
    counts["derived_central"] += p.derived_central;
    counts["fixed_point_free"] += p.fixed_point_free;
    counts["idempotent"] += p.idempotent;

    auto run_eps = [&](int eps) {
      RegularFamily fam(in.group, psi, eps);
      auto sub = oracle_is_subgroup(fam, limits);
      auto nor = oracle_normalized_by_lambda(fam, limits);
      counts[eps < 0 ? "subgroup_neg" : "subgroup_pos"] += sub.value;
      counts[eps < 0 ? "normalized_neg" : "normalized_pos"] += nor.value;
      SkewBrace b = brace_from_family(fam, limits);
      const bool skew_ok = b.verified.circle_is_group && b.verified.left_brace_axiom;
      if (eps < 0) {
        if (sub.value != p.neg_central || nor.value != p.neg_central ||
            b.verified.bi_skew != p.neg_central) {
          mm.add("enumerate", "epsilon -1 disagreement on " + describe_endo(psi));
        }
      } else {
        if (sub.value != p.pos_central || skew_ok != p.pos_central ||
            (sub.value && nor.value) != p.derived_central ||
            b.verified.bi_skew != p.derived_central) {
          mm.add("enumerate", "epsilon +1 disagreement on " + describe_endo(psi));
        }
      }
    };
    if (both || config.epsilon == -1) run_eps(-1);
    if (both || config.epsilon == 1) run_eps(+1);
  });

  rep["total"] = total;
  json cj;
  for (const auto& [k, v] : counts) cj[k] = v;
  rep["counts"] = std::move(cj);
  rep["mismatches"] = mm.list;

  RunResult out;
  out.exit_code = mm.list.empty() ? 0 : 1;
  out.json = rep.dump(2) + "\n";
  std::ostringstream text;
  text << "group: " << in.group_desc << " (order " << in.group->order() << ")\n";
  text << "generators:";
  for (int g : *gens) text << " " << g;
  text << "\nendomorphisms: " << total << "\n";
  for (const auto& [k, v] : counts) text << "  " << k << ": " << v << "\n";
  text << "mismatches: " << mm.list.size() << "\n";
  out.text = text.str();
  return out;
}

RunResult ybe_export(const RunConfig& config, const std::string& variant) {
  ResolvedInput in = resolve_input(config);
  RegularFamily family(in.group, in.psi, in.epsilon);
  const Limits& limits = config.limits;

  std::vector<Variant> vs;
  if (variant == "all") {
    vs = all_variants();
  } else {
    vs = {parse_variant(variant)};
  }
  json arr = json::array();
  for (Variant v : vs) {
    YBSolution s = build_solution(family, v, limits);
    json j;
    j["order"] = in.group->order();
    j["variant"] = variant_name(v);
    if (s.materialized()) {
      const int n = in.group->order();
      json sg = json::array(), tu = json::array();
      for (int g = 0; g < n; ++g) {
        json row_s = json::array(), row_t = json::array();
        for (int h = 0; h < n; ++h) {
          row_s.push_back(s.sigma_table()[static_cast<std::size_t>(g) * n + h]);
          row_t.push_back(s.tau_table()[static_cast<std::size_t>(g) * n + h]);
        }
        sg.push_back(std::move(row_s));
        tu.push_back(std::move(row_t));
      }
      j["sigma"] = std::move(sg);
      j["tau"] = std::move(tu);
    } else {
      json cf;
      cf["epsilon"] = in.epsilon;
      cf["psi"] = in.psi.images;
      j["closed_form"] = std::move(cf);
    }
    arr.push_back(std::move(j));
  }
  RunResult out;
  json rep = arr.size() == 1 ? arr[0] : json(arr);
  out.json = rep.dump(2) + "\n";
  out.text = out.json;
  return out;
}

RunResult hg_report(const RunConfig& config) {
  RunConfig c = config;
  c.checks = {"classify", "hg", "equivariance"};
  RunResult r = run(c);
  return r;
}

}  // namespace endobrace
