#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "endobrace/report.hpp"
#include "endobrace/zoo.hpp"

namespace {

int parse_epsilon(const std::string& text) {
  if (text.empty()) return 0;
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw endobrace::input_error("epsilon must be +1 or -1, got '" + text + "'");
}

struct CommonOpts {
  std::string group;
  std::string endo;
  std::string epsilon;
  int cap = -1;
  long long samples = -1;
  unsigned long long seed = endobrace::kDefaultSeed;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_endo = true) {
  cmd->add_option("--group", opts.group, "group source: file path, zoo:<spec> or paper:<name>")
      ->required();
  if (with_endo) {
    cmd->add_option("--endo", opts.endo,
                    "endomorphism: identity | zero | gen:g->x,... | image-table file");
    cmd->add_option("--epsilon", opts.epsilon, "sign: +1 or -1");
  }
  cmd->add_option("--cap", opts.cap, "exhaustive-scan cap (default 64)");
  cmd->add_option("--samples", opts.samples, "sample count above the cap");
  cmd->add_option("--seed", opts.seed, "sampling seed");
  cmd->add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

endobrace::RunConfig to_config(const CommonOpts& opts) {
  endobrace::RunConfig config;
  config.group_source = opts.group;
  config.endo_source = opts.endo;
  config.epsilon = parse_epsilon(opts.epsilon);
  if (opts.cap >= 0) config.limits.exhaustive_cap = opts.cap;
  if (opts.samples >= 0) {
    config.limits.samples = opts.samples;
    config.limits.braid_samples = opts.samples;
  }
  config.limits.seed = opts.seed;
  return config;
}

void emit(const endobrace::RunResult& result, const std::string& format) {
  std::cout << (format == "json" ? result.json : result.text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group toolkit: regular permutation families, skew braces,\n"
               "Yang-Baxter solutions and their distinguished subgroups"};
  app.require_subcommand(1);

  CommonOpts check_opts;
  std::string checks_list;
  std::string export_brace;
  auto* check = app.add_subcommand("check", "run the verification pipeline on one input");
  add_common(check, check_opts);
  check->add_option("--checks", checks_list,
                    "comma list from classify,oracles,fitting,brace,ybe,hg,equivariance");
  check->add_option("--export-brace", export_brace,
                    "write the dot and circle tables to this file");

  CommonOpts enum_opts;
  auto* enumerate = app.add_subcommand("enumerate", "sweep all endomorphisms of a group");
  enumerate->add_option("--group", enum_opts.group, "group source")->required();
  enumerate->add_option("--epsilon", enum_opts.epsilon, "restrict to one sign (default: both)");
  enumerate->add_option("--cap", enum_opts.cap, "exhaustive-scan cap");
  enumerate->add_option("--samples", enum_opts.samples, "sample count above the cap");
  enumerate->add_option("--seed", enum_opts.seed, "sampling seed");
  enumerate->add_option("--format", enum_opts.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CommonOpts ybe_opts;
  std::string variant = "all";
  auto* ybe = app.add_subcommand("ybe", "export a Yang-Baxter solution");
  add_common(ybe, ybe_opts);
  ybe->add_option("--variant", variant, "rG, rGop, rG1, rG1op or all");

  CommonOpts hg_opts;
  auto* hg = app.add_subcommand("hg-report", "named subgroups of the regular family");
  add_common(hg, hg_opts);

  auto* zoo = app.add_subcommand("zoo", "zoo utilities");
  auto* zoo_list = zoo->add_subcommand("list", "list constructors and named examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      auto config = to_config(check_opts);
      if (!checks_list.empty()) {
        std::string item;
        for (char c : checks_list + ",") {
          if (c == ',') {
            if (!item.empty()) config.checks.push_back(item);
            item.clear();
          } else {
            item.push_back(c);
          }
        }
      }
      if (!export_brace.empty()) config.export_brace_path = export_brace;
      auto result = endobrace::run(config);
      emit(result, check_opts.format);
      return result.exit_code;
    }
    if (*enumerate) {
      auto result = endobrace::enumerate_and_classify(to_config(enum_opts));
      emit(result, enum_opts.format);
      return result.exit_code;
    }
    if (*ybe) {
      auto result = endobrace::ybe_export(to_config(ybe_opts), variant);
      emit(result, ybe_opts.format);
      return result.exit_code;
    }
    if (*hg) {
      auto result = endobrace::hg_report(to_config(hg_opts));
      emit(result, hg_opts.format);
      return result.exit_code;
    }
    if (*zoo_list) {
      std::cout << endobrace::zoo_list_text();
      return 0;
    }
  } catch (const endobrace::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const endobrace::hypothesis_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
