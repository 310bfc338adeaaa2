// genord: exact generalized-torsion computations on permutation-group
// fixtures. Exit code 0 means success (and, for verify/bounds/identities,
// that every invariant held), 1 flags an invariant violation, 2 a usage or
// input error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "genord/commands.hpp"

using genord::commands::RunConfig;
using genord::reports::Json;

namespace {

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* value = std::getenv(name);
  if (!value) return fallback;
  try {
    return std::stoull(value);
  } catch (...) {
    throw std::invalid_argument(std::string(name) + " is not a valid cap: " + value);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generalized-torsion computations on group fixtures"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "text";
  try {
    cfg.enum_cap = env_cap("GENORD_ENUM_CAP", genord::kDefaultEnumCap);
    cfg.oracle_cap = env_cap("GENORD_ORACLE_CAP", genord::kDefaultOracleCap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto add_common = [&](CLI::App* sub, bool with_table = false) {
    sub->add_option("--group", cfg.group_path, "group fixture file")->required();
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_table) sub->add_option("--table", cfg.table_path, "character table file");
  };
  auto add_class_selector = [&](CLI::App* sub) {
    sub->add_option("--class", cfg.class_index, "class index");
    sub->add_option("--element", cfg.element, "class by sample element, cycle notation");
  };

  CLI::App* order = app.add_subcommand("order", "group order and degree");
  add_common(order);

  CLI::App* classes = app.add_subcommand("classes", "conjugacy class table");
  add_common(classes);

  CLI::App* alpha = app.add_subcommand("alpha", "alpha_{C,k} tuple count");
  add_common(alpha, true);
  add_class_selector(alpha);
  alpha->add_option("--k", cfg.k, "tuple length")->required();
  alpha->add_option("--method", cfg.method, "direct, chartab or oracle")
      ->check(CLI::IsMember({"direct", "chartab", "oracle"}));

  CLI::App* gorder = app.add_subcommand("gorder", "generalized order of a class");
  add_common(gorder, true);
  add_class_selector(gorder);
  gorder->add_option("--k-cap", cfg.k_cap, "search cap (default 2 mu + 2)");
  gorder->add_option("--method", cfg.method, "direct, chartab or oracle")
      ->check(CLI::IsMember({"direct", "chartab", "oracle"}));

  CLI::App* gexp = app.add_subcommand("gexp", "generalized exponent");
  add_common(gexp);
  gexp->add_option("--method", cfg.method, "direct or oracle")
      ->check(CLI::IsMember({"direct", "oracle"}));
  gexp->add_option("--k-cap", cfg.k_cap, "search cap (default 2 mu + 2)");

  CLI::App* bounds = app.add_subcommand("bounds", "per-class bound report");
  add_common(bounds);
  add_class_selector(bounds);

  CLI::App* lcs = app.add_subcommand("lcs", "lower central series");
  add_common(lcs);

  CLI::App* identities = app.add_subcommand("identities", "commutator identity checks");
  add_common(identities);
  identities->add_option("--samples", cfg.samples, "random tuples per identity");
  identities->add_option("--seed", cfg.seed, "sampling seed");

  CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
  add_common(verify, true);
  verify->add_option("--samples", cfg.samples, "random tuples per identity");
  verify->add_option("--seed", cfg.seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Json report;
    bool ok = true;
    if (*order) report = genord::commands::cmd_order(cfg);
    else if (*classes) report = genord::commands::cmd_classes(cfg);
    else if (*alpha) report = genord::commands::cmd_alpha(cfg);
    else if (*gorder) report = genord::commands::cmd_gorder(cfg);
    else if (*gexp) report = genord::commands::cmd_gexp(cfg);
    else if (*bounds) report = genord::commands::cmd_bounds(cfg, ok);
    else if (*lcs) report = genord::commands::cmd_lcs(cfg);
    else if (*identities) report = genord::commands::cmd_identities(cfg, ok);
    else if (*verify) report = genord::commands::cmd_verify(cfg, ok);

    if (format == "json")
      std::cout << report.dump(2) << "\n";
    else
      std::cout << genord::reports::render_text(report);
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
