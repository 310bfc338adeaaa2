#include "genord/commands.hpp"

#include <algorithm>

#include "genord/chartab.hpp"
#include "genord/classalg.hpp"
#include "genord/classes.hpp"
#include "genord/fixture.hpp"
#include "genord/identities.hpp"
#include "genord/nilpotent.hpp"

namespace genord::commands {

using reports::Json;

namespace {

struct Loaded {
  GroupFixture fixture;
  PermGroup group;
  ClassTable table;
};

Loaded load(const RunConfig& cfg) {
  GroupFixture fixture = load_group_fixture(cfg.group_path);
  PermGroup group = group_from_fixture(fixture);
  ClassTable table = ClassTable::build(group, cfg.enum_cap);
  return {std::move(fixture), std::move(group), std::move(table)};
}

CharacterTable load_table(const RunConfig& cfg) {
  if (cfg.table_path.empty())
    throw std::invalid_argument("method 'chartab' requires --table");
  CharacterTable table = CharacterTable::load_file(cfg.table_path);
  auto validation = table.validate();
  if (!validation.ok)
    throw CharTableError(cfg.table_path + ": validation failed: " +
                         validation.failures.front());
  return table;
}

int resolve_class(const RunConfig& cfg, const Loaded& loaded) {
  if (!cfg.element.empty()) {
    Permutation p = Permutation::from_cycles(cfg.element, loaded.group.degree());
    return loaded.table.class_of(p);
  }
  if (cfg.class_index < 0)
    throw std::invalid_argument("pass --class INDEX or --element CYCLES");
  if (cfg.class_index >= loaded.table.num_classes())
    throw std::invalid_argument("class index " + std::to_string(cfg.class_index) +
                                " out of range (m = " +
                                std::to_string(loaded.table.num_classes()) + ")");
  return cfg.class_index;
}

/// Table classes sharing the group class's fingerprint; alpha is invariant
/// across any consistent matching, which is checked before a value is used.
std::vector<int> table_bucket(const ClassTable& group_table, int class_index,
                              const CharacterTable& char_table) {
  const auto& c = group_table.cls(class_index);
  std::vector<int> bucket;
  for (int i = 0; i < char_table.num_classes(); ++i) {
    const auto& tc = char_table.classes()[i];
    if (tc.element_order == c.element_order && tc.size == c.size &&
        char_table.class_real(i) == c.real)
      bucket.push_back(i);
  }
  if (bucket.empty())
    throw CharTableError("no table class matches the fingerprint of class " +
                         std::to_string(class_index));
  return bucket;
}

BigInt alpha_from_table(const ClassTable& group_table, int class_index,
                        const CharacterTable& char_table, int k) {
  std::vector<int> bucket = table_bucket(group_table, class_index, char_table);
  BigInt value = char_table.alpha(bucket[0], k);
  for (std::size_t i = 1; i < bucket.size(); ++i)
    if (char_table.alpha(bucket[i], k) != value)
      throw CharTableError("alpha differs across the fingerprint bucket of class " +
                           std::to_string(class_index));
  return value;
}

std::vector<Permutation> class_member_perms(const ClassTable& table, int class_index) {
  std::vector<Permutation> members;
  for (std::uint32_t id : table.class_members(class_index))
    members.push_back(table.index().element(id));
  return members;
}

void add_fixture_summary(Json& report, const Loaded& loaded) {
  auto& section = reports::add_kv_section(report, "group");
  reports::kv(section, "name", loaded.fixture.name);
  reports::kv(section, "degree", std::to_string(loaded.group.degree()));
  reports::kv(section, "order", loaded.group.order().str());
  reports::kv(section, "classes", std::to_string(loaded.table.num_classes()));
}

void add_profile_section(Json& report, const ClassTable& table, int cls,
                         const AlphaProfile& profile, const std::string& method) {
  auto& section = reports::add_kv_section(report, "generalized order");
  reports::kv(section, "class", std::to_string(cls));
  reports::kv(section, "class_size", std::to_string(table.cls(cls).size));
  reports::kv(section, "element_order", std::to_string(table.cls(cls).element_order));
  reports::kv(section, "method", method);
  reports::kv(section, "k_cap", std::to_string(profile.k_cap));
  std::string alphas;
  for (std::size_t i = 0; i < profile.alphas.size(); ++i) {
    if (i) alphas += ", ";
    alphas += profile.alphas[i].str();
  }
  reports::kv(section, "alphas", alphas);
  reports::kv(section, "generalized_order",
              profile.generalized_order ? std::to_string(*profile.generalized_order)
                                        : "not found <= " + std::to_string(profile.k_cap));
}

}  // namespace

Json cmd_order(const RunConfig& cfg) {
  GroupFixture fixture = load_group_fixture(cfg.group_path);
  PermGroup group = group_from_fixture(fixture);
  Json report = reports::make_report("order");
  reports::add_input(report, "group", cfg.group_path);
  auto& section = reports::add_kv_section(report, "group");
  reports::kv(section, "name", fixture.name);
  reports::kv(section, "degree", std::to_string(group.degree()));
  reports::kv(section, "generators", std::to_string(group.generators().size()));
  reports::kv(section, "order", group.order().str());
  reports::kv(section, "transitive", group.is_transitive() ? "yes" : "no");
  return report;
}

Json cmd_classes(const RunConfig& cfg) {
  Loaded loaded = load(cfg);
  Json report = reports::make_report("classes");
  reports::add_input(report, "group", cfg.group_path);
  auto& table = reports::add_table_section(
      report, "conjugacy classes", {"index", "size", "element_order", "representative", "real"});
  for (const auto& c : loaded.table.classes())
    reports::row(table, {std::to_string(c.index), std::to_string(c.size),
                         std::to_string(c.element_order), c.representative.cycle_string(),
                         c.real ? "yes" : "no"});
  RealCensus census = loaded.table.real_census();
  auto& footer = reports::add_kv_section(report, "census");
  reports::kv(footer, "m", std::to_string(loaded.table.num_classes()));
  reports::kv(footer, "lambda", std::to_string(census.lambda));
  reports::kv(footer, "mu", std::to_string(census.mu));
  return report;
}

Json cmd_alpha(const RunConfig& cfg) {
  if (cfg.k < 1) throw std::invalid_argument("pass --k K with K >= 1");
  Loaded loaded = load(cfg);
  int cls = resolve_class(cfg, loaded);
  BigInt value;
  if (cfg.method == "direct") {
    value = alpha_direct(loaded.table, cls, cfg.k);
  } else if (cfg.method == "oracle") {
    value = brute_alpha(loaded.group, class_member_perms(loaded.table, cls), cfg.k,
                        cfg.oracle_cap);
  } else if (cfg.method == "chartab") {
    CharacterTable char_table = load_table(cfg);
    value = alpha_from_table(loaded.table, cls, char_table, cfg.k);
  } else {
    throw std::invalid_argument("unknown method: " + cfg.method);
  }
  Json report = reports::make_report("alpha");
  reports::add_input(report, "group", cfg.group_path);
  if (!cfg.table_path.empty()) reports::add_input(report, "table", cfg.table_path);
  add_fixture_summary(report, loaded);
  auto& section = reports::add_kv_section(report, "alpha");
  reports::kv(section, "class", std::to_string(cls));
  reports::kv(section, "class_size", std::to_string(loaded.table.cls(cls).size));
  reports::kv(section, "k", std::to_string(cfg.k));
  reports::kv(section, "method", cfg.method);
  reports::kv(section, "alpha", value.str());
  return report;
}

Json cmd_gorder(const RunConfig& cfg) {
  Loaded loaded = load(cfg);
  Json report = reports::make_report("gorder");
  reports::add_input(report, "group", cfg.group_path);
  if (!cfg.table_path.empty()) reports::add_input(report, "table", cfg.table_path);
  add_fixture_summary(report, loaded);
  if (cfg.class_index < 0 && cfg.element.empty()) {
    // no selector: profile every class
    auto& table = reports::add_table_section(
        report, "generalized orders",
        {"class", "size", "element_order", "gen_order", "alphas"});
    for (int c = 0; c < loaded.table.num_classes(); ++c) {
      AlphaProfile profile = generalized_order(loaded.table, c, cfg.k_cap);
      std::string alphas;
      for (std::size_t i = 0; i < profile.alphas.size(); ++i) {
        if (i) alphas += ", ";
        alphas += profile.alphas[i].str();
      }
      reports::row(table,
                   {std::to_string(c), std::to_string(loaded.table.cls(c).size),
                    std::to_string(loaded.table.cls(c).element_order),
                    profile.generalized_order
                        ? std::to_string(*profile.generalized_order)
                        : "not found <= " + std::to_string(profile.k_cap),
                    alphas});
    }
    return report;
  }
  int cls = resolve_class(cfg, loaded);
  if (cfg.method == "direct") {
    add_profile_section(report, loaded.table, cls,
                        generalized_order(loaded.table, cls, cfg.k_cap), cfg.method);
  } else if (cfg.method == "oracle") {
    int value = brute_generalized_order(loaded.group, loaded.table.cls(cls).representative,
                                        cfg.oracle_cap);
    auto& section = reports::add_kv_section(report, "generalized order");
    reports::kv(section, "class", std::to_string(cls));
    reports::kv(section, "method", cfg.method);
    reports::kv(section, "generalized_order", std::to_string(value));
  } else if (cfg.method == "chartab") {
    CharacterTable char_table = load_table(cfg);
    std::vector<int> bucket = table_bucket(loaded.table, cls, char_table);
    AlphaProfile profile = char_table.generalized_order(bucket[0], cfg.k_cap);
    add_profile_section(report, loaded.table, cls, profile, cfg.method);
  } else {
    throw std::invalid_argument("unknown method: " + cfg.method);
  }
  return report;
}

Json cmd_gexp(const RunConfig& cfg) {
  Loaded loaded = load(cfg);
  Json report = reports::make_report("gexp");
  reports::add_input(report, "group", cfg.group_path);
  add_fixture_summary(report, loaded);
  auto& table = reports::add_table_section(report, "generalized orders",
                                           {"class", "size", "element_order", "gen_order"});
  int gexp = 1;
  for (int c = 0; c < loaded.table.num_classes(); ++c) {
    int value;
    if (cfg.method == "oracle") {
      value = brute_generalized_order(loaded.group, loaded.table.cls(c).representative,
                                      cfg.oracle_cap);
    } else {
      value = generalized_order(loaded.table, c, cfg.k_cap).generalized_order.value();
    }
    gexp = std::max(gexp, value);
    reports::row(table, {std::to_string(c), std::to_string(loaded.table.cls(c).size),
                         std::to_string(loaded.table.cls(c).element_order),
                         std::to_string(value)});
  }
  auto& section = reports::add_kv_section(report, "result");
  reports::kv(section, "generalized_exponent", std::to_string(gexp));
  return report;
}

Json cmd_bounds(const RunConfig& cfg, bool& ok) {
  Loaded loaded = load(cfg);
  int cls = resolve_class(cfg, loaded);
  BoundsReport bounds = bounds_report(loaded.table, cls);
  Json report = reports::make_report("bounds");
  reports::add_input(report, "group", cfg.group_path);
  add_fixture_summary(report, loaded);
  auto& section = reports::add_kv_section(report, "bounds");
  reports::kv(section, "class", std::to_string(cls));
  reports::kv(section, "gen_order", std::to_string(bounds.gen_order));
  reports::kv(section, "element_order", std::to_string(bounds.element_order));
  reports::kv(section, "power_class_count", std::to_string(bounds.power_class_count));
  reports::kv(section, "two_mu_plus_two", std::to_string(bounds.two_mu_plus_two));
  reports::kv(section, "within_element_order", bounds.within_element_order ? "yes" : "no");
  reports::kv(section, "within_power_bound", bounds.within_power_bound ? "yes" : "no");
  reports::kv(section, "within_mu_bound", bounds.within_mu_bound ? "yes" : "no");
  auto& group_section = reports::add_kv_section(report, "core-free stabilizer bound");
  reports::kv(group_section, "transitive", bounds.transitive ? "yes" : "no");
  reports::kv(group_section, "generalized_exponent", std::to_string(bounds.gexp));
  reports::kv(group_section, "bound_2^(degree-1)", bounds.stabilizer_bound.str());
  reports::kv(group_section, "within_corefree_bound",
              bounds.within_corefree_bound ? "yes" : "no");
  ok = bounds.all_respected();
  reports::set_status(report, ok);
  return report;
}

Json cmd_lcs(const RunConfig& cfg) {
  GroupFixture fixture = load_group_fixture(cfg.group_path);
  PermGroup group = group_from_fixture(fixture);
  LowerCentralSeries series = lower_central_series(group);
  Json report = reports::make_report("lcs");
  reports::add_input(report, "group", cfg.group_path);
  auto& table = reports::add_table_section(report, "lower central series",
                                           {"term", "order", "generators"});
  for (std::size_t i = 0; i < series.terms.size(); ++i)
    reports::row(table, {"gamma_" + std::to_string(i + 1), series.terms[i].order().str(),
                         std::to_string(series.terms[i].generators().size())});
  auto& section = reports::add_kv_section(report, "result");
  reports::kv(section, "nilpotent", series.nilpotent ? "yes" : "no");
  if (series.nilpotent)
    reports::kv(section, "nilpotency_class", std::to_string(series.nilpotency_class));
  return report;
}

Json cmd_identities(const RunConfig& cfg, bool& ok) {
  GroupFixture fixture = load_group_fixture(cfg.group_path);
  PermGroup group = group_from_fixture(fixture);
  IdentityReport result = check_commutator_identities(group, cfg.samples, cfg.seed);
  Json report = reports::make_report("identities");
  reports::add_input(report, "group", cfg.group_path);
  reports::set_seed(report, cfg.seed);
  auto& table = reports::add_table_section(report, "commutator identities",
                                           {"identity", "tested", "failures"});
  for (const auto& item : result.items)
    reports::row(table, {item.name, std::to_string(item.tested),
                         std::to_string(item.failures)});
  ok = result.all_pass;
  reports::set_status(report, ok);
  return report;
}

Json cmd_verify(const RunConfig& cfg, bool& ok) {
  Loaded loaded = load(cfg);
  const ClassTable& table = loaded.table;
  Json report = reports::make_report("verify");
  reports::add_input(report, "group", cfg.group_path);
  if (!cfg.table_path.empty()) reports::add_input(report, "table", cfg.table_path);
  reports::set_seed(report, cfg.seed);
  add_fixture_summary(report, loaded);
  ok = true;
  auto& checks = reports::add_table_section(report, "invariants", {"check", "result"});
  auto record = [&](const std::string& name, bool pass) {
    reports::row(checks, {name, pass ? "pass" : "FAIL"});
    if (!pass) ok = false;
  };

  // partition and tuple-count conservation
  BigInt size_sum = 0;
  for (const auto& c : table.classes()) size_sum += BigInt(c.size);
  record("class sizes partition the group", size_sum == loaded.group.order());
  RealCensus census = table.real_census();
  record("1 + lambda + 2 mu = m",
         1 + census.lambda + 2 * census.mu == table.num_classes());

  bool conservation = true, tuple_bound = true;
  for (int c = 0; c < table.num_classes(); ++c) {
    ClassConvolution conv(table, c);
    BigInt class_size(table.cls(c).size);
    for (int k = 1; k <= 6; ++k) {
      BigInt alpha = conv.alpha(k);
      BigInt total = 0;
      for (int e = 0; e < table.num_classes(); ++e)
        total += conv.f_values()[e] * BigInt(table.cls(e).size);
      if (total != boost::multiprecision::pow(class_size, k)) conservation = false;
      if (alpha > boost::multiprecision::pow(class_size, k - 1)) tuple_bound = false;
    }
  }
  record("conservation: sum f_k(e)|E| = |C|^k for k <= 6", conservation);
  record("alpha_{C,k} <= |C|^(k-1)", tuple_bound);

  // generalized orders against the three bounds, realness, parity
  bool real_iff = true, bound_ok = true, even_ok = true;
  bool has_gen_order_two = false;
  int gexp = 1;
  for (int c = 0; c < table.num_classes(); ++c) {
    BoundsReport bounds = bounds_report(table, c);
    gexp = std::max(gexp, bounds.gen_order);
    if (!bounds.within_element_order || !bounds.within_power_bound ||
        !bounds.within_mu_bound)
      bound_ok = false;
    bool real_nontrivial = c != 0 && table.cls(c).real;
    if ((bounds.gen_order == 2) != real_nontrivial) real_iff = false;
    if (bounds.gen_order == 2) has_gen_order_two = true;
  }
  record("gen order <= min(element order, power classes, 2 mu + 2)", bound_ok);
  record("gen order = 2 iff real nontrivial", real_iff);
  if (has_gen_order_two) even_ok = loaded.group.order() % 2 == 0;
  record("gen order 2 present implies even group order", even_ok);
  if (loaded.group.is_transitive())
    record("gexp <= 2^(degree-1) (core-free stabilizer)",
           BigInt(gexp) <= (BigInt(1) << (loaded.group.degree() - 1)));

  // commutator identities
  IdentityReport identities = check_commutator_identities(loaded.group, cfg.samples, cfg.seed);
  record("commutator identities (" + std::to_string(cfg.samples) + " samples)",
         identities.all_pass);

  // cross-method agreement
  if (loaded.group.order() <= 500) {
    bool oracle_ok = true;
    for (int c = 0; c < table.num_classes() && oracle_ok; ++c) {
      auto members = class_member_perms(table, c);
      for (int k = 1; k <= 6; ++k)
        if (brute_alpha(loaded.group, members, k, cfg.oracle_cap) != alpha_direct(table, c, k))
          oracle_ok = false;
      if (brute_generalized_order(loaded.group, table.cls(c).representative, cfg.oracle_cap) !=
          generalized_order(table, c).generalized_order.value())
        oracle_ok = false;
    }
    record("oracle agreement (all classes, k <= 6)", oracle_ok);
  } else {
    reports::row(checks, {"oracle agreement", "skipped (|G| > 500)"});
  }
  if (!cfg.table_path.empty()) {
    CharacterTable char_table = CharacterTable::load_file(cfg.table_path);
    auto validation = char_table.validate();
    record("character table orthogonality", validation.ok);
    if (validation.ok) {
      CrossCheck cross = cross_check_alpha(table, char_table, 6);
      record("character-formula agreement (all classes, k <= 6)", cross.ok);
      RealCensus table_census = char_table.real_census();
      record("table census matches group census",
             table_census.lambda == census.lambda && table_census.mu == census.mu);
    }
  }

  // lower central series consequences
  LowerCentralSeries series = lower_central_series(loaded.group);
  if (series.nilpotent) {
    GammaMembershipReport gamma = verify_gamma_membership(table, series);
    record("x^(k^m) in gamma_m for m <= class + 1", gamma.all_pass);
    BigInt order = loaded.group.order();
    long long p = 0;
    for (long long q : {2, 3, 5, 7, 11, 13}) {
      if (order % q == 0) {
        p = q;
        break;
      }
    }
    BigInt reduced = order;
    while (p > 0 && reduced % p == 0) reduced /= p;
    if (p > 0 && reduced == 1)
      record("p divides every nontrivial gen order (p-group)",
             check_p_divisibility(table, p).all_pass);
  } else {
    reports::row(checks, {"lower central series", "not nilpotent (informational)"});
  }

  reports::set_status(report, ok);
  return report;
}

}  // namespace genord::commands
