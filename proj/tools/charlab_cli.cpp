// charlab command line: exact character tables, theta-good certificates and
// the counting-theorem verification suite.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 parse or
// usage error, 3 hypothesis failure, 4 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "charlab/clifford.hpp"
#include "charlab/dsl.hpp"
#include "charlab/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitHypothesisError = 3;
constexpr int kExitInternalError = 4;

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw charlab::ParseError("cannot open file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw charlab::ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return doc;
}

std::vector<charlab::CatalogEntry> load_catalog_arg(const std::string& arg) {
  if (arg.empty() || arg == "default") return charlab::default_catalog();
  nlohmann::json doc = load_json_file(arg);
  std::vector<std::string> exprs;
  const nlohmann::json& groups = doc.is_array() ? doc : doc.at("groups");
  for (const auto& item : groups) exprs.push_back(item.get<std::string>());
  return charlab::catalog_from_exprs(exprs);
}

std::vector<charlab::Kind> parse_kinds_arg(const std::string& arg) {
  if (arg.empty()) return charlab::all_kinds();
  std::vector<charlab::Kind> kinds;
  std::size_t pos = 0;
  while (pos <= arg.size()) {
    std::size_t comma = arg.find(',', pos);
    std::string name = arg.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!name.empty()) kinds.push_back(charlab::kind_from_name(name));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (kinds.empty()) throw charlab::ParseError("no check kinds given");
  return kinds;
}

int cmd_chartab(const std::string& expr, const std::string& format) {
  charlab::DslValue value = charlab::evaluate(*charlab::parse(expr));
  charlab::GroupPtr g =
      value.is_subgroup() ? charlab::as_group(*value.sub).sub : value.group;
  const auto& table = charlab::character_table(g);
  if (format == "markdown")
    std::cout << charlab::table_to_markdown(table);
  else
    std::cout << charlab::table_to_json(table) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite_arg, const std::string& kinds_arg,
               int max_order, int jobs, const std::string& report_path,
               std::uint64_t seed, bool timing, bool downgrade) {
  charlab::SuiteOptions options;
  options.kinds = parse_kinds_arg(kinds_arg);
  options.limits.max_order = max_order;
  options.jobs = jobs;
  options.seed = seed;
  options.timing = timing;
  options.downgrade_failures = downgrade;

  charlab::SuiteReport report;
  if (suite_arg.empty() || suite_arg == "default") {
    report = charlab::run_suite(charlab::default_catalog(), options);
  } else {
    nlohmann::json doc = load_json_file(suite_arg);
    options.suite_name = doc.value("name", suite_arg);
    if (doc.contains("limits")) {
      const auto& lim = doc["limits"];
      options.limits.max_order = lim.value("max_order", options.limits.max_order);
      options.limits.max_instances =
          lim.value("max_instances", options.limits.max_instances);
      options.limits.per_ambient =
          lim.value("per_ambient", options.limits.per_ambient);
    }
    if (doc.contains("kinds") && kinds_arg.empty()) {
      options.kinds.clear();
      for (const auto& item : doc["kinds"])
        options.kinds.push_back(charlab::kind_from_name(item.get<std::string>()));
    }
    if (doc.contains("instances")) {
      std::vector<charlab::McKayInstance> instances;
      for (const auto& item : doc["instances"])
        instances.push_back(charlab::instance_from_json(item));
      report = charlab::run_suite_on_instances(instances, options);
    } else {
      std::vector<std::string> exprs;
      for (const auto& item : doc.at("catalog"))
        exprs.push_back(item.get<std::string>());
      report = charlab::run_suite(charlab::catalog_from_exprs(exprs), options);
    }
  }

  for (const auto& [kind, tally] : report.document["totals"].items()) {
    if (kind == "all") continue;
    std::cout << kind << ": " << tally["pass"].get<int>() << "/"
              << tally["instances"].get<int>() << " pass";
    if (tally["fail"].get<int>() != 0)
      std::cout << ", " << tally["fail"].get<int>() << " FAIL";
    if (tally["error"].get<int>() != 0)
      std::cout << ", " << tally["error"].get<int>() << " error";
    std::cout << "\n";
  }
  for (const auto& item : report.document["instances"]) {
    if (item["verdict"] == "pass") continue;
    std::cout << "[" << item["verdict"].get<std::string>() << "] "
              << item["label"].get<std::string>();
    if (item.contains("error"))
      std::cout << "\n    " << item["error"].get<std::string>();
    std::cout << "\n";
  }
  std::cout << "total: " << report.passed << "/" << report.total << " pass\n";

  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw charlab::Error("cannot write report to '" + report_path + "'");
    out << report.document.dump(2) << "\n";
  }
  if (report.failed > 0) return kExitCheckFailure;
  if (report.errors > 0) return kExitHypothesisError;
  return kExitOk;
}

int cmd_mine(const std::string& kind_arg, const std::string& catalog_arg,
             int max_order, int limit, int per_ambient) {
  charlab::Kind kind = charlab::kind_from_name(kind_arg);
  charlab::Limits limits;
  limits.max_order = max_order;
  limits.max_instances = limit;
  limits.per_ambient = per_ambient;
  auto catalog = load_catalog_arg(catalog_arg);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& inst : charlab::mine_instances(catalog, kind, limits))
    out.push_back(charlab::instance_to_json(inst));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_goodness(const std::string& expr, const std::string& normal_selector,
                 int char_row) {
  charlab::GroupPtr a = charlab::evaluate_group(expr);
  charlab::Subgroup n = charlab::apply_selector_text(normal_selector, a);
  if (!n.is_normal_in_parent())
    throw charlab::HypothesisError("the selected subgroup is not normal");
  charlab::Embedding n_emb = charlab::as_group(n);
  const auto& table = charlab::character_table(n_emb.sub);
  if (char_row < 0 || char_row >= table.num_rows())
    throw charlab::HypothesisError(
        "character row out of range; Irr(N) has " +
        std::to_string(table.num_rows()) + " rows");

  charlab::GoodnessTester tester(a, n, table.rows[char_row]);
  nlohmann::json certificates = nlohmann::json::array();
  long good_count = 0;
  for (int x = 0; x < a->order(); ++x) {
    charlab::GoodnessCertificate cert = tester.test(x);
    nlohmann::json item;
    item["element"] = cert.element;
    item["good"] = cert.good;
    if (cert.witness)
      item["witness"] = {{"extension_index", cert.witness->extension_index},
                         {"x", cert.witness->x}};
    certificates.push_back(std::move(item));
    if (cert.good) ++good_count;
  }
  nlohmann::json doc;
  doc["group"] = expr;
  doc["normal"] = normal_selector;
  doc["char_row"] = char_row;
  doc["char_degree"] = table.rows[char_row].degree();
  doc["good_elements"] = good_count;
  doc["certificates"] = std::move(certificates);
  std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"charlab: exact character theory for small finite groups"};
  app.require_subcommand(1);

  std::string chartab_expr, chartab_format = "json";
  auto* chartab_cmd =
      app.add_subcommand("chartab", "print the exact character table");
  chartab_cmd->add_option("expr", chartab_expr, "group expression")->required();
  chartab_cmd->add_option("--format", chartab_format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));

  std::string verify_suite = "default", verify_kinds, verify_report;
  int verify_max_order = 500, verify_jobs = 1;
  std::uint64_t verify_seed = 20240601ULL;
  bool verify_timing = false, verify_downgrade = false;
  auto* verify_cmd =
      app.add_subcommand("verify", "mine and check theorem instances");
  verify_cmd->add_option("--suite", verify_suite, "suite file or 'default'");
  verify_cmd->add_option("--kinds", verify_kinds,
                         "comma-separated kinds (default all)");
  verify_cmd->add_option("--max-order", verify_max_order,
                         "ambient group order bound");
  verify_cmd->add_option("--jobs", verify_jobs, "parallel checking jobs");
  verify_cmd->add_option("--report", verify_report,
                         "write the JSON report here");
  verify_cmd->add_option("--seed", verify_seed, "table-splitting seed");
  verify_cmd->add_flag("--timing", verify_timing,
                       "real timestamps and per-instance millis in the report");
  verify_cmd->add_flag("--downgrade-failures", verify_downgrade,
                       "report falsified equalities without the engine-bug label");

  std::string mine_kind, mine_catalog = "default";
  int mine_max_order = 500, mine_limit = 200, mine_per_ambient = 6;
  auto* mine_cmd = app.add_subcommand("mine", "print mined instances as JSON");
  mine_cmd->add_option("--kind", mine_kind, "check kind")->required();
  mine_cmd->add_option("--catalog", mine_catalog, "catalog file or 'default'");
  mine_cmd->add_option("--max-order", mine_max_order, "ambient order bound");
  mine_cmd->add_option("--limit", mine_limit, "instance cap");
  mine_cmd->add_option("--per-ambient", mine_per_ambient,
                       "instances per (ambient, kind)");

  std::string good_expr, good_normal;
  int good_char = 0;
  auto* good_cmd =
      app.add_subcommand("goodness", "per-element theta-good certificates");
  good_cmd->add_option("expr", good_expr, "ambient group expression")
      ->required();
  good_cmd->add_option("--normal", good_normal,
                       "selector for the normal subgroup N")
      ->required();
  good_cmd->add_option("--char", good_char,
                       "row index of theta in Irr(N), canonical order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (*chartab_cmd) return cmd_chartab(chartab_expr, chartab_format);
    if (*verify_cmd)
      return cmd_verify(verify_suite, verify_kinds, verify_max_order,
                        verify_jobs, verify_report, verify_seed, verify_timing,
                        verify_downgrade);
    if (*mine_cmd)
      return cmd_mine(mine_kind, mine_catalog, mine_max_order, mine_limit,
                      mine_per_ambient);
    if (*good_cmd) return cmd_goodness(good_expr, good_normal, good_char);
  } catch (const charlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const charlab::HypothesisError& e) {
    std::cerr << "hypothesis failure: " << e.what() << "\n";
    return kExitHypothesisError;
  } catch (const charlab::CheckFailure& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitParseError;
}
