#include "perfloc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "perfloc/freeprod.hpp"
#include "perfloc/suites.hpp"
#include "perfloc/tower.hpp"

namespace perfloc::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string format = "json";
  std::string output;

  unsigned max_level = 6;
  unsigned level = 2;

  std::size_t rank1 = 2;
  std::size_t rank2 = 2;
  std::string u1 = "x1 x2";
  std::string u2 = "x1 x2";

  std::size_t samples = 500;
  std::size_t max_len = 6;
  std::size_t scan_max_len = 3;
  std::size_t budget = 10000;
  std::size_t random_len = 6;
  std::optional<std::uint64_t> seed;
  std::size_t degree = 8;
  std::size_t oracle_seeds = 20;
  unsigned workers = 1;

  std::string lhs;
  std::string rhs;
};

GContext context_from(const RunConfig& cfg) {
  return GContext::make(parse_word(cfg.u1, cfg.rank1),
                        parse_word(cfg.u2, cfg.rank2));
}

json context_config(const RunConfig& cfg) {
  return {{"rank1", cfg.rank1}, {"rank2", cfg.rank2}, {"u1", cfg.u1}, {"u2", cfg.u2}};
}

json checks_json(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const auto& c : checks) arr.push_back(to_json(c));
  return arr;
}

struct Outcome {
  json report;
  std::vector<CheckResult> checks;
};

Outcome verify_tower(const RunConfig& cfg) {
  const auto suite = run_tower_suite(cfg.max_level);
  json levels = json::array();
  for (unsigned n = 0; n <= cfg.max_level; ++n) {
    json level = {{"n", n},
                  {"rank", level_rank(n)},
                  {"x01_length", suite.x01_lengths[n]},
                  {"perfect", suite.perfectness[n].all_zero}};
    if (n >= 1 && n - 1 < suite.psi.size()) {
      const auto& psi = suite.psi[n - 1];
      level["relations_ok"] = psi.relations_ok;
      level["sign"] = psi.sign;
      level["order_checked_to"] = psi.order_checked_to;
    }
    levels.push_back(std::move(level));
  }
  return {{{"config", {{"command", cfg.command}, {"max_level", cfg.max_level}}},
           {"levels", std::move(levels)},
           {"checks", checks_json(suite.checks)}},
          suite.checks};
}

Outcome verify_kernel(const RunConfig& cfg) {
  const GContext ctx = context_from(cfg);
  KernelSuiteOptions opts;
  opts.samples = cfg.samples;
  opts.max_len = cfg.max_len;
  opts.seed = *cfg.seed;
  opts.degree = cfg.degree;
  opts.oracle_seeds = cfg.oracle_seeds;
  auto checks = run_kernel_suite(ctx, opts);
  json config = {{"command", cfg.command},
                 {"ctx", context_config(cfg)},
                 {"samples", cfg.samples},
                 {"max_len", cfg.max_len},
                 {"seed", *cfg.seed},
                 {"degree", cfg.degree},
                 {"oracle_seeds", cfg.oracle_seeds}};
  return {{{"config", std::move(config)}, {"checks", checks_json(checks)}}, checks};
}

Outcome scan_commute(const RunConfig& cfg) {
  const GContext ctx = context_from(cfg);
  ScanOptions opts;
  opts.max_len = cfg.scan_max_len;
  opts.budget = cfg.budget;
  opts.seed = *cfg.seed;
  opts.random_max_len = cfg.random_len;
  opts.workers = cfg.workers;
  const ScanReport report = commute_lemma_scan(ctx, opts);
  CheckResult none{"no_counterexamples"};
  none.trials = report.pairs_tested;
  none.failures = report.counterexamples.size();
  none.passed = report.counterexamples.empty();
  if (!none.passed) {
    none.detail = "x = " + to_string(report.counterexamples[0].x) +
                  ", y = " + to_string(report.counterexamples[0].y);
  }
  json j = to_json(report);
  j["config"] = {{"command", cfg.command},
                 {"ctx", context_config(cfg)},
                 {"max_len", cfg.scan_max_len},
                 {"budget", cfg.budget},
                 {"seed", *cfg.seed},
                 {"random_len", cfg.random_len}};
  j["checks"] = checks_json({none});
  return {std::move(j), {none}};
}

Outcome check_rn_split(const RunConfig& cfg) {
  auto checks = run_rn_split(cfg.level);
  json j = {{"config", {{"command", cfg.command}, {"level", cfg.level}}},
            {"checks", checks_json(checks)}};
  if (checks[0].passed) {
    const GContext ctx = split_Rn_context(cfg.level);
    j["ctx"] = to_json(ctx);
    j["relator_length"] = x01_word(cfg.level).size();
  }
  return {std::move(j), checks};
}

Outcome lp_demo(const RunConfig& cfg) {
  const auto demo = run_lp_demo(*cfg.seed, cfg.samples);
  json j = {{"config", {{"command", cfg.command},
                        {"seed", *cfg.seed},
                        {"samples", cfg.samples}}},
            {"half_image", demo.half_image.get_str()},
            {"checks", checks_json(demo.checks)}};
  return {std::move(j), demo.checks};
}

Outcome eq(const RunConfig& cfg) {
  const GContext ctx = context_from(cfg);
  const SyllableWord lhs = parse_syllable_word(cfg.lhs, ctx.rank1, ctx.rank2);
  const SyllableWord rhs = parse_syllable_word(cfg.rhs, ctx.rank1, ctx.rank2);
  const SyllableWord diff = lhs * sp_invert(rhs);
  const bool equal = eq_in_G(ctx, lhs, rhs);
  json j = {{"config", {{"command", cfg.command},
                        {"ctx", context_config(cfg)},
                        {"lhs", cfg.lhs},
                        {"rhs", cfg.rhs}}},
            {"lhs", to_string(lhs)},
            {"rhs", to_string(rhs)},
            {"equal", equal}};
  if (in_h_kernel(diff)) {
    j["k_image"] = to_string(k_image(ctx, diff));
  } else {
    auto [a, b] = h_map(diff);
    j["h_image"] = {to_string(a), to_string(b)};
  }
  return {std::move(j), {}};
}

void print_text(std::ostream& out, const Outcome& o) {
  out << o.report.at("config").at("command").get<std::string>() << '\n';
  if (o.report.contains("equal")) {
    out << "equal: " << (o.report.at("equal").get<bool>() ? "true" : "false")
        << '\n';
  }
  for (const auto& c : o.checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(34)
        << c.name << " trials=" << c.trials << " failures=" << c.failures;
    if (!c.passed) out << "  first: " << c.detail;
    out << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Perfect group tower, its localization, and the free-product "
               "quotient G: exact verification tool",
               "perfloc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", cfg.output, "write the report to this file");

  auto add_context = [&](CLI::App* sub) {
    sub->add_option("--u1", cfg.u1, "u1 as a word over F1 (x/X tokens)");
    sub->add_option("--u2", cfg.u2, "u2 as a word over F2 (x/X tokens)");
    sub->add_option("--rank1", cfg.rank1, "rank of F1")->check(CLI::PositiveNumber);
    sub->add_option("--rank2", cfg.rank2, "rank of F2")->check(CLI::PositiveNumber);
  };

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* tower = verify->add_subcommand("tower", "psi_n, x01 lengths, perfectness");
  tower->fallthrough();
  tower->add_option("--max-level", cfg.max_level, "highest level checked")
      ->check(CLI::Range(1u, 10u));
  auto* kernel = verify->add_subcommand("kernel", "K-basis rewriting suite");
  kernel->fallthrough();
  add_context(kernel);
  kernel->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);
  kernel->add_option("--max-len", cfg.max_len)->check(CLI::PositiveNumber);
  kernel->add_option("--seed", cfg.seed)->required();
  kernel->add_option("--degree", cfg.degree, "oracle degree")->check(CLI::Range(2, 64));
  kernel->add_option("--oracle-seeds", cfg.oracle_seeds);

  auto* scan = app.add_subcommand("scan", "empirical scans");
  scan->require_subcommand(1);
  scan->fallthrough();
  auto* commute = scan->add_subcommand("commute", "commutation lemma scan");
  commute->fallthrough();
  add_context(commute);
  commute->add_option("--max-len", cfg.scan_max_len, "exhaustive word length");
  commute->add_option("--budget", cfg.budget, "random pairs after the exhaustive part");
  commute->add_option("--random-len", cfg.random_len, "length bound for random words");
  commute->add_option("--seed", cfg.seed)->required();
  commute->add_option("--workers", cfg.workers, "threads; does not change the report")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "structural checks");
  check->require_subcommand(1);
  check->fallthrough();
  auto* rn = check->add_subcommand("rn-split", "split R_n into a two-factor quotient");
  rn->fallthrough();
  rn->add_option("--level", cfg.level)->required()->check(CLI::Range(2u, 10u));

  auto* lp = app.add_subcommand("lp", "the localization LP");
  lp->require_subcommand(1);
  lp->fallthrough();
  auto* demo = lp->add_subcommand("demo", "LP/P = Q/Z non-perfectness witness");
  demo->fallthrough();
  demo->add_option("--seed", cfg.seed)->required();
  demo->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber);

  auto* eqcmd = app.add_subcommand("eq", "decide equality of two elements of G");
  eqcmd->fallthrough();
  add_context(eqcmd);
  eqcmd->add_option("--lhs", cfg.lhs, "syllable text, e.g. 'a1 | b1 | A1'")->required();
  eqcmd->add_option("--rhs", cfg.rhs)->required();

  std::vector<const char*> argv{"perfloc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  Outcome outcome;
  try {
    if (tower->parsed()) {
      cfg.command = "verify tower";
      outcome = verify_tower(cfg);
    } else if (kernel->parsed()) {
      cfg.command = "verify kernel";
      outcome = verify_kernel(cfg);
    } else if (commute->parsed()) {
      cfg.command = "scan commute";
      outcome = scan_commute(cfg);
    } else if (rn->parsed()) {
      cfg.command = "check rn-split";
      outcome = check_rn_split(cfg);
    } else if (demo->parsed()) {
      cfg.command = "lp demo";
      if (demo->count("--samples") == 0) cfg.samples = 1000;
      outcome = lp_demo(cfg);
    } else if (eqcmd->parsed()) {
      cfg.command = "eq";
      outcome = eq(cfg);
    } else {
      err << "usage error: no command\n";
      return kUsage;
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const AlphabetError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const bool ok = all_passed(outcome.checks);
  outcome.report["ok"] = ok;

  std::ostringstream rendered;
  if (cfg.format == "text") {
    print_text(rendered, outcome);
  } else {
    rendered << outcome.report.dump(2) << '\n';
  }
  if (cfg.output.empty()) {
    out << rendered.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "cannot write " << cfg.output << '\n';
      return kUsage;
    }
    file << rendered.str();
  }
  if (!ok) {
    for (const auto& c : outcome.checks) {
      if (!c.passed) err << "violated: " << c.name << ": " << c.detail << '\n';
    }
  }
  return ok ? kOk : kPropertyViolated;
}

}  // namespace perfloc::cli
