#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apogen/family_spec.hpp"
#include "apogen/report.hpp"
#include "apogen/suite.hpp"

namespace {

// Join value-taking flags with '=' so negative rationals ("--lambda -1/2")
// survive option parsing, and let a bare --expect-pass mean "everything".
std::vector<std::string> preprocess(int argc, char** argv) {
  static const std::set<std::string> valued = {"--lambda", "--x",  "--y",
                                               "--la",     "--lb", "--lc",
                                               "--a",      "--b"};
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string tok = argv[i];
    if (tok == "--expect-pass" && (i + 1 >= argc || argv[i + 1][0] == '-')) {
      out.push_back("--expect-pass=ALL");
    } else if (valued.count(tok) && i + 1 < argc) {
      out.push_back(tok + "=" + argv[i + 1]);
      ++i;
    } else {
      out.push_back(std::move(tok));
    }
  }
  return out;
}

struct FamilyFlags {
  std::string family;
  long order = 1;
  std::string lambda;
  std::string la, lb, lc, a, b, y;
  int max_n = 8;

  void attach(CLI::App* cmd, bool with_max_n) {
    cmd->add_option("--family", family, "family name")
        ->required()
        ->check(CLI::IsMember(apogen::family_names()));
    cmd->add_option("--order", order, "table order l (families with an order)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--lambda", lambda,
                    "deformation parameter: \"symbolic\" or a rational p/q");
    cmd->add_option("--la", la, "log of base a, rational");
    cmd->add_option("--lb", lb, "log of base b, rational");
    cmd->add_option("--lc", lc, "log of base c, rational");
    cmd->add_option("--a", a, "base a, rational (two-base Hermite form)");
    cmd->add_option("--b", b, "base b, rational (two-base Hermite form)");
    cmd->add_option("--y", y, "second argument, rational (two-variable form)");
    if (with_max_n)
      cmd->add_option("--max-n", max_n, "highest row index")
          ->check(CLI::NonNegativeNumber);
  }

  apogen::FamilySpec to_spec(CLI::App* cmd) const {
    apogen::FamilySpec spec;
    spec.family = family;
    spec.max_n = max_n;
    if (cmd->count("--order")) spec.order = order;
    if (cmd->count("--lambda")) spec.lambda = lambda;
    if (cmd->count("--la")) spec.la = apogen::Rational::parse(la);
    if (cmd->count("--lb")) spec.lb = apogen::Rational::parse(lb);
    if (cmd->count("--lc")) spec.lc = apogen::Rational::parse(lc);
    if (cmd->count("--a")) spec.a = apogen::Rational::parse(a);
    if (cmd->count("--b")) spec.b = apogen::Rational::parse(b);
    if (cmd->count("--y")) spec.y = apogen::Rational::parse(y);
    return spec;
  }
};

int run_table(const apogen::FamilySpec& spec, const std::string& format,
              const std::string& output) {
  apogen::FamilyTable table = apogen::build_family(spec);
  std::string content = format == "csv"
                            ? apogen::table_to_csv(table)
                            : apogen::table_to_json(spec, table).dump(2) + "\n";
  if (output.empty())
    std::cout << content;
  else
    apogen::write_text_atomic(output, content);
  return 0;
}

int run_eval(const apogen::FamilySpec& spec, int n,
             const std::optional<apogen::Rational>& x) {
  std::cout << apogen::eval_family(spec, n, x).to_string() << "\n";
  return 0;
}

int run_verify(const apogen::SuiteConfig& cfg, const std::string& report) {
  apogen::SuiteRun run = apogen::run_suite(cfg);

  std::map<std::string, std::array<long, 3>> per_id;
  for (const auto& r : run.results) {
    auto& c = per_id[r.id];
    if (r.status == "pass")
      ++c[0];
    else if (r.status == "documented_discrepancy")
      ++c[1];
    else
      ++c[2];
  }
  for (const auto& [id, c] : per_id)
    std::cout << id << ": pass=" << c[0] << " documented_discrepancy=" << c[1]
              << " fail=" << c[2] << "\n";
  std::cout << "summary: checks=" << run.results.size()
            << " pass=" << run.pass
            << " documented_discrepancy=" << run.documented_discrepancy
            << " fail=" << run.fail << "\n";
  if (!run.unexpected_pass_ids.empty()) {
    std::cout << "unexpected-pass:";
    for (const auto& id : run.unexpected_pass_ids) std::cout << " " << id;
    std::cout << "\n";
  }
  if (!report.empty()) {
    apogen::write_text_atomic(report,
                              apogen::suite_report_json(run).dump(2) + "\n");
    std::cout << "report: " << report << "\n";
  }
  std::cout << "result: " << (run.ok() ? "OK" : "FAIL") << "\n";
  return run.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "apogen: exact tables, evaluation, and identity verification for "
      "alternating-kernel (Genocchi-type) polynomial families"};
  app.require_subcommand(1);

  // --- table ---
  CLI::App* table_cmd =
      app.add_subcommand("table", "write a family table (csv or json)");
  FamilyFlags table_flags;
  table_flags.attach(table_cmd, /*with_max_n=*/true);
  std::string format = "csv";
  std::string output;
  table_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_option("--output", output,
                        "output path (written atomically); stdout if absent");

  // --- eval ---
  CLI::App* eval_cmd =
      app.add_subcommand("eval", "evaluate one row at a rational point");
  FamilyFlags eval_flags;
  eval_flags.attach(eval_cmd, /*with_max_n=*/false);
  int eval_n = 0;
  std::string eval_x;
  eval_cmd->add_option("--n", eval_n, "row index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  eval_cmd->add_option("--x", eval_x, "evaluation point, rational");

  // --- verify ---
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the identity verification grids");
  std::string suite = "all";
  apogen::SuiteConfig cfg;
  std::vector<std::string> expect_pass;
  std::string report;
  verify_cmd->add_option("--suite", suite, "suite selector")
      ->check(CLI::IsMember({"all"}));
  verify_cmd->add_option("--only", cfg.only,
                         "restrict to these identity ids");
  verify_cmd->add_option(
      "--expect-pass", expect_pass,
      "treat these documented discrepancies as failures (bare flag or the "
      "literal ALL: all of them)");
  verify_cmd->add_option("--max-n", cfg.max_n, "row ceiling for the grids");
  verify_cmd->add_option("--lambda", cfg.lambda,
                         "\"symbolic\" or a rational p/q");
  verify_cmd->add_option("--precision", cfg.precision,
                         "series truncation override (0 = automatic)");
  verify_cmd->add_option("--report", report, "write the JSON report here");

  std::vector<std::string> args = preprocess(argc, argv);
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table_cmd->parsed())
      return run_table(table_flags.to_spec(table_cmd), format, output);
    if (eval_cmd->parsed()) {
      std::optional<apogen::Rational> x;
      if (eval_cmd->count("--x")) x = apogen::Rational::parse(eval_x);
      return run_eval(eval_flags.to_spec(eval_cmd), eval_n, x);
    }
    if (verify_cmd->parsed()) {
      for (const std::string& id : expect_pass) {
        if (id == "ALL") {
          for (const auto& e : apogen::default_expected_failures())
            cfg.expect_pass.push_back(e.id);
        } else {
          cfg.expect_pass.push_back(id);
        }
      }
      return run_verify(cfg, report);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
