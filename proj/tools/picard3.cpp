#include "picard3/k3_report.hpp"
#include "picard3/serialize.hpp"
#include "picard3/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

namespace {

using namespace picard3;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct Style {
  bool color = false;
  std::string bold(const std::string& s) const { return color ? "\033[1m" + s + "\033[0m" : s; }
  std::string green(const std::string& s) const { return color ? "\033[32m" + s + "\033[0m" : s; }
  std::string red(const std::string& s) const { return color ? "\033[31m" + s + "\033[0m" : s; }
};

Style detect_style() {
  Style st;
  st.color = std::getenv("PICARD3_NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
  return st;
}

struct Config {
  std::string format = "text";
  // analyze
  std::int64_t n = 0, k = 0, l = 0;
  std::string lattice_json;
  std::int64_t bound = 20;
  std::int64_t cap = 1000;
  // verify
  std::vector<std::string> suites;
  std::int64_t trials = 20;
  std::uint64_t seed = 1;
  std::int64_t gram_bound = 5;
  // salem
  std::vector<std::int64_t> matrix;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::pair<std::int64_t, std::int64_t> family_from_config(const Config& cfg, const CLI::App& cmd) {
  if (cmd.count("--n")) {
    if (cfg.n < 1) throw UsageError("--n must be >= 1");
    return {cfg.n, -cfg.n};
  }
  if (cmd.count("--k") || cmd.count("--l")) {
    if (!cmd.count("--k") || !cmd.count("--l")) throw UsageError("--k and --l must be given together");
    if (cfg.k == 0 || cfg.l == 0) throw UsageError("--k and --l must be nonzero");
    return {cfg.k, cfg.l};
  }
  if (cmd.count("--lattice")) {
    std::string text = cfg.lattice_json;
    if (!text.empty() && text.front() == '@') {
      std::ifstream in(text.substr(1));
      if (!in) throw UsageError("cannot read " + text.substr(1));
      std::stringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("invalid lattice JSON: ") + e.what());
    }
    LatticeSpec spec = parse_lattice(j);
    if (!spec.k) throw UsageError("analyze needs a family lattice (U(k)+<2l> or M_n), not a bare Gram matrix");
    return {*spec.k, *spec.l};
  }
  throw UsageError("one of --n, --k/--l or --lattice is required");
}

int cmd_analyze(const Config& cfg, const CLI::App& cmd, const Style& st) {
  auto [k, l] = family_from_config(cfg, cmd);
  ReportOptions opts;
  opts.search_bound = cfg.bound;
  opts.form_cap = cfg.cap;
  AutReport report = analyze_picard(k, l, opts);
  if (cfg.format == "json") {
    emit(to_json(report));
  } else {
    std::cout << st.bold("automorphism report") << "\n" << render_text(report);
  }
  if (!report.hypotheses_met) {
    std::cerr << "hypotheses not met: "
              << (!report.signature_ok ? "signature is not (1,2)" : "lattice represents -2 (not root free)") << "\n";
    return kExitDomain;
  }
  for (const auto& s : report.samples)
    if (!s.all_checks()) return kExitDomain;
  return kExitOk;
}

int cmd_verify(const Config& cfg, const Style& st) {
  VerifyOptions opts{cfg.trials, cfg.seed, cfg.gram_bound};
  std::vector<std::string> names = cfg.suites.empty() ? suite_names() : cfg.suites;
  bool all_ok = true;
  json suites = json::array();
  std::ostringstream text;
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, opts);
    all_ok = all_ok && r.ok();
    suites.push_back({{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"messages", r.messages}});
    text << (r.ok() ? st.green("PASS") : st.red("FAIL")) << " " << r.name << ": " << r.checks - r.failures << "/"
         << r.checks << " checks passed\n";
    for (const auto& m : r.messages) text << "  " << m << "\n";
  }
  if (cfg.format == "json") {
    emit({{"schema", kSchema},
          {"seed", cfg.seed},
          {"trials", cfg.trials},
          {"gram_bound", cfg.gram_bound},
          {"suites", suites},
          {"ok", all_ok}});
  } else {
    std::cout << st.bold("verify") << " seed " << cfg.seed << ", trials " << cfg.trials << ", gram bound "
              << cfg.gram_bound << "\n"
              << text.str();
  }
  return all_ok ? kExitOk : kExitDomain;
}

int cmd_salem(const Config& cfg, const Style& st) {
  if (cfg.matrix.size() != 4) throw UsageError("--matrix needs exactly four integers a,b,c,d");
  Mat2 alpha{cfg.matrix[0], cfg.matrix[1], cfg.matrix[2], cfg.matrix[3]};
  if (alpha.det() != 1 && alpha.det() != -1) {
    std::cerr << "det " << to_string(alpha) << " = " << alpha.det() << " is not +-1\n";
    return kExitDomain;
  }
  SalemDatum s = salem_poly(alpha);
  if (cfg.format == "json") {
    json j = to_json(s);
    j["schema"] = kSchema;
    emit(j);
  } else {
    std::cout << st.bold("salem") << "\n" << render_text(s);
  }
  return kExitOk;
}

int cmd_congruence(const Config& cfg, const Style& st) {
  if (cfg.n < 1) throw UsageError("--n must be >= 1");
  CongruenceData c = congruence_data(cfg.n, cfg.bound);
  if (cfg.format == "json") {
    json j = to_json(c);
    j["schema"] = kSchema;
    j["bounds"] = {{"search", cfg.bound}};
    emit(j);
  } else {
    std::cout << st.bold("congruence") << " (bound " << cfg.bound << ")\n" << render_text(c);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism groups of rank-3 Picard lattices via Clifford algebras"};
  app.require_subcommand(1);
  Config cfg;
  const Style st = detect_style();
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Automorphism report for U(k)+<2l> or M_n");
  auto* opt_n = analyze->add_option("--n", cfg.n, "M_n = U(n)+<-2n>");
  auto* opt_k = analyze->add_option("--k", cfg.k, "k in U(k)+<2l>");
  auto* opt_l = analyze->add_option("--l", cfg.l, "l in U(k)+<2l>");
  auto* opt_lat = analyze->add_option("--lattice", cfg.lattice_json, "Lattice JSON (or @file)");
  opt_n->excludes(opt_k)->excludes(opt_l)->excludes(opt_lat);
  opt_lat->excludes(opt_k)->excludes(opt_l);
  analyze->add_option("--bound", cfg.bound, "Search bound")->check(CLI::PositiveNumber)->capture_default_str();
  analyze->add_option("--cap", cfg.cap, "Discriminant-group cap")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(analyze);

  CLI::App* verify = app.add_subcommand("verify", "Seeded property suites");
  verify->add_option("--suite", cfg.suites, "Suites to run (clifford, exterior, roundtrip)")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", cfg.trials, "Trials per suite")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  verify->add_option("--gram-bound", cfg.gram_bound, "Bound on random Gram parameters")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(verify);

  CLI::App* salem = app.add_subcommand("salem", "Salem data of a 2x2 unit");
  salem->add_option("--matrix", cfg.matrix, "a,b,c,d")->required()->delimiter(',')->allow_extra_args(false);
  add_format(salem);

  CLI::App* congruence = app.add_subcommand("congruence", "Congruence data of G_n");
  congruence->add_option("--n", cfg.n, "Level")->required();
  congruence->add_option("--bound", cfg.bound, "Torsion search bound")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(congruence);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, *analyze, st);
    if (*verify) return cmd_verify(cfg, st);
    if (*salem) return cmd_salem(cfg, st);
    if (*congruence) return cmd_congruence(cfg, st);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
