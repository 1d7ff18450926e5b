// Command-line front door over the C API: graph I/O, spectra, family
// generation, theorem verification, fuzzing, and the oracle self-test.
//
// Exit codes: 0 = success / all checks pass, 1 = verification failure or
// fuzz violation, 2 = malformed input or unmet hypothesis.
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "steklov/steklov.h"

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void die(const std::string& reason) {
  std::cerr << "error: " << reason << "\n";
  std::exit(2);
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) die("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) die("cannot write '" + path + "'");
  out << text << "\n";
}

// Graph arguments and inline JSON arguments both accept a file path, "-"
// for stdin, or a literal JSON object.
std::string json_arg(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  return slurp(arg);
}

void check(stk_status status) {
  if (status != STK_OK) die(stk_last_error());
}

struct GraphHandle {
  stk_graph* g = nullptr;
  explicit GraphHandle(const std::string& arg) {
    check(stk_graph_from_json(json_arg(arg).c_str(), &g));
  }
  ~GraphHandle() { stk_graph_free(g); }
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { stk_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steklov spectra of weighted graphs with boundary"};
  app.require_subcommand(1);

  stk_tolerances tol;
  stk_default_tolerances(&tol);
  double tol_all = -1.0;
  app.add_option("--tol", tol_all,
                 "Override every tolerance with one value (defaults: eigenvalue "
                 "grouping 1e-7 relative, zero detection 1e-8, comparisons 1e-8)");
  app.add_option("--eig-tol", tol.eig_group_rel, "Relative eigenvalue-grouping tolerance");
  app.add_option("--zero-tol", tol.zero_abs, "Absolute zero-detection tolerance for Z / Z1");
  app.add_option("--compare-tol", tol.compare_abs, "Absolute comparison tolerance in verifiers");

  // spectrum
  std::string graph_arg, z_ids, report_path;
  auto* spectrum = app.add_subcommand("spectrum", "Steklov or vanishing-Dirichlet spectrum");
  spectrum->add_option("graph", graph_arg, "Graph JSON (file, '-', or literal)")->required();
  spectrum->add_option("--z", z_ids, "Comma-separated interior ids pinned to zero");
  spectrum->add_option("--report", report_path, "Write the report here instead of stdout");

  // lambda1
  std::string l1_graph, l1_z;
  auto* lambda1 = app.add_subcommand("lambda1", "Smallest vanishing-Dirichlet eigenvalue");
  lambda1->add_option("graph", l1_graph, "Graph JSON (file, '-', or literal)")->required();
  lambda1->add_option("--z", l1_z, "Comma-separated interior ids pinned to zero")->required();

  // family
  std::string family_kind, arms_csv, emit_path, oracle_path;
  int fam_r = -1, fam_l = -1, fam_d = -1;
  auto* family = app.add_subcommand("family", "Construct a named family with its oracle");
  family->add_option("kind", family_kind, "path | star | regular-star | comb | tree-ball")
      ->required();
  family->add_option("--r", fam_r, "Arm / tooth count or ball radius");
  family->add_option("--l", fam_l, "Arm / tooth length");
  family->add_option("--d", fam_d, "Tree degree");
  family->add_option("--arms", arms_csv, "Comma-separated arm lengths (star)");
  family->add_option("--emit", emit_path, "Write the graph JSON here ('-' for stdout)");
  family->add_option("--oracle", oracle_path, "Write the oracle JSON here ('-' for stdout)");

  // verify
  std::string verify_kind, ambient_arg, base_arg, vgraph_arg, vz, gamma_arg, tooth_arg,
      tooth_z, est_kind, cert_arg, vreport_path;
  int ver_r = -1, ver_l = -1, ver_d = -1;
  std::string ver_arms;
  auto* verify = app.add_subcommand("verify", "Run a theorem verifier, emit a verdict");
  verify->add_option("kind", verify_kind,
                     "mono | mono-homotopy | rigidity | rigidity-geometric | "
                     "rigidity-sigma2 | rigidity-sym | wedge | estimate")
      ->required();
  verify->add_option("--ambient", ambient_arg, "Ambient graph JSON");
  verify->add_option("--base", base_arg, "Base graph JSON");
  verify->add_option("--graph", vgraph_arg, "Graph JSON (wedge, estimate)");
  verify->add_option("--z", vz, "Wedge point id");
  verify->add_option("--gamma", gamma_arg, "Wedge factor graph JSON (rigidity-sym)");
  verify->add_option("--r", ver_r, "Wedge multiplicity / family parameter");
  verify->add_option("--tooth", tooth_arg, "Attached tooth graph JSON (rigidity-sym)");
  verify->add_option("--tooth-z", tooth_z, "Gluing vertex id inside the tooth");
  verify->add_option("--estimate", est_kind,
                     "regular-star | star | comb | tree-ball-super | tree-ball-sub | "
                     "isodiametric");
  verify->add_option("--l", ver_l, "Family parameter (estimate)");
  verify->add_option("--d", ver_d, "Family parameter (estimate)");
  verify->add_option("--arms", ver_arms, "Comma-separated arm lengths (estimate)");
  verify->add_option("--certificate", cert_arg, "Vertex-map JSON (file, '-', or literal)");
  verify->add_option("--report", vreport_path, "Write the verdict here instead of stdout");

  // fuzz
  int trials = 200, max_vertices = 40;
  std::uint64_t seed = 7;
  bool weighted = false, plant_bug = false;
  std::string fuzz_report_path;
  auto* fuzz = app.add_subcommand("fuzz", "Randomized monotonicity / wedge trials");
  fuzz->add_option("--trials", trials, "Number of trials");
  fuzz->add_option("--max-vertices", max_vertices, "Largest random graph");
  fuzz->add_option("--seed", seed, "Deterministic seed");
  fuzz->add_flag("--weighted", weighted, "Weighted comb-growth mode");
  fuzz->add_flag("--plant-bug", plant_bug, "Invert the comparison; the harness must flag it");
  fuzz->add_option("--report", fuzz_report_path, "Write the report here instead of stdout");

  // selftest
  std::string selftest_report_path;
  auto* selftest = app.add_subcommand("selftest", "Closed-form grid vs. dense eigensolver");
  selftest->add_option("--report", selftest_report_path, "Write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (tol_all > 0) tol = {tol_all, tol_all, tol_all};

  auto arms_to_json = [](const std::string& csv) {
    ordered_json arr = ordered_json::array();
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        arr.push_back(std::stoi(item));
      } catch (const std::exception&) {
        die("arm lengths must be integers, got '" + item + "'");
      }
    }
    return arr;
  };

  if (*spectrum) {
    GraphHandle g(graph_arg);
    OwnedString out;
    check(stk_spectrum_report(g.g, z_ids.c_str(), &tol, &out.s));
    emit(report_path, out.str());
    return 0;
  }

  if (*lambda1) {
    GraphHandle g(l1_graph);
    double value = 0;
    check(stk_lambda1(g.g, l1_z.c_str(), &value));
    if (std::isinf(value)) {
      std::cout << "inf\n";
    } else {
      std::printf("%.17g\n", value);
    }
    return 0;
  }

  if (*family) {
    ordered_json params = ordered_json::object();
    if (fam_r >= 0) params["r"] = fam_r;
    if (fam_l >= 0) params["l"] = fam_l;
    if (fam_d >= 0) params["d"] = fam_d;
    if (!arms_csv.empty()) params["arms"] = arms_to_json(arms_csv);
    OwnedString graph_json, oracle_json;
    check(stk_family(family_kind.c_str(), params.dump().c_str(), &graph_json.s,
                     &oracle_json.s));
    if (!emit_path.empty()) emit(emit_path, graph_json.str());
    if (!oracle_path.empty()) emit(oracle_path, oracle_json.str());
    if (emit_path.empty() && oracle_path.empty()) emit("-", oracle_json.str());
    return 0;
  }

  if (*verify) {
    ordered_json request = ordered_json::object();
    auto put_graph = [&](const char* key, const std::string& arg) {
      if (arg.empty()) die(std::string("verify ") + verify_kind + " needs --" + key);
      auto j = ordered_json::parse(json_arg(arg), nullptr, false);
      if (j.is_discarded()) die(std::string("malformed graph JSON for --") + key);
      request[key] = j;
    };
    std::string kind = verify_kind;
    if (kind == "mono" || kind == "mono-homotopy" || kind == "rigidity" ||
        kind == "rigidity-geometric" || kind == "rigidity-sigma2") {
      put_graph("ambient", ambient_arg);
      put_graph("base", base_arg);
    } else if (kind == "rigidity-sym") {
      put_graph("gamma", gamma_arg);
      put_graph("tooth", tooth_arg);
      if (vz.empty() || tooth_z.empty() || ver_r < 1) {
        die("verify rigidity-sym needs --z, --tooth-z, and --r >= 1");
      }
      request["z"] = vz;
      request["tooth_z"] = tooth_z;
      request["r"] = ver_r;
    } else if (kind == "wedge") {
      put_graph("graph", vgraph_arg);
      if (vz.empty()) die("verify wedge needs --z");
      request["z"] = vz;
    } else if (kind == "estimate") {
      put_graph("graph", vgraph_arg);
      if (est_kind.empty()) die("verify estimate needs --estimate <kind>");
      request["kind"] = est_kind;
      ordered_json params = ordered_json::object();
      if (ver_r >= 0) params["r"] = ver_r;
      if (ver_l >= 0) params["l"] = ver_l;
      if (ver_d >= 0) params["d"] = ver_d;
      if (!ver_arms.empty()) params["arms"] = arms_to_json(ver_arms);
      request["params"] = params;
      if (!cert_arg.empty()) {
        auto cert = ordered_json::parse(json_arg(cert_arg), nullptr, false);
        if (cert.is_discarded()) die("malformed certificate JSON");
        request["certificate"] = cert;
      }
    } else {
      die("unknown verify kind '" + kind + "'");
    }
    OwnedString report;
    int verdict = 2;
    check(stk_verify(verify_kind.c_str(), request.dump().c_str(), &tol, &report.s, &verdict));
    emit(vreport_path, report.str());
    return verdict;
  }

  if (*fuzz) {
    ordered_json config = {{"trials", trials},
                           {"max_vertices", max_vertices},
                           {"seed", seed},
                           {"weighted", weighted},
                           {"plant_bug", plant_bug}};
    OwnedString report;
    int violations = 0;
    check(stk_fuzz(config.dump().c_str(), &tol, &report.s, &violations));
    emit(fuzz_report_path, report.str());
    return violations > 0 ? 1 : 0;
  }

  if (*selftest) {
    OwnedString report;
    int failures = 0;
    check(stk_selftest(&tol, &report.s, &failures));
    emit(selftest_report_path, report.str());
    return failures > 0 ? 1 : 0;
  }

  return 2;
}
