#include <algorithm>
#include <cmath>
#include <set>

#include "steklov/theorems.hpp"

namespace steklov {

std::uint64_t FuzzRng::next() {
  // splitmix64; fixed here so reports do not depend on the standard
  // library's distribution implementations.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int FuzzRng::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

double FuzzRng::uniform_real(double lo, double hi) {
  return lo + (next() >> 11) * 0x1.0p-53 * (hi - lo);
}

Graph random_labeled_tree(int n, FuzzRng& rng) {
  if (n < 2) throw error(errc::bad_parameter, "random tree needs n >= 2");
  std::vector<VertexSpec> vs;
  for (int i = 0; i < n; ++i) vs.push_back({"v" + std::to_string(i), 1.0, false});
  std::vector<EdgeSpec> es;
  if (n == 2) {
    es.push_back({"v0", "v1", 1.0});
  } else {
    // Pruefer decode.
    std::vector<int> code(n - 2);
    std::vector<int> degree(n, 1);
    for (int& c : code) {
      c = rng.uniform_int(0, n - 1);
      ++degree[c];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.insert(v);
    for (int c : code) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      es.push_back({"v" + std::to_string(leaf), "v" + std::to_string(c), 1.0});
      if (--degree[c] == 1) leaves.insert(c);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    es.push_back({"v" + std::to_string(a), "v" + std::to_string(b), 1.0});
  }
  return with_combinatorial_boundary(Graph(vs, es));
}

Graph random_subtree(const Graph& tree, FuzzRng& rng) {
  int n = tree.vertex_count();
  int root = rng.uniform_int(0, n - 1);
  std::set<int> chosen{root};
  // Grow over tree edges from the chosen set; not uniform over subtrees,
  // which is fine for violation search.
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : tree.edges()) {
      bool has_u = chosen.count(e.u), has_v = chosen.count(e.v);
      if (has_u == has_v) continue;
      if (rng.uniform_real(0.0, 1.0) < 0.55) {
        chosen.insert(has_u ? e.v : e.u);
        grew = true;
      }
    }
    if (chosen.size() >= static_cast<size_t>(n)) break;
  }
  if (chosen.size() < 2) {
    // Force one incident edge so the subtree is nontrivial.
    for (const auto& e : tree.edges()) {
      if (chosen.count(e.u)) {
        chosen.insert(e.v);
        break;
      }
      if (chosen.count(e.v)) {
        chosen.insert(e.u);
        break;
      }
    }
  }
  Graph sub = induced_subgraph(tree, std::vector<int>(chosen.begin(), chosen.end()), {});
  return with_combinatorial_boundary(sub);
}

Graph random_connected_graph(int n, bool weighted, FuzzRng& rng) {
  Graph tree = random_labeled_tree(std::max(n, 3), rng);
  auto vs = tree.vertex_specs();
  auto es = tree.edge_specs();
  int extra = rng.uniform_int(0, 2);
  std::set<std::pair<int, int>> present;
  for (const auto& e : tree.edges()) present.insert(std::minmax(e.u, e.v));
  for (int t = 0; t < extra; ++t) {
    int u = rng.uniform_int(0, tree.vertex_count() - 1);
    int v = rng.uniform_int(0, tree.vertex_count() - 1);
    if (u == v) continue;
    if (!present.insert(std::minmax(u, v)).second) continue;
    es.push_back({tree.id(u), tree.id(v), 1.0});
  }
  for (auto& v : vs) {
    v.boundary = rng.uniform_real(0.0, 1.0) < 0.4;
    if (weighted) v.measure = rng.uniform_real(0.5, 2.0);
  }
  vs[0].boundary = false;  // keep an interior vertex for wedge points
  bool any_boundary = false;
  for (const auto& v : vs) any_boundary = any_boundary || v.boundary;
  if (!any_boundary) vs.back().boundary = true;
  if (weighted) {
    for (auto& e : es) e.weight = rng.uniform_real(0.5, 2.0);
  }
  return Graph(vs, es);
}

namespace {

// Base graph plus random teeth; ambient boundary keeps every base boundary
// vertex, so m(B~_x) >= m_x holds by construction.
struct CombGrowth {
  Graph base;
  Graph ambient;
};

CombGrowth random_weighted_comb(int max_vertices, FuzzRng& rng) {
  CombGrowth out;
  int n = rng.uniform_int(4, std::max(4, max_vertices / 3));
  out.base = random_connected_graph(n, true, rng);
  auto vs = out.base.vertex_specs();
  auto es = out.base.edge_specs();
  for (int x = 0; x < out.base.vertex_count(); ++x) {
    if (rng.uniform_real(0.0, 1.0) < 0.5) continue;
    int len = rng.uniform_int(1, 3);
    std::string prev = out.base.id(x);
    for (int j = 1; j <= len; ++j) {
      std::string id = out.base.id(x) + "#" + std::to_string(j);
      bool tip_boundary = j == len && rng.uniform_real(0.0, 1.0) < 0.5;
      vs.push_back({id, rng.uniform_real(0.5, 2.0), tip_boundary});
      es.push_back({prev, id, rng.uniform_real(0.5, 2.0)});
      prev = id;
    }
  }
  out.ambient = Graph(vs, es);
  return out;
}

}  // namespace

FuzzResult fuzz(const FuzzConfig& config) {
  FuzzRng rng(config.seed);
  FuzzResult result;
  json trials = json::array();
  json counterexamples = json::array();

  for (int trial = 0; trial < config.trials; ++trial) {
    json entry;
    entry["trial"] = trial;
    json checks = json::object();
    auto record = [&](const std::string& name, const VerdictReport& report, const json& graphs) {
      checks[name] = report.verdict;
      if (report.verdict == "fail") {
        ++result.violations;
        json ce = {{"trial", trial}, {"check", name}, {"report", report.to_json()}};
        ce["graphs"] = graphs;
        counterexamples.push_back(ce);
      }
    };

    if (!config.weighted) {
      entry["mode"] = "tree-subtree";
      int n = rng.uniform_int(4, config.max_vertices);
      Graph tree = random_labeled_tree(n, rng);
      Graph sub = random_subtree(tree, rng);
      entry["n"] = n;

      auto mono = verify_monotonicity(tree, sub, config.tol);
      if (config.plant_bug) {
        // Self-test mode: reverse every comparison; a healthy implementation
        // must then report violations.
        for (auto& [name, slack] : mono.residuals) slack = -slack;
        mono.witness = nullptr;
        mono.finish(config.tol.compare_abs);
      }
      record("monotonicity", mono,
             {{"ambient", graph_to_json(tree)}, {"base", graph_to_json(sub)}});

      double sigma2 = steklov_spectrum(tree).sigma(2);
      VerdictReport iso;
      iso.theorem = "isodiametric";
      iso.residuals.emplace_back("sigma2<=2/diam", 2.0 / diameter(tree) - sigma2);
      iso.finish(config.tol.compare_abs);
      record("isodiametric", iso, {{"graph", graph_to_json(tree)}});

      auto interior = tree.interior_indices();
      if (!interior.empty()) {
        int z = interior[rng.uniform_int(0, static_cast<int>(interior.size()) - 1)];
        auto wedge = verify_wedge_identity(tree, tree.id(z), config.tol);
        record("wedge-identity", wedge,
               {{"graph", graph_to_json(tree)}, {"z", tree.id(z)}});
      }
    } else {
      entry["mode"] = "weighted-comb";
      auto growth = random_weighted_comb(config.max_vertices, rng);
      entry["n"] = growth.ambient.vertex_count();
      auto mono = verify_monotonicity(growth.ambient, growth.base, config.tol);
      if (config.plant_bug) {
        for (auto& [name, slack] : mono.residuals) slack = -slack;
        mono.witness = nullptr;
        mono.finish(config.tol.compare_abs);
      }
      record("monotonicity", mono,
             {{"ambient", graph_to_json(growth.ambient)},
              {"base", graph_to_json(growth.base)}});
    }
    entry["checks"] = checks;
    trials.push_back(entry);
  }

  result.report = {{"theorem", "fuzz"},
                   {"config",
                    {{"trials", config.trials},
                     {"max_vertices", config.max_vertices},
                     {"seed", config.seed},
                     {"weighted", config.weighted},
                     {"plant_bug", config.plant_bug}}},
                   {"tolerances", tolerances_to_json(config.tol)},
                   {"violations", result.violations},
                   {"verdict", result.violations == 0 ? "pass" : "fail"},
                   {"trials", trials},
                   {"counterexamples", counterexamples},
                   {"seed", config.seed}};
  return result;
}

namespace {

bool spectra_match(const Eigen::VectorXd& computed, const Eigen::VectorXd& oracle, double tol) {
  if (computed.size() != oracle.size()) return false;
  for (int i = 0; i < computed.size(); ++i) {
    if (std::abs(computed[i] - oracle[i]) > tol * std::max(1.0, std::abs(oracle[i]))) return false;
  }
  return true;
}

void run_case(const std::string& name, const Graph& g, const ClosedFormSpectrum& oracle,
              const Tolerances& tol, json& cases, int& failures) {
  auto spec = steklov_spectrum(g);
  bool values_ok = spectra_match(spec.eigenvalues, oracle.flatten(), 1e-8);
  // Multiplicities under the grouping tolerance.
  bool mult_ok = true;
  auto groups = spec.multiplicity_groups(tol.eig_group_rel);
  if (groups.size() != oracle.eigenvalues.size()) {
    mult_ok = false;
  } else {
    for (size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].second - groups[i].first + 1 != oracle.eigenvalues[i].second) mult_ok = false;
    }
  }
  bool ok = values_ok && mult_ok;
  if (!ok) ++failures;
  cases.push_back({{"case", name}, {"values", values_ok}, {"multiplicities", mult_ok}});
}

void star_grid(int r, int max_arm, std::vector<int>& arms, const Tolerances& tol, json& cases,
               int& failures) {
  if (static_cast<int>(arms.size()) == r) {
    auto spec = make_star_spec(arms);
    std::string name = "St(";
    for (size_t i = 0; i < arms.size(); ++i) name += (i ? "," : "") + std::to_string(arms[i]);
    name += ")";
    run_case(name, make_star(spec), star_spectrum(spec), tol, cases, failures);
    return;
  }
  int lo = arms.empty() ? 1 : arms.back();
  for (int l = lo; l <= max_arm; ++l) {
    arms.push_back(l);
    star_grid(r, max_arm, arms, tol, cases, failures);
    arms.pop_back();
  }
}

}  // namespace

FuzzResult selftest(const Tolerances& tol) {
  FuzzResult result;
  json cases = json::array();
  int failures = 0;
  for (int r = 2; r <= 5; ++r) {
    std::vector<int> arms;
    star_grid(r, 6, arms, tol, cases, failures);
  }
  for (int r = 2; r <= 5; ++r) {
    for (int l = 1; l <= 5; ++l) {
      run_case("St(" + std::to_string(r) + ";" + std::to_string(l) + ")",
               make_regular_star(r, l), regular_star_spectrum(r, l), tol, cases, failures);
    }
  }
  for (int r = 1; r <= 6; ++r) {
    for (int l = 1; l <= 5; ++l) {
      run_case("Comb(" + std::to_string(r) + ";" + std::to_string(l) + ")",
               make_regular_comb(r, l), regular_comb_spectrum(r, l), tol, cases, failures);
    }
  }
  for (int d = 3; d <= 4; ++d) {
    for (int r = 1; r <= 3; ++r) {
      run_case("T(" + std::to_string(r) + "," + std::to_string(d) + ")",
               make_tree_ball(r, d), tree_ball_spectrum(r, d), tol, cases, failures);
    }
  }
  result.violations = failures;
  result.report = {{"theorem", "selftest"},
                   {"cases", static_cast<int>(cases.size())},
                   {"failures", failures},
                   {"verdict", failures == 0 ? "pass" : "fail"},
                   {"results", cases}};
  return result;
}

}  // namespace steklov
