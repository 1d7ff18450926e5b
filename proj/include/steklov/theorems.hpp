#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "steklov/families.hpp"
#include "steklov/graph.hpp"
#include "steklov/json_io.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

/// Structured outcome of a theorem verifier. Conclusion residuals are only
/// recorded when every hypothesis check passed; a positive residual means
/// the inequality it names holds with that much slack.
struct VerdictReport {
  std::string theorem;
  std::vector<std::pair<std::string, bool>> hypotheses;
  std::vector<std::pair<std::string, double>> residuals;
  std::string verdict;  // "pass" | "fail" | "hypothesis-not-met"
  json witness = nullptr;

  bool hypotheses_ok() const;
  void finish(double tol);  // sets verdict from hypotheses + residuals
  json to_json() const;
};

VerdictReport verify_monotonicity(const Graph& ambient, const Graph& base,
                                  const Tolerances& tol = {});
VerdictReport verify_monotonicity_homotopy(const Graph& ambient, const Graph& base,
                                           const Tolerances& tol = {});
VerdictReport verify_rigidity_full(const Graph& ambient, const Graph& base,
                                   const Tolerances& tol = {});
VerdictReport verify_rigidity_geometric(const Graph& ambient, const Graph& base,
                                        const Tolerances& tol = {});
VerdictReport verify_rigidity_sigma2(const Graph& ambient, const Graph& base,
                                     const Tolerances& tol = {});
/// Builds G = r-fold self-wedge of gamma at z and the ambient graph
/// G wedge tooth at z, then checks the sigma_2 equality biconditional
/// against the lambda_1 bound of the tooth.
VerdictReport verify_symmetric_rigidity(const Graph& gamma, const std::string& z, int r,
                                        const Graph& tooth, const std::string& tooth_z,
                                        const Tolerances& tol = {});
VerdictReport verify_wedge_identity(const Graph& g, const std::string& z,
                                    const Tolerances& tol = {});

/// kind: "regular-star" | "star" | "comb" | "tree-ball-super" |
/// "tree-ball-sub" | "isodiametric". The certificate maps family vertex ids
/// to graph ids (or graph ids to tree-ball ids for "tree-ball-sub").
struct EstimateParams {
  int r = 0;
  int l = 0;
  int d = 0;
  std::vector<int> arm_lengths;
};
VerdictReport verify_estimates(const std::string& kind, const EstimateParams& params,
                               const Graph& g,
                               const std::unordered_map<std::string, std::string>& certificate,
                               const Tolerances& tol = {});

struct FuzzConfig {
  int trials = 200;
  int max_vertices = 40;
  std::uint64_t seed = 7;
  bool weighted = false;
  bool plant_bug = false;  // self-test: reverse the monotonicity comparison
  Tolerances tol;
};

struct FuzzResult {
  json report;
  int violations = 0;
};

FuzzResult fuzz(const FuzzConfig& config);

/// Deterministic RNG used by the fuzz harness; hand-rolled draws so reports
/// are byte-identical across standard library implementations.
class FuzzRng {
public:
  explicit FuzzRng(std::uint64_t seed) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}
  std::uint64_t next();
  int uniform_int(int lo, int hi);  // inclusive
  double uniform_real(double lo, double hi);

private:
  std::uint64_t state_;
};

/// Uniform random labeled tree on n vertices (Pruefer decode), unit weight,
/// combinatorial boundary. Ids v0..v{n-1}.
Graph random_labeled_tree(int n, FuzzRng& rng);
/// Random connected subtree with >= 2 vertices, combinatorial boundary.
Graph random_subtree(const Graph& tree, FuzzRng& rng);
/// Random connected graph (tree plus a few extra edges); optionally random
/// measures/weights in [0.5, 2]; at least one boundary and one interior
/// vertex.
Graph random_connected_graph(int n, bool weighted, FuzzRng& rng);

/// Oracle-equivalence grid of the closed-form families against the dense
/// eigensolver. Returns a report and the number of mismatches.
FuzzResult selftest(const Tolerances& tol = {});

}  // namespace steklov
