#include "steklov/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Eigenvalues>

namespace steklov {

bool VerdictReport::hypotheses_ok() const {
  for (const auto& [name, ok] : hypotheses)
    if (!ok) return false;
  return true;
}

void VerdictReport::finish(double tol) {
  if (!hypotheses_ok()) {
    residuals.clear();
    verdict = "hypothesis-not-met";
    return;
  }
  verdict = "pass";
  for (const auto& [name, slack] : residuals) {
    if (!(slack >= -tol)) {  // catches NaN as well
      verdict = "fail";
      if (witness.is_null()) witness = json::object();
      witness["failed"].push_back({{"name", name}, {"slack", slack}});
    }
  }
}

json VerdictReport::to_json() const {
  json h = json::object();
  for (const auto& [name, ok] : hypotheses) h[name] = ok;
  json r = json::array();
  for (const auto& [name, slack] : residuals) r.push_back({{"name", name}, {"slack", slack}});
  return {{"theorem", theorem},
          {"hypotheses", h},
          {"residuals", r},
          {"verdict", verdict},
          {"witness", witness}};
}

namespace {

struct CombContext {
  bool ok = false;
  std::string reason;
  ToothDecomposition decomp;
  bool measure_ok = false;
  std::vector<std::string> measure_violations;
};

CombContext comb_context(const Graph& ambient, const Graph& base) {
  CombContext ctx;
  try {
    ctx.decomp = comb_decompose(ambient, base);
    ctx.ok = true;
  } catch (const error& e) {
    ctx.reason = e.what();
    return ctx;
  }
  ctx.measure_ok = true;
  for (int x : base.boundary_indices()) {
    if (ctx.decomp.tooth_boundary_measure(x) < base.measure(x)) {
      ctx.measure_ok = false;
      ctx.measure_violations.push_back(base.id(x));
    }
  }
  return ctx;
}

// Tooth at z as a standalone Dirichlet-Steklov problem: boundary
// tooth-boundary minus z, zero set {z}. +infinity when the boundary is empty.
double tooth_lambda1(const ToothDecomposition& decomp, int base_z) {
  const Graph& ambient = *decomp.ambient;
  std::string z_id = decomp.base->id(base_z);
  std::vector<std::string> bnd;
  for (int v : decomp.tooth_boundaries[base_z]) {
    if (ambient.id(v) != z_id) bnd.push_back(ambient.id(v));
  }
  if (bnd.empty()) return kInfinity;
  Graph tooth = induced_subgraph(ambient, decomp.teeth[base_z], bnd);
  return lambda1(tooth, {tooth.index_of(z_id)});
}

// Condition (3) of the full rigidity theorem: on the subspace
// {u : u|_B constant, <u,1>_{B~} = 0} the form <du,du> - sigma <u,u>_{B~}
// is positive semidefinite.
double rigidity_condition3_min_eig(const Graph& ambient, const Graph& base, double sigma) {
  int n = ambient.vertex_count();
  auto base_boundary = base.boundary_indices();
  std::set<int> b_in_ambient;
  for (int x : base_boundary) b_in_ambient.insert(ambient.index_of(base.id(x)));

  // Parametrize u|_B by a single shared coordinate.
  int dim0 = n - static_cast<int>(b_in_ambient.size()) + 1;
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, dim0);
  int col = 1;
  for (int v = 0; v < n; ++v) {
    if (b_in_ambient.count(v)) {
      p(v, 0) = 1.0;
    } else {
      p(v, col++) = 1.0;
    }
  }
  Eigen::MatrixXd k = stiffness_matrix(ambient);
  Eigen::VectorXd mass = Eigen::VectorXd::Zero(n);
  for (int v : ambient.boundary_indices()) mass[v] = ambient.measure(v);

  // One linear constraint <u,1>_{B~} = 0.
  Eigen::VectorXd c = p.transpose() * mass;
  Eigen::MatrixXd basis;
  if (c.norm() == 0.0) {
    basis = Eigen::MatrixXd::Identity(dim0, dim0);
  } else {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(c);
    Eigen::MatrixXd q = qr.householderQ();
    basis = q.rightCols(dim0 - 1);
  }
  Eigen::MatrixXd pn = p * basis;
  Eigen::MatrixXd form =
      pn.transpose() * (k - (sigma * mass).asDiagonal().toDenseMatrix()) * pn;
  form = 0.5 * (form + form.transpose().eval());
  if (form.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(form);
  double scale = std::max(1.0, form.cwiseAbs().maxCoeff());
  return es.eigenvalues()[0] / scale;
}

double spectrum_sigma(const SteklovSpectrum& spec, int i) { return spec.sigma(i); }

}  // namespace

VerdictReport verify_monotonicity(const Graph& ambient, const Graph& base,
                                  const Tolerances& tol) {
  VerdictReport report;
  report.theorem = "monotonicity";
  auto ctx = comb_context(ambient, base);
  report.hypotheses.emplace_back("ambient-connected", ambient.is_connected());
  report.hypotheses.emplace_back("base-connected", base.is_connected());
  report.hypotheses.emplace_back("comb", ctx.ok);
  report.hypotheses.emplace_back("measure", ctx.ok && ctx.measure_ok);
  if (!report.hypotheses_ok()) {
    if (!ctx.ok) report.witness = {{"reason", ctx.reason}};
    else if (!ctx.measure_ok) report.witness = {{"measure_violations", ctx.measure_violations}};
    report.finish(tol.compare_abs);
    return report;
  }
  auto spec_base = steklov_spectrum(base);
  auto spec_ambient = steklov_spectrum(ambient);
  for (int i = 1; i <= base.boundary_size(); ++i) {
    report.residuals.emplace_back("sigma_" + std::to_string(i),
                                  spectrum_sigma(spec_base, i) - spectrum_sigma(spec_ambient, i));
  }
  report.finish(tol.compare_abs);
  return report;
}

VerdictReport verify_monotonicity_homotopy(const Graph& ambient, const Graph& base,
                                           const Tolerances& tol) {
  VerdictReport report;
  report.theorem = "monotonicity-homotopy";
  report.hypotheses.emplace_back("unit-weight", ambient.is_unit_weight() && base.is_unit_weight());
  Graph amb = with_combinatorial_boundary(ambient);
  Graph bse = with_combinatorial_boundary(base);
  bool faithful = false;
  std::string reason;
  try {
    faithful = is_homotopy_faithful(amb, bse);
  } catch (const error& e) {
    reason = e.what();
  }
  report.hypotheses.emplace_back("homotopy-faithful", faithful);
  if (!report.hypotheses_ok()) {
    if (!reason.empty()) report.witness = {{"reason", reason}};
    report.finish(tol.compare_abs);
    return report;
  }
  auto spec_base = steklov_spectrum(bse);
  auto spec_ambient = steklov_spectrum(amb);
  for (int i = 1; i <= bse.boundary_size(); ++i) {
    report.residuals.emplace_back("sigma_" + std::to_string(i),
                                  spectrum_sigma(spec_base, i) - spectrum_sigma(spec_ambient, i));
  }
  report.finish(tol.compare_abs);
  return report;
}

VerdictReport verify_rigidity_full(const Graph& ambient, const Graph& base,
                                   const Tolerances& tol) {
  VerdictReport report;
  report.theorem = "rigidity-full";
  auto ctx = comb_context(ambient, base);
  report.hypotheses.emplace_back("comb", ctx.ok);
  report.hypotheses.emplace_back("measure", ctx.ok && ctx.measure_ok);
  report.hypotheses.emplace_back("boundary-size", base.boundary_size() >= 2);
  if (!report.hypotheses_ok()) {
    report.finish(tol.compare_abs);
    return report;
  }
  auto spec_base = steklov_spectrum(base);
  auto spec_ambient = steklov_spectrum(ambient);
  int nb = base.boundary_size();
  double max_gap = 0.0;
  for (int i = 1; i <= nb; ++i) {
    max_gap = std::max(max_gap,
                       std::abs(spectrum_sigma(spec_base, i) - spectrum_sigma(spec_ambient, i)));
  }
  bool lhs = max_gap <= tol.compare_abs;

  auto z = zero_set_Z(base, tol);
  std::set<int> z_set(z.begin(), z.end());
  bool cond1 = true, cond2 = true;
  json cond_witness = json::object();
  for (int x : base.boundary_indices()) {
    const auto& tb = ctx.decomp.tooth_boundaries[x];
    if (tb.size() != 1 || ambient.id(tb[0]) != base.id(x)) {
      cond1 = false;
      cond_witness["cond1"].push_back(base.id(x));
    }
  }
  for (int y : base.interior_indices()) {
    if (z_set.count(y)) continue;
    if (!ctx.decomp.tooth_boundaries[y].empty()) {
      cond2 = false;
      cond_witness["cond2"].push_back(base.id(y));
    }
  }
  double sigma_top = spectrum_sigma(spec_base, nb);
  double min_eig = rigidity_condition3_min_eig(ambient, base, sigma_top);
  bool cond3 = min_eig >= -tol.compare_abs;
  bool rhs = cond1 && cond2 && cond3;

  report.residuals.emplace_back("biconditional", lhs == rhs ? 1.0 : -1.0);
  if (z.empty()) {
    // Z empty specializes the theorem to: equalities iff the boundaries agree.
    std::set<std::string> b_ids, bt_ids;
    for (int x : base.boundary_indices()) b_ids.insert(base.id(x));
    for (int x : ambient.boundary_indices()) bt_ids.insert(ambient.id(x));
    bool same_boundary = b_ids == bt_ids;
    report.residuals.emplace_back("z-empty-boundary-match", (lhs == same_boundary) ? 1.0 : -1.0);
  }
  report.witness = {{"lhs_max_gap", max_gap},
                    {"lhs", lhs},
                    {"cond1", cond1},
                    {"cond2", cond2},
                    {"cond3", cond3},
                    {"cond3_min_eig", min_eig}};
  if (!cond_witness.empty()) report.witness["violations"] = cond_witness;
  json zj = json::array();
  for (int v : z) zj.push_back(base.id(v));
  report.witness["Z"] = zj;
  report.finish(tol.compare_abs);
  return report;
}

VerdictReport verify_rigidity_geometric(const Graph& ambient, const Graph& base,
                                        const Tolerances& tol) {
  VerdictReport report;
  report.theorem = "rigidity-geometric";
  auto ctx = comb_context(ambient, base);
  report.hypotheses.emplace_back("comb", ctx.ok);
  report.hypotheses.emplace_back("measure", ctx.ok && ctx.measure_ok);
  report.hypotheses.emplace_back("boundary-size", base.boundary_size() >= 2);
  bool equalities = false;
  if (report.hypotheses_ok()) {
    auto spec_base = steklov_spectrum(base);
    auto spec_ambient = steklov_spectrum(ambient);
    equalities = true;
    for (int i = 1; i <= base.boundary_size(); ++i) {
      if (std::abs(spectrum_sigma(spec_base, i) - spectrum_sigma(spec_ambient, i)) >
          tol.compare_abs) {
        equalities = false;
      }
    }
    report.hypotheses.emplace_back("equalities", equalities);
    if (equalities) {
      double sigma_top = spectrum_sigma(spec_base, base.boundary_size());
      for (int z : zero_set_Z(base, tol)) {
        report.residuals.emplace_back("lambda1:" + base.id(z),
                                      tooth_lambda1(ctx.decomp, z) - sigma_top);
      }
    }
  }
  report.finish(tol.compare_abs);
  return report;
}

VerdictReport verify_rigidity_sigma2(const Graph& ambient, const Graph& base,
                                     const Tolerances& tol) {
  VerdictReport report;
  report.theorem = "rigidity-sigma2";
  auto ctx = comb_context(ambient, base);
  report.hypotheses.emplace_back("comb", ctx.ok);
  report.hypotheses.emplace_back("measure", ctx.ok && ctx.measure_ok);
  report.hypotheses.emplace_back("boundary-size", base.boundary_size() >= 2);
  if (!report.hypotheses_ok()) {
    report.finish(tol.compare_abs);
    return report;
  }
  auto z1 = zero_set_Z1(base, tol);
  bool z1_interior = true;
  for (int v : z1)
    if (base.is_boundary(v)) z1_interior = false;
  report.hypotheses.emplace_back("Z1-interior", z1_interior);
  auto spec_base = steklov_spectrum(base);
  auto spec_ambient = steklov_spectrum(ambient);
  double sigma2 = spectrum_sigma(spec_base, 2);
  bool equal = std::abs(sigma2 - spectrum_sigma(spec_ambient, 2)) <= tol.compare_abs;
  report.hypotheses.emplace_back("sigma2-equal", equal);
  if (!report.hypotheses_ok()) {
    report.finish(tol.compare_abs);
    return report;
  }
  std::set<int> z1_set(z1.begin(), z1.end());
  bool cond1 = true, cond2 = true;
  for (int x : base.boundary_indices()) {
    const auto& tb = ctx.decomp.tooth_boundaries[x];
    if (tb.size() != 1 || ambient.id(tb[0]) != base.id(x)) cond1 = false;
  }
  for (int y : base.interior_indices()) {
    if (z1_set.count(y)) continue;
    if (!ctx.decomp.tooth_boundaries[y].empty()) cond2 = false;
  }
  report.residuals.emplace_back("cond1", cond1 ? 1.0 : -1.0);
  report.residuals.emplace_back("cond2", cond2 ? 1.0 : -1.0);
  for (int z : z1) {
    report.residuals.emplace_back("lambda1:" + base.id(z),
                                  tooth_lambda1(ctx.decomp, z) - sigma2);
  }
  report.finish(tol.compare_abs);
  return report;
}

VerdictReport verify_symmetric_rigidity(const Graph& gamma, const std::string& z, int r,
                                        const Graph& tooth, const std::string& tooth_z,
                                        const Tolerances& tol) {
  VerdictReport report;
  report.theorem = "rigidity-symmetric";
  report.hypotheses.emplace_back("r>=2", r >= 2);
  report.hypotheses.emplace_back("unit-weight", gamma.is_unit_weight() && tooth.is_unit_weight());
  auto zi = gamma.find(z);
  auto ti = tooth.find(tooth_z);
  report.hypotheses.emplace_back("z-interior", zi && !gamma.is_boundary(*zi));
  report.hypotheses.emplace_back("tooth-z-interior", ti && !tooth.is_boundary(*ti));
  report.hypotheses.emplace_back("gamma-boundary-nonempty", gamma.boundary_size() >= 1);
  if (!report.hypotheses_ok()) {
    report.finish(tol.compare_abs);
    return report;
  }
  auto g = wedge_power(gamma, z, r, MeasurePolicy::unit);
  auto ambient = wedge_sum(g.graph, g.glued_id, tooth, tooth_z, MeasurePolicy::unit);

  double sigma2_g = steklov_spectrum(g.graph).sigma(2);
  double sigma2_ambient = steklov_spectrum(ambient.graph).sigma(2);
  double lam_tooth = tooth.boundary_size() == 0
                         ? kInfinity
                         : lambda1(tooth, {*ti});
  bool equal = std::abs(sigma2_g - sigma2_ambient) <= tol.compare_abs;
  bool bound = lam_tooth >= sigma2_g - tol.compare_abs;
  report.residuals.emplace_back("biconditional", equal == bound ? 1.0 : -1.0);

  // Proof chain: lambda_1 of the r-fold wedge equals lambda_1 of one copy.
  double lam_g = lambda1(g.graph, {g.graph.index_of(g.glued_id)});
  double lam_gamma = lambda1(gamma, {*zi});
  report.residuals.emplace_back("lambda1-chain", -std::abs(lam_g - lam_gamma));
  report.witness = {{"sigma2_base", sigma2_g},
                    {"sigma2_ambient", sigma2_ambient},
                    {"lambda1_tooth", lam_tooth}};
  report.finish(tol.compare_abs);
  return report;
}

VerdictReport verify_wedge_identity(const Graph& g, const std::string& z,
                                    const Tolerances& tol) {
  VerdictReport report;
  report.theorem = "wedge-identity";
  report.hypotheses.emplace_back("connected", g.is_connected());
  auto zi = g.find(z);
  report.hypotheses.emplace_back("z-interior", zi && !g.is_boundary(*zi));
  report.hypotheses.emplace_back("boundary-nonempty", g.boundary_size() >= 1);
  if (!report.hypotheses_ok()) {
    report.finish(tol.compare_abs);
    return report;
  }
  auto wedge = wedge_sum(g, z, g, z);
  auto spec = steklov_spectrum(wedge.graph);
  double sigma2 = spec.sigma(2);
  double lam = lambda1(g, {*zi});
  report.residuals.emplace_back("identity", -std::abs(sigma2 - lam));

  int glued = wedge.graph.index_of(wedge.glued_id);
  double max_at_z = 0.0;
  for (int i = 1; i < spec.eigenvalues.size(); ++i) {
    if (std::abs(spec.eigenvalues[i] - sigma2) <=
        tol.eig_group_rel * std::max(1.0, std::abs(sigma2))) {
      max_at_z = std::max(max_at_z, std::abs(spec.eigenfunctions(glued, i)));
    }
  }
  report.residuals.emplace_back("eigenfunctions-vanish-at-z", -max_at_z);
  report.witness = {{"sigma2", sigma2}, {"lambda1", lam}, {"max_f_at_z", max_at_z}};
  report.finish(tol.compare_abs);
  return report;
}

namespace {

// Elementary symmetric polynomials p_0..p_n of the given values.
std::vector<double> esp(const std::vector<double>& values) {
  std::vector<double> p(values.size() + 1, 0.0);
  p[0] = 1.0;
  for (double v : values) {
    for (size_t k = p.size() - 1; k >= 1; --k) p[k] += v * p[k - 1];
  }
  return p;
}

void check_certificate(const Graph& sub, const Graph& super,
                       const std::unordered_map<std::string, std::string>& cert) {
  std::set<std::string> images;
  for (const auto& id : sub.ids()) {
    auto it = cert.find(id);
    if (it == cert.end()) {
      throw error(errc::bad_certificate, "certificate misses vertex '" + id + "'");
    }
    if (!super.find(it->second)) {
      throw error(errc::bad_certificate,
                  "certificate target '" + it->second + "' is not a vertex");
    }
    if (!images.insert(it->second).second) {
      throw error(errc::bad_certificate, "certificate is not injective at '" + it->second + "'");
    }
  }
  for (const auto& e : sub.edges()) {
    int u = super.index_of(cert.at(sub.id(e.u)));
    int v = super.index_of(cert.at(sub.id(e.v)));
    if (!super.has_edge(u, v)) {
      throw error(errc::bad_certificate, "certificate does not map edge {" + sub.id(e.u) +
                                             "," + sub.id(e.v) + "} to an edge");
    }
  }
}

bool has_combinatorial_boundary(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.is_boundary(v) != (g.degree(v) <= 1)) return false;
  }
  return g.is_unit_weight();
}

}  // namespace

VerdictReport verify_estimates(const std::string& kind, const EstimateParams& params,
                               const Graph& g,
                               const std::unordered_map<std::string, std::string>& certificate,
                               const Tolerances& tol) {
  VerdictReport report;
  report.theorem = "estimate-" + kind;
  report.hypotheses.emplace_back("connected", g.is_connected());
  report.hypotheses.emplace_back("combinatorial-boundary", has_combinatorial_boundary(g));
  report.hypotheses.emplace_back("tree", g.is_tree());

  if (kind == "isodiametric") {
    if (!report.hypotheses_ok()) {
      report.finish(tol.compare_abs);
      return report;
    }
    double sigma2 = steklov_spectrum(g).sigma(2);
    report.residuals.emplace_back("sigma2<=2/diam", 2.0 / diameter(g) - sigma2);
    report.finish(tol.compare_abs);
    return report;
  }

  Graph family = [&]() -> Graph {
    if (kind == "regular-star") return make_regular_star(params.r, params.l);
    if (kind == "star") return make_star(make_star_spec(params.arm_lengths));
    if (kind == "comb") return make_regular_comb(params.r, params.l);
    if (kind == "tree-ball-super" || kind == "tree-ball-sub")
      return make_tree_ball(params.r, params.d);
    throw error(errc::bad_parameter, "unknown estimate kind '" + kind + "'");
  }();

  bool cert_ok = true;
  std::string cert_reason;
  try {
    if (kind == "tree-ball-sub") {
      check_certificate(g, family, certificate);  // g embeds into the ball
    } else {
      check_certificate(family, g, certificate);  // family embeds into g
    }
  } catch (const error& e) {
    cert_ok = false;
    cert_reason = e.what();
  }
  report.hypotheses.emplace_back("certificate", cert_ok);
  if (!report.hypotheses_ok()) {
    if (!cert_ok) report.witness = {{"reason", cert_reason}};
    report.finish(tol.compare_abs);
    return report;
  }

  auto spec = steklov_spectrum(g);
  if (kind == "regular-star") {
    for (int i = 2; i <= params.r; ++i) {
      report.residuals.emplace_back("sigma_" + std::to_string(i),
                                    1.0 / params.l - spec.sigma(i));
    }
  } else if (kind == "star") {
    auto ls = params.arm_lengths;
    int r = static_cast<int>(ls.size());
    double arm_sum = 0.0;
    for (int l : ls) arm_sum += l;
    report.residuals.emplace_back("sigma2<=r/sum", static_cast<double>(r) / arm_sum -
                                                       spec.sigma(2));
    std::vector<double> inv_sigma, sigma;
    for (int i = 2; i <= r; ++i) {
      sigma.push_back(spec.sigma(i));
      inv_sigma.push_back(spec.sigma(i) == kInfinity ? 0.0 : 1.0 / spec.sigma(i));
    }
    std::vector<double> larm(ls.begin(), ls.end());
    auto pk_inv = esp(inv_sigma), pk_sigma = esp(sigma), pk_l = esp(larm);
    for (int k = 1; k <= r - 1; ++k) {
      report.residuals.emplace_back(
          "p" + std::to_string(k) + "-lower",
          pk_inv[k] - (static_cast<double>(r - k) / r) * pk_l[k]);
      report.residuals.emplace_back(
          "p" + std::to_string(k) + "-upper",
          (k + 1) * pk_l[r - k - 1] / pk_l[r - 1] - pk_sigma[k]);
    }
  } else if (kind == "comb") {
    auto closed = regular_comb_spectrum(params.r, params.l).flatten();
    for (int i = 1; i <= params.r + 1; ++i) {
      report.residuals.emplace_back("sigma_" + std::to_string(i),
                                    closed[i - 1] - spec.sigma(i));
    }
  } else {  // tree-ball bands
    auto closed = tree_ball_spectrum(params.r, params.d);
    int d = params.d, r = params.r;
    double jmax_total = d * std::pow(d - 1.0, r - 1.0);
    int top = kind == "tree-ball-super" ? static_cast<int>(jmax_total)
                                        : g.boundary_size();
    for (int k = 2; k <= r + 1; ++k) {
      double lo = d * std::pow(d - 1.0, k - 3.0);
      double hi = d * std::pow(d - 1.0, k - 2.0);
      double sigma_k = closed.eigenvalues[k - 1].first;
      for (int j = 2; j <= top; ++j) {
        if (j > lo && j <= hi) {
          double slack = kind == "tree-ball-super" ? sigma_k - spec.sigma(j)
                                                   : spec.sigma(j) - sigma_k;
          report.residuals.emplace_back(
              "sigma_" + std::to_string(j) + ":band" + std::to_string(k), slack);
        }
      }
    }
  }
  report.finish(tol.compare_abs);

  // Equality-rigidity clause: dispatch to the rigidity verifiers when the
  // bound is attained.
  if (report.verdict == "pass" && (kind == "regular-star" || kind == "comb")) {
    bool attained = false;
    for (const auto& [name, slack] : report.residuals) {
      if (std::abs(slack) <= tol.compare_abs) attained = true;
    }
    if (attained) {
      // Base = the embedded family, relabeled through the certificate.
      std::vector<VertexSpec> vs;
      for (int v = 0; v < family.vertex_count(); ++v) {
        vs.push_back({certificate.at(family.id(v)), 1.0, family.is_boundary(v)});
      }
      std::vector<EdgeSpec> es;
      for (const auto& e : family.edges()) {
        es.push_back({certificate.at(family.id(e.u)), certificate.at(family.id(e.v)), 1.0});
      }
      Graph base(vs, es);
      try {
        auto sub = kind == "comb" ? verify_rigidity_full(g, base, tol)
                                  : verify_rigidity_sigma2(g, base, tol);
        if (report.witness.is_null()) report.witness = json::object();
        report.witness["rigidity"] = sub.to_json();
      } catch (const error&) {
        // rigidity dispatch is best-effort; estimates stand on their own
      }
    }
  }
  return report;
}

}  // namespace steklov
