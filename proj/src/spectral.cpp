#include "steklov/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>

#include <Eigen/Eigenvalues>

namespace steklov {

Eigen::MatrixXd stiffness_matrix(const Graph& g) {
  int n = g.vertex_count();
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    k(e.u, e.u) += e.weight;
    k(e.v, e.v) += e.weight;
    k(e.u, e.v) -= e.weight;
    k(e.v, e.u) -= e.weight;
  }
  return k;
}

VertexFunction laplacian_apply(const Graph& g, const VertexFunction& f) {
  VertexFunction out(g.vertex_count());
  for (int x = 0; x < g.vertex_count(); ++x) {
    double acc = 0.0;
    for (auto [y, e] : g.adjacency(x)) acc += (f[y] - f[x]) * g.edges()[e].weight;
    out[x] = acc / g.measure(x);
  }
  return out;
}

EdgeFunction exterior_differential(const Graph& g, const VertexFunction& f) {
  EdgeFunction out(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& edge = g.edges()[e];
    out[e] = f[edge.v] - f[edge.u];
  }
  return out;
}

double vertex_inner(const Graph& g, const VertexFunction& f, const VertexFunction& h) {
  double acc = 0.0;
  for (int x = 0; x < g.vertex_count(); ++x) acc += f[x] * h[x] * g.measure(x);
  return acc;
}

double vertex_inner(const Graph& g, const VertexFunction& f, const VertexFunction& h,
                    const std::vector<int>& subset) {
  double acc = 0.0;
  for (int x : subset) acc += f[x] * h[x] * g.measure(x);
  return acc;
}

double boundary_inner(const Graph& g, const VertexFunction& f, const VertexFunction& h) {
  return vertex_inner(g, f, h, g.boundary_indices());
}

double edge_inner(const Graph& g, const EdgeFunction& a, const EdgeFunction& b) {
  double acc = 0.0;
  for (int e = 0; e < g.edge_count(); ++e) acc += a[e] * b[e] * g.edges()[e].weight;
  return acc;
}

double subset_measure(const Graph& g, const std::vector<int>& subset) {
  double acc = 0.0;
  for (int x : subset) acc += g.measure(x);
  return acc;
}

double dirichlet_energy(const Graph& g, const VertexFunction& f) {
  double acc = 0.0;
  for (const auto& e : g.edges()) {
    double d = f[e.v] - f[e.u];
    acc += d * d * e.weight;
  }
  return acc;
}

double normal_derivative(const Graph& g, const VertexFunction& f, int x) {
  if (!g.is_boundary(x)) {
    throw error(errc::not_boundary_vertex,
                "normal derivative requested at interior vertex '" + g.id(x) + "'");
  }
  double acc = 0.0;
  for (auto [y, e] : g.adjacency(x)) acc += (f[x] - f[y]) * g.edges()[e].weight;
  return acc / g.measure(x);
}

namespace {

// The interior stiffness block is nonsingular iff every component of the
// subgraph induced on Omega \ Z has an edge to B u Z.
void check_interior_nonsingular(const Graph& g, const std::vector<char>& pinned) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (pinned[s] || seen[s]) continue;
    std::deque<int> queue{s};
    seen[s] = 1;
    std::vector<int> comp{s};
    bool reaches = false;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [nbr, e] : g.adjacency(v)) {
        if (pinned[nbr]) {
          reaches = true;
        } else if (!seen[nbr]) {
          seen[nbr] = 1;
          comp.push_back(nbr);
          queue.push_back(nbr);
        }
      }
    }
    if (!reaches) {
      std::string msg = "interior component sees no boundary or zero-set vertex:";
      for (int v : comp) msg += " '" + g.id(v) + "'";
      throw error(errc::singular_interior, msg);
    }
  }
}

std::vector<char> pinned_mask(const Graph& g, const std::vector<int>& zero_set) {
  std::vector<char> pinned(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_boundary(v)) pinned[v] = 1;
  for (int v : zero_set) {
    if (g.is_boundary(v)) {
      throw error(errc::bad_parameter,
                  "zero-set vertex '" + g.id(v) + "' lies on the boundary");
    }
    pinned[v] = 1;
  }
  return pinned;
}

}  // namespace

DtnOperator dtn_operator(const Graph& g, const std::vector<int>& zero_set) {
  auto pinned = pinned_mask(g, zero_set);
  check_interior_nonsingular(g, pinned);

  DtnOperator op;
  op.boundary = g.boundary_indices();
  op.zero_set = zero_set;
  std::vector<char> in_z(g.vertex_count(), 0);
  for (int v : zero_set) in_z[v] = 1;
  std::vector<int> free_interior;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!pinned[v]) free_interior.push_back(v);

  int nb = static_cast<int>(op.boundary.size());
  int ni = static_cast<int>(free_interior.size());
  Eigen::MatrixXd k = stiffness_matrix(g);
  Eigen::MatrixXd kbb(nb, nb), kib(ni, nb), kii(ni, ni);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) kbb(i, j) = k(op.boundary[i], op.boundary[j]);
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < nb; ++j) kib(i, j) = k(free_interior[i], op.boundary[j]);
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < ni; ++j) kii(i, j) = k(free_interior[i], free_interior[j]);

  Eigen::MatrixXd x;  // interior values of the unit-boundary extensions
  if (ni > 0) {
    Eigen::LLT<Eigen::MatrixXd> llt(kii);
    if (llt.info() != Eigen::Success) {
      throw error(errc::singular_interior, "interior stiffness block factorization failed");
    }
    x = -llt.solve(kib);
  } else {
    x = Eigen::MatrixXd::Zero(0, nb);
  }
  op.schur = kbb + kib.transpose() * x;
  op.schur = 0.5 * (op.schur + op.schur.transpose().eval());

  op.boundary_mass = Eigen::VectorXd(nb);
  for (int i = 0; i < nb; ++i) op.boundary_mass[i] = g.measure(op.boundary[i]);

  op.extension = Eigen::MatrixXd::Zero(g.vertex_count(), nb);
  for (int i = 0; i < nb; ++i) op.extension(op.boundary[i], i) = 1.0;
  for (int i = 0; i < ni; ++i) op.extension.row(free_interior[i]) = x.row(i);
  return op;
}

VertexFunction harmonic_extension(const Graph& g, const Eigen::VectorXd& u,
                                  const std::vector<int>& zero_set) {
  auto op = dtn_operator(g, zero_set);
  if (u.size() != static_cast<Eigen::Index>(op.boundary.size())) {
    throw error(errc::bad_parameter, "boundary data size does not match |B|");
  }
  return op.extension * u;
}

namespace {

SteklovSpectrum spectrum_of(const Graph& g, const std::vector<int>& zero_set) {
  auto op = dtn_operator(g, zero_set);
  int nb = static_cast<int>(op.boundary.size());
  SteklovSpectrum spec;
  spec.boundary = op.boundary;
  spec.zero_set = zero_set;
  if (nb == 0) {
    spec.eigenvalues = Eigen::VectorXd(0);
    spec.boundary_vectors = Eigen::MatrixXd(0, 0);
    spec.eigenfunctions = Eigen::MatrixXd(g.vertex_count(), 0);
    return spec;
  }
  Eigen::VectorXd inv_sqrt_m = op.boundary_mass.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd a = inv_sqrt_m.asDiagonal() * op.schur * inv_sqrt_m.asDiagonal();
  a = 0.5 * (a + a.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) {
    throw error(errc::root_finding_failure, "symmetric eigendecomposition failed");
  }
  spec.eigenvalues = es.eigenvalues();
  spec.boundary_vectors = inv_sqrt_m.asDiagonal() * es.eigenvectors();
  // Deterministic sign: first nonzero boundary coordinate positive.
  for (int j = 0; j < nb; ++j) {
    auto col = spec.boundary_vectors.col(j);
    double scale = col.cwiseAbs().maxCoeff();
    for (int i = 0; i < nb; ++i) {
      if (std::abs(col[i]) > 1e-12 * scale) {
        if (col[i] < 0) spec.boundary_vectors.col(j) = -col;
        break;
      }
    }
  }
  spec.eigenfunctions = op.extension * spec.boundary_vectors;
  return spec;
}

}  // namespace

SteklovSpectrum steklov_spectrum(const Graph& g) { return spectrum_of(g, {}); }

SteklovSpectrum dirichlet_steklov_spectrum(const Graph& g, const std::vector<int>& zero_set) {
  return spectrum_of(g, zero_set);
}

double lambda1(const Graph& g, const std::vector<int>& zero_set) {
  if (g.boundary_size() == 0) return kInfinity;
  auto spec = dirichlet_steklov_spectrum(g, zero_set);
  return spec.eigenvalues[0];
}

Eigen::VectorXd laplacian_spectrum(const Graph& g) {
  Eigen::MatrixXd k = stiffness_matrix(g);
  Eigen::VectorXd m(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) m[v] = g.measure(v);
  Eigen::VectorXd inv_sqrt_m = m.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd a = inv_sqrt_m.asDiagonal() * k * inv_sqrt_m.asDiagonal();
  a = 0.5 * (a + a.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  return es.eigenvalues();
}

double rayleigh_quotient(const Graph& g, const VertexFunction& f) {
  double denom = boundary_inner(g, f, f);
  if (denom == 0.0) return kInfinity;
  return dirichlet_energy(g, f) / denom;
}

std::vector<std::pair<int, int>> SteklovSpectrum::multiplicity_groups(double rel_tol) const {
  std::vector<std::pair<int, int>> groups;
  int n = static_cast<int>(eigenvalues.size());
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    bool split = i == n || std::abs(eigenvalues[i] - eigenvalues[start]) >
                               rel_tol * std::max(1.0, std::abs(eigenvalues[start]));
    if (split) {
      groups.emplace_back(start + 1, i);
      start = i;
    }
  }
  return groups;
}

namespace {

// Columns of the returned matrix extend an orthonormal basis of
// {u in R^B : <u,1>_B = 0} harmonically; each column is normalized to unit
// boundary norm.
Eigen::MatrixXd mean_zero_harmonic_basis(const Graph& g, const DtnOperator& op,
                                         unsigned long seed) {
  int nb = static_cast<int>(op.boundary.size());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd raw(nb, nb - 1);
  for (int j = 0; j < nb - 1; ++j)
    for (int i = 0; i < nb; ++i) raw(i, j) = gauss(rng);
  // Project out the constant direction in the boundary inner product, then
  // Gram-Schmidt in the same inner product.
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(nb);
  auto binner = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a.array() * b.array() * op.boundary_mass.array()).sum();
  };
  double ones_norm2 = binner(ones, ones);
  std::vector<Eigen::VectorXd> basis;
  for (int j = 0; j < nb - 1; ++j) {
    Eigen::VectorXd v = raw.col(j);
    v -= (binner(v, ones) / ones_norm2) * ones;
    for (const auto& b : basis) v -= binner(v, b) * b;
    double norm = std::sqrt(binner(v, v));
    if (norm < 1e-10) {
      throw error(errc::tolerance_ambiguity, "degenerate random basis for Z detection");
    }
    basis.push_back(v / norm);
  }
  Eigen::MatrixXd out(g.vertex_count(), nb - 1);
  for (int j = 0; j < nb - 1; ++j) out.col(j) = op.extension * basis[j];
  return out;
}

std::vector<int> interior_zeros(const Graph& g, const Eigen::MatrixXd& funcs, double tol_abs) {
  std::vector<int> out;
  for (int v : g.interior_indices()) {
    if (funcs.row(v).cwiseAbs().maxCoeff() <= tol_abs) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<int> zero_set_Z(const Graph& g, const Tolerances& tol) {
  if (!g.is_connected()) throw error(errc::disconnected_graph, "Z requires a connected graph");
  if (g.boundary_size() < 2) throw error(errc::bad_parameter, "Z requires |B| >= 2");
  auto op = dtn_operator(g, {});
  auto z1 = interior_zeros(g, mean_zero_harmonic_basis(g, op, 0x5bd1e995u), tol.zero_abs);
  auto z2 = interior_zeros(g, mean_zero_harmonic_basis(g, op, 0x9e3779b9u), tol.zero_abs);
  if (z1 != z2) {
    throw error(errc::tolerance_ambiguity,
                "Z detection disagrees between two random bases; adjust the zero tolerance");
  }
  return z1;
}

std::vector<int> zero_set_Z1(const Graph& g, const Tolerances& tol) {
  if (!g.is_connected()) throw error(errc::disconnected_graph, "Z1 requires a connected graph");
  if (g.boundary_size() < 2) throw error(errc::bad_parameter, "Z1 requires |B| >= 2");
  auto spec = steklov_spectrum(g);
  double sigma2 = spec.eigenvalues[1];
  std::vector<int> cols;
  for (int i = 1; i < spec.eigenvalues.size(); ++i) {
    if (std::abs(spec.eigenvalues[i] - sigma2) <=
        tol.eig_group_rel * std::max(1.0, std::abs(sigma2)))
      cols.push_back(i);
  }
  Eigen::MatrixXd funcs(g.vertex_count(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) funcs.col(j) = spec.eigenfunctions.col(cols[j]);
  // Columns already have unit boundary norm (M_B-orthonormal eigenvectors).
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (funcs.row(v).cwiseAbs().maxCoeff() <= tol.zero_abs) out.push_back(v);
  }
  return out;
}

}  // namespace steklov
