#pragma once

#include <limits>
#include <vector>

#include "steklov/graph.hpp"

namespace steklov {

/// Named tolerance constants; every numeric decision threads through one of
/// these so the CLI can override them globally.
struct Tolerances {
  double eig_group_rel = 1e-7;   // relative gap for grouping equal eigenvalues
  double zero_abs = 1e-8;        // |f(x)| threshold for Z / Z1 membership
  double compare_abs = 1e-8;     // spectral comparisons in theorem verifiers
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// -- Calculus on a weighted graph ------------------------------------------

Eigen::MatrixXd stiffness_matrix(const Graph& g);  // L_w, measure-free
VertexFunction laplacian_apply(const Graph& g, const VertexFunction& f);
EdgeFunction exterior_differential(const Graph& g, const VertexFunction& f);

double vertex_inner(const Graph& g, const VertexFunction& f, const VertexFunction& h);
double vertex_inner(const Graph& g, const VertexFunction& f, const VertexFunction& h,
                    const std::vector<int>& subset);
double boundary_inner(const Graph& g, const VertexFunction& f, const VertexFunction& h);
double edge_inner(const Graph& g, const EdgeFunction& a, const EdgeFunction& b);
double subset_measure(const Graph& g, const std::vector<int>& subset);
/// <df,df>_G.
double dirichlet_energy(const Graph& g, const VertexFunction& f);

double normal_derivative(const Graph& g, const VertexFunction& f, int x);

// -- Harmonic extension and DtN maps ---------------------------------------

/// Solve f|_B = u, f|_Z = 0, harmonic on the rest. `u` is indexed in
/// boundary order (g.boundary_indices()).
VertexFunction harmonic_extension(const Graph& g, const Eigen::VectorXd& u,
                                  const std::vector<int>& zero_set = {});

/// Materialized DtN map: Schur complement of the stiffness matrix onto the
/// boundary, rows/columns of Z dropped, plus the harmonic-extension matrix.
struct DtnOperator {
  std::vector<int> boundary;   // vertex indices, in vertex order
  std::vector<int> zero_set;
  Eigen::MatrixXd schur;       // |B| x |B|, symmetric
  Eigen::VectorXd boundary_mass;
  Eigen::MatrixXd extension;   // n x |B|; column b extends the b-th unit boundary vector
};

DtnOperator dtn_operator(const Graph& g, const std::vector<int>& zero_set = {});

/// Sorted eigenvalues of a DtN operator with harmonic eigenbasis.
/// sigma(i) is 1-based and answers +infinity for i > |B|.
struct SteklovSpectrum {
  std::vector<int> boundary;
  std::vector<int> zero_set;
  Eigen::VectorXd eigenvalues;        // ascending, |B| entries
  Eigen::MatrixXd boundary_vectors;   // |B| x |B|, M_B-orthonormal columns
  Eigen::MatrixXd eigenfunctions;     // n x |B| harmonic extensions

  double sigma(int i) const {
    if (i < 1) throw error(errc::bad_parameter, "eigenvalue index must be >= 1");
    if (i > eigenvalues.size()) return kInfinity;
    return eigenvalues[i - 1];
  }
  /// 1-based index ranges [first,last] of eigenvalues equal under rel_tol.
  std::vector<std::pair<int, int>> multiplicity_groups(double rel_tol) const;
};

SteklovSpectrum steklov_spectrum(const Graph& g);
SteklovSpectrum dirichlet_steklov_spectrum(const Graph& g, const std::vector<int>& zero_set);
/// lambda_1(G, B, Z); +infinity when B is empty.
double lambda1(const Graph& g, const std::vector<int>& zero_set);

/// Ascending eigenvalues of -Laplacian: L_w phi = mu M phi.
Eigen::VectorXd laplacian_spectrum(const Graph& g);

double rayleigh_quotient(const Graph& g, const VertexFunction& f);

// -- Zero sets --------------------------------------------------------------

/// Interior vertices where every mean-zero-boundary harmonic function
/// vanishes. Computed against two random bases; disagreement raises
/// ToleranceAmbiguity.
std::vector<int> zero_set_Z(const Graph& g, const Tolerances& tol = {});

/// Vertices where every sigma_2-eigenfunction vanishes.
std::vector<int> zero_set_Z1(const Graph& g, const Tolerances& tol = {});

}  // namespace steklov
