#pragma once

#include <string>
#include <vector>

#include "steklov/graph.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

struct StarSpec {
  std::vector<int> arm_lengths;  // sorted ascending, all >= 1, r >= 2
  int r() const { return static_cast<int>(arm_lengths.size()); }
};

StarSpec make_star_spec(std::vector<int> arm_lengths);

/// Closed-form eigenvalue list with multiplicities, ascending.
struct ClosedFormSpectrum {
  std::string family;
  std::vector<std::pair<double, int>> eigenvalues;  // (value, multiplicity)

  Eigen::VectorXd flatten() const;
  int total_multiplicity() const;
};

// Canonical constructions: unit weight, combinatorial boundary.
// Vertex naming is part of the contract so zero sets compare across runs:
//   path:      v0..vl
//   star:      center "o", arm j vertex k "a{j}.{k}"   (1-based)
//   comb:      base "b{k}" k=0..r, tooth "t{k}.{j}" j=1..l
//   tree ball: root "o", child a of vertex n is "n.{a}"
Graph make_path(int l);
Graph make_star(const StarSpec& spec);
Graph make_regular_star(int r, int l);
Graph make_regular_comb(int r, int l);
Graph make_tree_ball(int r, int d);

/// Coefficients of P(t), ascending degree; both printed forms of the
/// polynomial are computed and cross-checked.
std::vector<double> star_char_polynomial(const StarSpec& spec);

ClosedFormSpectrum star_spectrum(const StarSpec& spec);

struct StarZResult {
  std::vector<std::string> z;  // vertex ids, empty when the criterion fails
  int d = -1;                  // the offset in l_r = r*d + l1, when it holds
};
StarZResult star_Z(const StarSpec& spec);

ClosedFormSpectrum regular_star_spectrum(int r, int l);
std::vector<VertexFunction> regular_star_eigenfunctions(const Graph& star, int r, int l);

ClosedFormSpectrum regular_comb_spectrum(int r, int l);
std::vector<VertexFunction> comb_eigenfunctions(const Graph& comb, int r, int l);
/// mu_i = 2 - 2cos((i-1)pi/(r+1)) for a unit-weight path of length r.
Eigen::VectorXd path_laplacian_eigenvalues(int r);

ClosedFormSpectrum tree_ball_spectrum(int r, int d);
std::vector<VertexFunction> tree_ball_eigenfunctions(const Graph& ball, int r, int d);

}  // namespace steklov
