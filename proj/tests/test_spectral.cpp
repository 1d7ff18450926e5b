#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <vector>

#include "steklov/families.hpp"
#include "steklov/graph.hpp"
#include "steklov/spectral.hpp"
#include "steklov/theorems.hpp"

using namespace steklov;

namespace {

// Independent check: eigenvalues of the full pencil K phi = sigma M_B phi,
// solved by the QZ decomposition with no Schur complement and no Cholesky.
// Infinite eigenvalues (beta ~ 0) correspond to interior coordinates.
std::vector<double> pencil_oracle(const Graph& g, const std::vector<int>& zero_set = {}) {
  std::vector<char> dropped(g.vertex_count(), 0);
  for (int z : zero_set) dropped[z] = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  Eigen::MatrixXd k_full = stiffness_matrix(g);
  int n = static_cast<int>(keep.size());
  Eigen::MatrixXd k(n, n);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) k(i, j) = k_full(keep[i], keep[j]);
    if (g.is_boundary(keep[i])) m(i, i) = g.measure(keep[i]);
  }
  Eigen::GeneralizedEigenSolver<Eigen::MatrixXd> ges(k, m, false);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) {
    double alpha = ges.alphas()[i].real();
    double alpha_im = ges.alphas()[i].imag();
    double beta = ges.betas()[i];
    if (std::abs(beta) < 1e-10 * std::max(1.0, std::abs(alpha))) continue;  // infinite
    REQUIRE(std::abs(alpha_im) < 1e-9 * std::max(1.0, std::abs(alpha)));
    out.push_back(alpha / beta);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("calculus identities on random graphs") {
  FuzzRng rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    int n = rng.uniform_int(2, 30);
    Graph g = random_connected_graph(n, trial % 2 == 1, rng);
    VertexFunction f(g.vertex_count()), h(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
      f[v] = rng.uniform_real(-1.0, 1.0);
      h[v] = rng.uniform_real(-1.0, 1.0);
    }
    double scale = 1.0 + std::abs(dirichlet_energy(g, f)) + std::abs(dirichlet_energy(g, h));

    // <df,dh>_G = -<Laplacian f, h>_interior + <normal derivative f, h>_boundary
    double lhs = edge_inner(g, exterior_differential(g, f), exterior_differential(g, h));
    double rhs = -vertex_inner(g, laplacian_apply(g, f), h, g.interior_indices());
    for (int b : g.boundary_indices()) {
      rhs += normal_derivative(g, f, b) * h[b] * g.measure(b);
    }
    CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);

    // The energy form is symmetric and matches the stiffness matrix.
    Eigen::MatrixXd k = stiffness_matrix(g);
    CHECK(std::abs(lhs - f.dot(k * h)) <= 1e-10 * scale);
    CHECK((k - k.transpose()).cwiseAbs().maxCoeff() <= 1e-14 * k.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("harmonic extensions are harmonic and the DtN map is symmetric") {
  FuzzRng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_connected_graph(rng.uniform_int(3, 25), trial % 2 == 0, rng);
    auto dtn = dtn_operator(g);
    int nb = static_cast<int>(dtn.boundary.size());
    REQUIRE(nb >= 1);
    Eigen::VectorXd u(nb);
    for (int i = 0; i < nb; ++i) u[i] = rng.uniform_real(-1.0, 1.0);
    VertexFunction f = harmonic_extension(g, u);
    auto lap = laplacian_apply(g, f);
    for (int v : g.interior_indices()) CHECK(std::abs(lap[v]) <= 1e-9);
    for (int i = 0; i < nb; ++i) CHECK(f[dtn.boundary[i]] == doctest::Approx(u[i]));

    // Schur complement symmetry, and agreement with normal derivatives.
    CHECK((dtn.schur - dtn.schur.transpose()).cwiseAbs().maxCoeff() <=
          1e-10 * std::max(1.0, dtn.schur.cwiseAbs().maxCoeff()));
    Eigen::VectorXd flux = dtn.schur * u;
    for (int i = 0; i < nb; ++i) {
      CHECK(std::abs(flux[i] - normal_derivative(g, f, dtn.boundary[i]) *
                                   g.measure(dtn.boundary[i])) <= 1e-9);
    }
  }
}

TEST_CASE("Schur-complement spectra match the QZ pencil oracle") {
  FuzzRng rng(31337);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_connected_graph(rng.uniform_int(3, 12), trial % 3 == 0, rng);
    auto spec = steklov_spectrum(g);
    auto oracle = pencil_oracle(g);
    REQUIRE(static_cast<int>(oracle.size()) == spec.eigenvalues.size());
    for (int i = 0; i < spec.eigenvalues.size(); ++i) {
      CHECK(std::abs(spec.eigenvalues[i] - oracle[i]) <=
            1e-9 * std::max(1.0, std::abs(oracle[i])));
    }

    // Same with a vanishing-Dirichlet pin at a random interior vertex.
    auto interior = g.interior_indices();
    if (!interior.empty()) {
      int z = interior[rng.uniform_int(0, static_cast<int>(interior.size()) - 1)];
      auto pinned = dirichlet_steklov_spectrum(g, {z});
      auto pinned_oracle = pencil_oracle(g, {z});
      REQUIRE(static_cast<int>(pinned_oracle.size()) == pinned.eigenvalues.size());
      for (int i = 0; i < pinned.eigenvalues.size(); ++i) {
        CHECK(std::abs(pinned.eigenvalues[i] - pinned_oracle[i]) <=
              1e-9 * std::max(1.0, std::abs(pinned_oracle[i])));
      }
    }
  }
}

TEST_CASE("spectrum basics: constants, padding, Rayleigh quotients") {
  Graph g = make_regular_star(3, 2);
  auto spec = steklov_spectrum(g);
  CHECK(spec.sigma(1) == doctest::Approx(0.0));
  CHECK(spec.sigma(2) == doctest::Approx(0.5));
  CHECK(spec.sigma(3) == doctest::Approx(0.5));
  CHECK(spec.sigma(4) == kInfinity);
  auto groups = spec.multiplicity_groups(1e-7);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0] == std::pair<int, int>{1, 1});
  CHECK(groups[1] == std::pair<int, int>{2, 3});

  // sigma_1 eigenfunction is constant; Rayleigh quotient reproduces sigma_2.
  VertexFunction first = spec.eigenfunctions.col(0);
  CHECK((first.array() - first[0]).abs().maxCoeff() <= 1e-9 * std::abs(first[0]));
  VertexFunction second = spec.eigenfunctions.col(1);
  CHECK(rayleigh_quotient(g, second) == doctest::Approx(0.5));

  // M_B-orthonormal boundary vectors.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(3, 3);
  auto bidx = spec.boundary;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int b = 0; b < 3; ++b) {
        gram(i, j) +=
            spec.boundary_vectors(b, i) * spec.boundary_vectors(b, j) * g.measure(bidx[b]);
      }
    }
  }
  CHECK((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("degenerate boundaries follow the +infinity conventions") {
  Graph trivial = build_graph({{"v", 1.0, true}}, {});
  auto spec = steklov_spectrum(trivial);
  CHECK(spec.sigma(1) == 0.0);
  CHECK(spec.sigma(2) == kInfinity);

  Graph one_b = with_boundary(make_path(3), {"v0"});
  auto s1 = steklov_spectrum(one_b);
  REQUIRE(s1.eigenvalues.size() == 1);
  CHECK(s1.sigma(1) == doctest::Approx(0.0));
  CHECK(s1.sigma(2) == kInfinity);

  Graph no_b = with_boundary(make_path(3), {});
  CHECK(lambda1(no_b, {no_b.index_of("v1")}) == kInfinity);
}

TEST_CASE("lambda1 of a pendant path is 1/length") {
  for (int l = 1; l <= 8; ++l) {
    Graph p = with_boundary(make_path(l), {"v0"});
    double v = lambda1(p, {p.index_of("v" + std::to_string(l))});
    CHECK(v == doctest::Approx(1.0 / l).epsilon(1e-10));
  }
}

TEST_CASE("disjoint unions merge spectra") {
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  auto add = [&](const Graph& g, const std::string& prefix) {
    for (const auto& v : g.vertex_specs()) {
      vs.push_back({prefix + v.id, v.measure, v.boundary});
    }
    for (const auto& e : g.edge_specs()) {
      es.push_back({prefix + e.u, prefix + e.v, e.weight});
    }
  };
  Graph g1 = make_regular_star(3, 2);
  Graph g2 = make_path(4);
  add(g1, "s:");
  add(g2, "p:");
  Graph both = build_graph(vs, es);

  std::vector<double> merged;
  for (auto s : {steklov_spectrum(g1), steklov_spectrum(g2)}) {
    for (int i = 0; i < s.eigenvalues.size(); ++i) merged.push_back(s.eigenvalues[i]);
  }
  std::sort(merged.begin(), merged.end());
  auto spec = steklov_spectrum(both);
  REQUIRE(spec.eigenvalues.size() == static_cast<int>(merged.size()));
  for (size_t i = 0; i < merged.size(); ++i) {
    CHECK(spec.eigenvalues[static_cast<int>(i)] == doctest::Approx(merged[i]).epsilon(1e-9));
  }
}

TEST_CASE("an interior component that cannot reach the boundary is rejected") {
  Graph g = build_graph({{"b", 1.0, true}, {"x"}, {"y"}, {"z"}},
                        {{"b", "x"}, {"y", "z"}});
  CHECK_THROWS_AS(steklov_spectrum(g), error);
  try {
    steklov_spectrum(g);
  } catch (const error& e) {
    CHECK(e.code() == errc::singular_interior);
  }
}

TEST_CASE("zero sets of stars and tree balls") {
  Graph star = make_regular_star(4, 3);
  auto z = zero_set_Z(star);
  REQUIRE(z.size() == 1);
  CHECK(star.id(z[0]) == "o");
  auto z1 = zero_set_Z1(star);
  REQUIRE(z1.size() == 1);
  CHECK(star.id(z1[0]) == "o");

  Graph ball = make_tree_ball(2, 3);
  auto z1b = zero_set_Z1(ball);
  REQUIRE(z1b.size() == 1);
  CHECK(ball.id(z1b[0]) == "o");

  // Unequal arms with l_r != r*d + l_1 have empty Z.
  Graph star2 = make_star(make_star_spec({2, 2, 3}));
  CHECK(zero_set_Z(star2).empty());
}

TEST_CASE("laplacian spectrum of a path matches the closed form") {
  int r = 5;
  Graph p = with_boundary(make_path(r), {});
  auto mu = laplacian_spectrum(p);
  auto expected = path_laplacian_eigenvalues(r);
  REQUIRE(mu.size() == expected.size());
  for (int i = 0; i < mu.size(); ++i) {
    CHECK(mu[i] == doctest::Approx(expected[i]).epsilon(1e-9));
  }
}
