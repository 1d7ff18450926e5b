#include "steklov/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace steklov {

namespace {

std::string arm_vertex(int arm, int k) {
  return "a" + std::to_string(arm) + "." + std::to_string(k);
}

long long ipow(long long base, int exp) {
  long long out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

StarSpec make_star_spec(std::vector<int> arm_lengths) {
  if (arm_lengths.size() < 2) {
    throw error(errc::bad_parameter, "a star needs at least two arms");
  }
  for (int l : arm_lengths) {
    if (l < 1) throw error(errc::bad_parameter, "arm lengths must be >= 1");
  }
  std::sort(arm_lengths.begin(), arm_lengths.end());
  return {std::move(arm_lengths)};
}

Eigen::VectorXd ClosedFormSpectrum::flatten() const {
  Eigen::VectorXd out(total_multiplicity());
  int i = 0;
  for (const auto& [value, mult] : eigenvalues)
    for (int k = 0; k < mult; ++k) out[i++] = value;
  return out;
}

int ClosedFormSpectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& [value, mult] : eigenvalues) total += mult;
  return total;
}

Graph make_path(int l) {
  if (l < 0) throw error(errc::bad_parameter, "path length must be >= 0");
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (int k = 0; k <= l; ++k) {
    vs.push_back({"v" + std::to_string(k), 1.0, l == 0 || k == 0 || k == l});
    if (k > 0) es.push_back({"v" + std::to_string(k - 1), "v" + std::to_string(k), 1.0});
  }
  return Graph(vs, es);
}

Graph make_star(const StarSpec& spec) {
  std::vector<VertexSpec> vs{{"o", 1.0, false}};
  std::vector<EdgeSpec> es;
  for (int j = 1; j <= spec.r(); ++j) {
    int l = spec.arm_lengths[j - 1];
    for (int k = 1; k <= l; ++k) {
      vs.push_back({arm_vertex(j, k), 1.0, k == l});
      es.push_back({k == 1 ? "o" : arm_vertex(j, k - 1), arm_vertex(j, k), 1.0});
    }
  }
  return Graph(vs, es);
}

Graph make_regular_star(int r, int l) {
  if (r < 2 || l < 1) throw error(errc::bad_parameter, "regular star needs r >= 2, l >= 1");
  return make_star(make_star_spec(std::vector<int>(r, l)));
}

Graph make_regular_comb(int r, int l) {
  if (r < 1 || l < 1) throw error(errc::bad_parameter, "regular comb needs r >= 1, l >= 1");
  std::vector<VertexSpec> vs;
  std::vector<EdgeSpec> es;
  for (int k = 0; k <= r; ++k) {
    std::string base = "b" + std::to_string(k);
    vs.push_back({base, 1.0, false});
    if (k > 0) es.push_back({"b" + std::to_string(k - 1), base, 1.0});
  }
  for (int k = 0; k <= r; ++k) {
    for (int j = 1; j <= l; ++j) {
      std::string tooth = "t" + std::to_string(k) + "." + std::to_string(j);
      vs.push_back({tooth, 1.0, j == l});
      es.push_back({j == 1 ? "b" + std::to_string(k)
                           : "t" + std::to_string(k) + "." + std::to_string(j - 1),
                    tooth, 1.0});
    }
  }
  return Graph(vs, es);
}

Graph make_tree_ball(int r, int d) {
  if (r < 1 || d < 3) throw error(errc::bad_parameter, "tree ball needs r >= 1, d >= 3");
  std::vector<VertexSpec> vs{{"o", 1.0, false}};
  std::vector<EdgeSpec> es;
  std::vector<std::string> level{"o"};
  for (int depth = 1; depth <= r; ++depth) {
    std::vector<std::string> next;
    for (const auto& parent : level) {
      int children = parent == "o" ? d : d - 1;
      for (int a = 1; a <= children; ++a) {
        std::string child = parent + "." + std::to_string(a);
        vs.push_back({child, 1.0, depth == r});
        es.push_back({parent, child, 1.0});
        next.push_back(child);
      }
    }
    level = std::move(next);
  }
  return Graph(vs, es);
}

namespace {

// Multiply polynomial p (ascending coefficients) by (t - root).
std::vector<double> mul_linear(const std::vector<double>& p, double root) {
  std::vector<double> out(p.size() + 1, 0.0);
  for (size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= root * p[i];
  }
  return out;
}

double poly_eval(const std::vector<double>& p, double t) {
  double acc = 0.0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
  return acc;
}

// Elementary symmetric polynomials p_0..p_r of the arm lengths.
std::vector<double> elementary_symmetric(const std::vector<int>& ls) {
  std::vector<double> p(ls.size() + 1, 0.0);
  p[0] = 1.0;
  for (int l : ls) {
    for (size_t k = p.size() - 1; k >= 1; --k) p[k] += l * p[k - 1];
  }
  return p;
}

}  // namespace

std::vector<double> star_char_polynomial(const StarSpec& spec) {
  int r = spec.r();
  // Product-sum form.
  std::vector<double> sum_form(r, 0.0);
  for (int skip = 0; skip < r; ++skip) {
    std::vector<double> prod{1.0};
    for (int i = 0; i < r; ++i) {
      if (i != skip) prod = mul_linear(prod, spec.arm_lengths[i]);
    }
    for (int i = 0; i < r; ++i) sum_form[i] += prod[i];
  }
  // Symmetric-polynomial expansion.
  auto p = elementary_symmetric(spec.arm_lengths);
  std::vector<double> sym_form(r, 0.0);
  for (int i = 0; i <= r - 1; ++i) {
    double sign = (r - i - 1) % 2 == 0 ? 1.0 : -1.0;
    sym_form[i] = sign * (i + 1) * p[r - i - 1];
  }
  double scale = 0.0;
  for (double c : sym_form) scale = std::max(scale, std::abs(c));
  for (int i = 0; i < r; ++i) {
    if (std::abs(sum_form[i] - sym_form[i]) > 1e-9 * std::max(1.0, scale)) {
      throw error(errc::root_finding_failure,
                  "the two printed forms of the star polynomial disagree");
    }
  }
  return sym_form;
}

ClosedFormSpectrum star_spectrum(const StarSpec& spec) {
  int r = spec.r();
  auto coeffs = star_char_polynomial(spec);
  int deg = r - 1;
  // P(t) is the derivative of Q(t) = prod (t - l_i), so each arm length that
  // repeats m times is a root of multiplicity m - 1, and the remaining roots
  // are simple zeros of R(t) = sum_i m_i / (t - lambda_i), exactly one in each
  // gap between consecutive distinct lengths. R is strictly decreasing from
  // +inf to -inf on each gap, so bisection nails the simple roots; the
  // companion-matrix route loses ~eps^(1/m) digits on the repeated ones.
  std::vector<std::pair<double, int>> distinct;  // (length, multiplicity)
  for (int l : spec.arm_lengths) {
    if (!distinct.empty() && distinct.back().first == l) {
      distinct.back().second += 1;
    } else {
      distinct.emplace_back(l, 1);
    }
  }
  auto log_deriv = [&](double t) {
    double acc = 0.0;
    for (auto [lambda, m] : distinct) acc += m / (t - lambda);
    return acc;
  };
  std::vector<double> roots;
  for (auto [lambda, m] : distinct) {
    for (int k = 1; k < m; ++k) roots.push_back(lambda);
  }
  for (size_t i = 0; i + 1 < distinct.size(); ++i) {
    double lo = distinct[i].first, hi = distinct[i + 1].first;
    double eps = 1e-14 * (hi - lo);
    lo += eps;
    hi -= eps;
    for (int iter = 0; iter < 200 && hi - lo > 4e-16 * hi; ++iter) {
      double mid = 0.5 * (lo + hi);
      (log_deriv(mid) > 0 ? lo : hi) = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  if (static_cast<int>(roots.size()) != deg) {
    throw error(errc::root_finding_failure, "star polynomial root count mismatch");
  }
  double scale = 0.0;
  for (double c : coeffs) scale = std::max(scale, std::abs(c));
  for (double t : roots) {
    double headroom = scale * std::pow(std::max(1.0, t), deg);
    if (std::abs(poly_eval(coeffs, t)) > 1e-8 * headroom) {
      throw error(errc::root_finding_failure, "star polynomial root residual too large");
    }
  }
  std::vector<double> sigmas;
  for (double t : roots) sigmas.push_back(1.0 / t);
  std::sort(sigmas.begin(), sigmas.end());

  ClosedFormSpectrum out;
  out.family = "star";
  out.eigenvalues.emplace_back(0.0, 1);
  for (double s : sigmas) {
    if (!out.eigenvalues.empty() && out.eigenvalues.back().first > 0.0 &&
        std::abs(s - out.eigenvalues.back().first) <=
            1e-7 * std::max(1.0, out.eigenvalues.back().first)) {
      out.eigenvalues.back().second += 1;
    } else {
      out.eigenvalues.emplace_back(s, 1);
    }
  }
  return out;
}

StarZResult star_Z(const StarSpec& spec) {
  int r = spec.r();
  int l1 = spec.arm_lengths.front(), lr = spec.arm_lengths.back();
  for (int i = 0; i + 1 < r; ++i) {
    if (spec.arm_lengths[i] != l1) return {};
  }
  if ((lr - l1) % r != 0) return {};
  int d = (lr - l1) / r;
  StarZResult out;
  out.d = d;
  out.z.push_back(d == 0 ? "o" : arm_vertex(r, d));
  return out;
}

ClosedFormSpectrum regular_star_spectrum(int r, int l) {
  if (r < 2 || l < 1) throw error(errc::bad_parameter, "regular star needs r >= 2, l >= 1");
  ClosedFormSpectrum out;
  out.family = "regular-star";
  out.eigenvalues.emplace_back(0.0, 1);
  out.eigenvalues.emplace_back(1.0 / l, r - 1);
  return out;
}

std::vector<VertexFunction> regular_star_eigenfunctions(const Graph& star, int r, int l) {
  std::vector<VertexFunction> out;
  for (int j = 2; j <= r; ++j) {
    VertexFunction f = VertexFunction::Zero(star.vertex_count());
    for (int k = 1; k <= l; ++k) {
      f[star.index_of(arm_vertex(1, k))] = static_cast<double>(k) / l;
      f[star.index_of(arm_vertex(j, k))] = -static_cast<double>(k) / l;
    }
    out.push_back(std::move(f));
  }
  return out;
}

Eigen::VectorXd path_laplacian_eigenvalues(int r) {
  Eigen::VectorXd mu(r + 1);
  for (int i = 1; i <= r + 1; ++i) {
    mu[i - 1] = 2.0 - 2.0 * std::cos((i - 1) * std::numbers::pi / (r + 1));
  }
  return mu;
}

ClosedFormSpectrum regular_comb_spectrum(int r, int l) {
  if (r < 1 || l < 1) throw error(errc::bad_parameter, "regular comb needs r >= 1, l >= 1");
  auto mu = path_laplacian_eigenvalues(r);
  ClosedFormSpectrum out;
  out.family = "comb";
  for (int i = 0; i <= r; ++i) {
    out.eigenvalues.emplace_back(mu[i] / (1.0 + mu[i] * l), 1);
  }
  return out;
}

std::vector<VertexFunction> comb_eigenfunctions(const Graph& comb, int r, int l) {
  auto mu = path_laplacian_eigenvalues(r);
  std::vector<VertexFunction> out;
  for (int i = 1; i <= r + 1; ++i) {
    VertexFunction f(comb.vertex_count());
    for (int k = 0; k <= r; ++k) {
      double phi = std::cos((i - 1) * (2 * k + 1) * std::numbers::pi / (2.0 * (r + 1)));
      f[comb.index_of("b" + std::to_string(k))] = phi;
      for (int j = 1; j <= l; ++j) {
        f[comb.index_of("t" + std::to_string(k) + "." + std::to_string(j))] =
            phi * (1.0 + j * mu[i - 1]);
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

int name_depth(const std::string& name) {
  return static_cast<int>(std::count(name.begin(), name.end(), '.'));
}

bool is_descendant(const std::string& v, const std::string& ancestor) {
  if (v == ancestor) return true;
  return v.size() > ancestor.size() && v.compare(0, ancestor.size(), ancestor) == 0 &&
         v[ancestor.size()] == '.';
}

}  // namespace

ClosedFormSpectrum tree_ball_spectrum(int r, int d) {
  if (r < 1 || d < 3) throw error(errc::bad_parameter, "tree ball needs r >= 1, d >= 3");
  ClosedFormSpectrum out;
  out.family = "tree-ball";
  out.eigenvalues.emplace_back(0.0, 1);
  for (int k = 2; k <= r + 1; ++k) {
    long long denom = 0;  // sum_{i=0}^{r+1-k} (d-1)^i, exact
    for (int i = 0; i <= r + 1 - k; ++i) denom += ipow(d - 1, i);
    int mult = k == 2 ? d - 1 : static_cast<int>((d - 2) * d * ipow(d - 1, k - 3));
    out.eigenvalues.emplace_back(1.0 / static_cast<double>(denom), mult);
  }
  return out;
}

std::vector<VertexFunction> tree_ball_eigenfunctions(const Graph& ball, int r, int d) {
  std::vector<VertexFunction> out;
  for (int k = 2; k <= r + 1; ++k) {
    long long denom = 0;
    std::vector<long long> numer(r - k + 2);  // numer[j] = sum_{i=r+1-k-j}^{r+1-k} (d-1)^i
    for (int i = 0; i <= r + 1 - k; ++i) denom += ipow(d - 1, i);
    for (int j = 0; j <= r - k + 1; ++j) {
      long long acc = 0;
      for (int i = r + 1 - k - j; i <= r + 1 - k; ++i) acc += ipow(d - 1, i);
      numer[j] = acc;
    }
    for (int x = 0; x < ball.vertex_count(); ++x) {
      if (name_depth(ball.id(x)) != k - 2) continue;
      // Children of x in construction order.
      std::vector<int> children;
      for (auto [nbr, e] : ball.adjacency(x)) {
        if (name_depth(ball.id(nbr)) == k - 1) children.push_back(nbr);
      }
      std::sort(children.begin(), children.end());
      for (size_t alpha = 1; alpha < children.size(); ++alpha) {
        VertexFunction f = VertexFunction::Zero(ball.vertex_count());
        for (int sign_idx = 0; sign_idx < 2; ++sign_idx) {
          const std::string& top = ball.id(sign_idx == 0 ? children[0] : children[alpha]);
          double sign = sign_idx == 0 ? 1.0 : -1.0;
          for (int v = 0; v < ball.vertex_count(); ++v) {
            if (!is_descendant(ball.id(v), top)) continue;
            int j = name_depth(ball.id(v)) - (k - 1);
            f[v] = sign * static_cast<double>(numer[j]) / static_cast<double>(denom);
          }
        }
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

}  // namespace steklov
