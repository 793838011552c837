// Copyright 2026 The symprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symprep/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace symprep {
namespace {

// Leading coefficients below this fraction of the largest one count as zero,
// i.e. as roots at infinity.
constexpr double kVanishingLeading = 1e-14;

Complex horner(const std::vector<Complex>& a, Complex z) {
  Complex v = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * z + *it;
  return v;
}

Complex horner_derivative(const std::vector<Complex>& a, Complex z) {
  Complex v = 0.0;
  for (std::size_t k = a.size(); k-- > 1;) v = v * z + static_cast<double>(k) * a[k];
  return v;
}

double max_abs(const std::vector<Complex>& a) {
  double m = 0.0;
  for (const auto& x : a) m = std::max(m, std::abs(x));
  return m;
}

// Representative of a set of extended roots on the Riemann sphere: the mean in
// whichever chart (z or 1/z) keeps the points bounded.
ExtendedRoot centroid(const std::vector<ExtendedRoot>& pts) {
  std::size_t outside = 0;
  for (const auto& p : pts) {
    if (p.at_infinity || std::abs(p.value) > 1.0) ++outside;
  }
  if (2 * outside <= pts.size()) {
    Complex sum = 0.0;
    for (const auto& p : pts) sum += p.at_infinity ? Complex(0.0) : p.value;  // never chosen with many infinities
    return ExtendedRoot{sum / static_cast<double>(pts.size()), false};
  }
  Complex sum = 0.0;
  for (const auto& p : pts) {
    if (!p.at_infinity) sum += 1.0 / p.value;
  }
  const Complex w = sum / static_cast<double>(pts.size());
  if (w == Complex(0.0)) return ExtendedRoot{{}, true};
  return ExtendedRoot{1.0 / w, false};
}

class Clusters {
 public:
  explicit Clusters(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> groups() {
    std::vector<std::vector<std::size_t>> out(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) out[find(i)].push_back(i);
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& g) { return g.empty(); }), out.end());
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<ExtendedRoot> pick(const std::vector<ExtendedRoot>& roots, const std::vector<std::size_t>& idx) {
  std::vector<ExtendedRoot> out;
  for (auto i : idx) out.push_back(roots[i]);
  return out;
}

double min_linkage(const std::vector<ExtendedRoot>& roots, const std::vector<std::size_t>& a,
                   const std::vector<std::size_t>& b) {
  double d = std::numeric_limits<double>::infinity();
  for (auto i : a) {
    for (auto j : b) d = std::min(d, chordal_distance(roots[i], roots[j]));
  }
  return d;
}

double diameter(const std::vector<ExtendedRoot>& roots, const std::vector<std::size_t>& a) {
  double d = 0.0;
  for (auto i : a) {
    for (auto j : a) d = std::max(d, chordal_distance(roots[i], roots[j]));
  }
  return d;
}

DegeneracyConfig config_from(const std::vector<std::vector<std::size_t>>& groups, bool marginal) {
  DegeneracyConfig cfg;
  for (const auto& g : groups) cfg.multiplicities.push_back(static_cast<int>(g.size()));
  std::sort(cfg.multiplicities.begin(), cfg.multiplicities.end(), std::greater<>());
  cfg.marginal = marginal;
  return cfg;
}

std::vector<std::vector<std::size_t>> chordal_groups(const std::vector<ExtendedRoot>& roots, double rel_tol) {
  Clusters clusters(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (chordal_distance(roots[i], roots[j]) <= rel_tol) clusters.unite(i, j);
    }
  }
  return clusters.groups();
}

// An m-fold root of p is a simple root of the (m-1)-th derivative, which is
// well conditioned where the cluster centroid is not. Newton on that
// derivative, in the chart that keeps the point bounded.
ExtendedRoot refine_multiple_root(const std::vector<Complex>& majorana, const ExtendedRoot& z, int multiplicity) {
  if (multiplicity < 2) return z;
  std::vector<Complex> a = majorana;
  const bool reversed = z.at_infinity || std::abs(z.value) > 1.0;
  Complex w = z.value;
  if (reversed) {
    std::reverse(a.begin(), a.end());
    w = z.at_infinity ? Complex(0.0) : 1.0 / z.value;
  }
  const std::size_t order = static_cast<std::size_t>(multiplicity) - 1;
  if (a.size() <= order + 1) return z;
  std::vector<Complex> d(a.size() - order);
  for (std::size_t j = 0; j < d.size(); ++j) {
    double falling = 1.0;
    for (std::size_t i = 0; i < order; ++i) falling *= static_cast<double>(j + order - i);
    d[j] = a[j + order] * falling;
  }
  for (int iter = 0; iter < 8; ++iter) {
    const Complex dp = horner_derivative(d, w);
    if (std::abs(dp) == 0.0) break;
    const Complex next = w - horner(d, w) / dp;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag()) || std::abs(next - w) > 0.5) break;
    if (std::abs(horner(d, next)) >= std::abs(horner(d, w))) break;
    w = next;
  }
  if (!reversed) return ExtendedRoot{w, false};
  if (w == Complex(0.0)) return ExtendedRoot{{}, true};
  return ExtendedRoot{1.0 / w, false};
}

}  // namespace

std::vector<Complex> majorana_coefficients(const SymmetricCoefficients& c) {
  const int n = c.num_qubits();
  std::vector<Complex> a(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(k)] = c[k] * dicke_norm(n, k);
  return a;
}

std::vector<ExtendedRoot> majorana_roots(const SymmetricCoefficients& c) {
  const int n = c.num_qubits();
  std::vector<Complex> a = majorana_coefficients(c);
  const double scale = max_abs(a);
  int degree = n;
  while (degree > 0 && std::abs(a[static_cast<std::size_t>(degree)]) <= kVanishingLeading * scale) --degree;
  int zeros = 0;
  while (zeros < degree && a[static_cast<std::size_t>(zeros)] == Complex(0.0)) ++zeros;

  std::vector<ExtendedRoot> roots;
  for (int i = 0; i < zeros; ++i) roots.push_back(ExtendedRoot{Complex(0.0), false});
  const int d = degree - zeros;
  if (d > 0) {
    std::vector<Complex> q(a.begin() + zeros, a.begin() + degree + 1);  // q_0..q_d, q_0 != 0
    const Complex lead = q.back();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -q[static_cast<std::size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw NumericalError("companion eigenvalue iteration failed");
    for (int i = 0; i < d; ++i) {
      Complex z = solver.eigenvalues()[i];
      const Complex dp = horner_derivative(q, z);
      if (std::abs(dp) > 0.0) {
        const Complex candidate = z - horner(q, z) / dp;
        if (std::isfinite(candidate.real()) && std::isfinite(candidate.imag()) &&
            std::abs(horner(q, candidate)) < std::abs(horner(q, z))) {
          z = candidate;
        }
      }
      roots.push_back(ExtendedRoot{z, false});
    }
  }
  for (int i = degree; i < n; ++i) roots.push_back(ExtendedRoot{{}, true});
  return roots;
}

double chordal_distance(const ExtendedRoot& a, const ExtendedRoot& b) {
  if (a.at_infinity && b.at_infinity) return 0.0;
  if (a.at_infinity || b.at_infinity) {
    const Complex z = a.at_infinity ? b.value : a.value;
    return 2.0 / std::sqrt(1.0 + std::norm(z));
  }
  return 2.0 * std::abs(a.value - b.value) / std::sqrt((1.0 + std::norm(a.value)) * (1.0 + std::norm(b.value)));
}

int DegeneracyConfig::num_qubits() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }

std::string DegeneracyConfig::label() const {
  std::string out = "D_{";
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(multiplicities[i]);
  }
  out += "}";
  if (separable()) out += ", separable";
  return out;
}

DegeneracyConfig degeneracy_config(const std::vector<ExtendedRoot>& roots, double rel_tol) {
  const auto groups = chordal_groups(roots, rel_tol);
  bool marginal = false;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].size() > 1 && diameter(roots, groups[i]) > rel_tol / 100.0) marginal = true;
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (min_linkage(roots, groups[i], groups[j]) < 100.0 * rel_tol) marginal = true;
    }
  }
  return config_from(groups, marginal);
}

double multiple_root_distance(const SymmetricCoefficients& c, const ExtendedRoot& z, int multiplicity) {
  const int n = c.num_qubits();
  if (multiplicity < 1 || multiplicity > n) throw std::invalid_argument("multiplicity outside [1, N]");
  std::vector<Complex> cc = c.values();
  Complex w = z.value;
  if (z.at_infinity || std::abs(z.value) > 1.0) {
    // Reversed chart: roots 1/z of the reversed coefficient list.
    std::reverse(cc.begin(), cc.end());
    w = z.at_infinity ? Complex(0.0) : 1.0 / z.value;
  }
  // Taylor coefficients b_j = sum_k a_k C(k,j) w^{k-j}, a_k = c_k sqrt(C(N,k)).
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(multiplicity, n + 1);
  Eigen::VectorXcd b = Eigen::VectorXcd::Zero(multiplicity);
  for (int j = 0; j < multiplicity; ++j) {
    for (int k = j; k <= n; ++k) {
      const Complex entry = dicke_norm(n, k) * binomial(k, j) * std::pow(w, k - j);
      m(j, k) = entry;
      b[j] += entry * cc[static_cast<std::size_t>(k)];
    }
  }
  const Eigen::VectorXcd dc = m.completeOrthogonalDecomposition().solve(b);
  return dc.norm();
}

DegeneracyConfig degeneracy_config(const std::vector<ExtendedRoot>& roots, const SymmetricCoefficients& c,
                                   const ClusterOptions& options) {
  if (static_cast<int>(roots.size()) != c.num_qubits()) throw std::invalid_argument("root count differs from N");
  auto groups = chordal_groups(roots, options.rel_tol);
  const std::vector<Complex> majorana = majorana_coefficients(c);
  auto merge_error = [&](const std::vector<std::size_t>& g) {
    const int m = static_cast<int>(g.size());
    const ExtendedRoot center = centroid(pick(roots, g));
    const double error = multiple_root_distance(c, center, m);
    // The refined centre only counts while it belongs to this cluster: every
    // member lies closer to it than any root outside the cluster.
    const ExtendedRoot refined = refine_multiple_root(majorana, center, m);
    if (chordal_distance(refined, center) > diameter(roots, g)) return error;
    double reach = 0.0;
    for (auto i : g) reach = std::max(reach, chordal_distance(refined, roots[i]));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (std::find(g.begin(), g.end(), i) == g.end() && chordal_distance(refined, roots[i]) <= reach) return error;
    }
    return std::min(error, multiple_root_distance(c, refined, m));
  };
  // Greedily fuse the closest pair of clusters while the fused multiple root
  // is consistent with the coefficients.
  bool merged = true;
  while (merged && groups.size() > 1) {
    merged = false;
    std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> pairs;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        pairs.push_back({min_linkage(roots, groups[i], groups[j]), {i, j}});
      }
    }
    std::sort(pairs.begin(), pairs.end());
    for (const auto& [dist, ij] : pairs) {
      std::vector<std::size_t> fused = groups[ij.first];
      fused.insert(fused.end(), groups[ij.second].begin(), groups[ij.second].end());
      if (merge_error(fused) <= options.backward_tol) {
        groups[ij.first] = std::move(fused);
        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(ij.second));
        merged = true;
        break;
      }
    }
  }
  bool marginal = false;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].size() > 1 && diameter(roots, groups[i]) > options.rel_tol / 100.0 &&
        merge_error(groups[i]) > options.backward_tol / 100.0) {
      marginal = true;
    }
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      std::vector<std::size_t> fused = groups[i];
      fused.insert(fused.end(), groups[j].begin(), groups[j].end());
      if (min_linkage(roots, groups[i], groups[j]) < 100.0 * options.rel_tol ||
          merge_error(fused) < 100.0 * options.backward_tol) {
        marginal = true;
      }
    }
  }
  return config_from(groups, marginal);
}

SymmetricCoefficients coefficients_from_roots(const std::vector<ExtendedRoot>& roots, int num_qubits) {
  if (static_cast<int>(roots.size()) != num_qubits) {
    throw std::invalid_argument("expected " + std::to_string(num_qubits) + " roots, got " +
                                std::to_string(roots.size()));
  }
  // Expand prod (z - r) over finite roots.
  std::vector<Complex> poly{Complex(1.0)};
  for (const auto& r : roots) {
    if (r.at_infinity) continue;
    std::vector<Complex> next(poly.size() + 1, 0.0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= r.value * poly[k];
    }
    poly = std::move(next);
  }
  std::vector<Complex> c(static_cast<std::size_t>(num_qubits) + 1, 0.0);
  for (std::size_t k = 0; k < poly.size(); ++k) c[k] = poly[k] / dicke_norm(num_qubits, static_cast<int>(k));
  return SymmetricCoefficients(std::move(c));
}

Classification classify(const SymmetricCoefficients& c, const ClusterOptions& options) {
  Classification out;
  out.roots = majorana_roots(c);
  out.config = degeneracy_config(out.roots, c, options);
  out.label = out.config.label();
  return out;
}

SymmetricCoefficients apply_symmetric_operation(const SymmetricCoefficients& c, const Eigen::Matrix2cd& a) {
  if (std::abs(a.determinant()) == 0.0) throw std::invalid_argument("symmetric operation must be invertible");
  const int n = c.num_qubits();
  const std::vector<Complex> coeffs = majorana_coefficients(c);
  // p'(z) = sum_k a_k (A00 + A10 z)^{N-k} (A01 + A11 z)^k.
  auto multiply = [](const std::vector<Complex>& p, Complex c0, Complex c1) {
    std::vector<Complex> out(p.size() + 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      out[i] += c0 * p[i];
      out[i + 1] += c1 * p[i];
    }
    return out;
  };
  std::vector<Complex> total(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    std::vector<Complex> term{coeffs[static_cast<std::size_t>(k)]};
    for (int i = 0; i < n - k; ++i) term = multiply(term, a(0, 0), a(1, 0));
    for (int i = 0; i < k; ++i) term = multiply(term, a(0, 1), a(1, 1));
    for (std::size_t j = 0; j < term.size(); ++j) total[j] += term[j];
  }
  for (int k = 0; k <= n; ++k) total[static_cast<std::size_t>(k)] /= dicke_norm(n, k);
  return SymmetricCoefficients(std::move(total));
}

ExtendedRoot moebius_image(const ExtendedRoot& z, const Eigen::Matrix2cd& a) {
  if (z.at_infinity) {
    if (a(1, 0) == Complex(0.0)) return ExtendedRoot{{}, true};
    return ExtendedRoot{-a(0, 0) / a(1, 0), false};
  }
  const Complex den = a(1, 1) - a(1, 0) * z.value;
  if (den == Complex(0.0)) return ExtendedRoot{{}, true};
  return ExtendedRoot{(a(0, 0) * z.value - a(0, 1)) / den, false};
}

}  // namespace symprep
