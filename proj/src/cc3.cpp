#include "chebcube/cc3.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chebcube {

double moment_1d(int k) {
  if (k < 0) throw std::invalid_argument("moment_1d: negative degree");
  if (k == 0) return 2.0;
  if (k % 2 == 1) return 0.0;
  const double kk = static_cast<double>(k);
  return std::numbers::sqrt2 * 2.0 / (1.0 - kk * kk);
}

MomentVector moments(int n) {
  if (n < 0) throw std::invalid_argument("moments: degree must be >= 0");
  MomentVector m(n);
  std::vector<double> one_d(n + 1);
  for (int k = 0; k <= n; ++k) one_d[k] = moment_1d(k);
  const auto& idx = m.indices();
  auto values = m.values();
  for (std::size_t q = 0; q < idx.size(); ++q) {
    values[q] = one_d[idx[q][0]] * one_d[idx[q][1]] * one_d[idx[q][2]];
  }
  return m;
}

CCRule cc_rule(int n, const SigmaPattern& sigma) {
  const HyperNodeSet nodes = hyper_node_set(n, sigma);
  const MomentVector m = moments(n);

  // Only the moments with all-even indices are nonzero.
  std::vector<MultiIndex3> support;
  std::vector<double> support_values;
  for (std::size_t q = 0; q < m.size(); ++q) {
    if (m.values()[q] != 0.0) {
      support.push_back(m.indices()[q]);
      support_values.push_back(m.values()[q]);
    }
  }

  CCRule rule{n, sigma, nodes.points, std::vector<double>(nodes.size())};
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  std::vector<double> basis(3 * width);
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    for (int s = 0; s < 3; ++s) {
      const double theta = std::acos(nodes.points[p][s]);
      basis[s * width] = 1.0;
      for (int k = 1; k <= n; ++k) basis[s * width + k] = std::numbers::sqrt2 * std::cos(k * theta);
    }
    double sum = 0.0;
    for (std::size_t q = 0; q < support.size(); ++q) {
      const auto& a = support[q];
      sum += support_values[q] * basis[a[0]] * basis[width + a[1]] * basis[2 * width + a[2]];
    }
    rule.lambda[p] = nodes.weights[p] * sum;
  }
  return rule;
}

CCRule cc_rule_fast(int n, const SigmaPattern& sigma) {
  const HyperNodeSet nodes = hyper_node_set(n, sigma);
  const MomentVector m = moments(n);
  GridArray scaled(nodes.grid_nu());
  for (std::size_t q = 0; q < m.size(); ++q) {
    const auto& a = m.indices()[q];
    double beta = 1.0;
    for (int s = 0; s < 3; ++s)
      if (a[s] > 0) beta *= std::numbers::sqrt2;
    scaled(a[0], a[1], a[2]) = beta * m.values()[q];
  }
  const GridArray kernel = cosine_sum_3d(scaled);
  CCRule rule{n, sigma, nodes.points, std::vector<double>(nodes.size())};
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    const auto& g = nodes.grid_index[p];
    rule.lambda[p] = nodes.weights[p] * kernel(g[0], g[1], g[2]);
  }
  return rule;
}

double cc_integrate(const CCRule& rule, const PointFunction& f) {
  double sum = 0.0;
  for (std::size_t p = 0; p < rule.size(); ++p) sum += rule.lambda[p] * f(rule.points[p]);
  return sum;
}

double cc_integrate(const PointFunction& f, int n, const SigmaPattern& sigma) {
  return cc_integrate(cc_rule(n, sigma), f);
}

double sum_abs_weights(const CCRule& rule) {
  double sum = 0.0;
  for (double l : rule.lambda) sum += std::abs(l);
  return sum;
}

CubatureRule to_cubature_rule(const CCRule& rule) {
  CubatureRule out;
  out.name = "cc_like_" + rule.sigma.str();
  out.dim = 3;
  out.degree_param = rule.n;
  out.measure = Measure::lebesgue;
  out.sigma = rule.sigma;
  out.weights = rule.lambda;
  out.coords.reserve(3 * rule.size());
  for (const auto& p : rule.points) out.coords.insert(out.coords.end(), p.begin(), p.end());
  return out;
}

}  // namespace chebcube
