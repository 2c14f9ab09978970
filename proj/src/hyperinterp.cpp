#include "chebcube/hyperinterp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chebcube {

namespace {

constexpr int kDim = 3;

double boundary_factor(BoundaryClass c) {
  return std::ldexp(1.0, -static_cast<int>(c));
}

// That_k at every k = 0..n for one abscissa.
void fill_basis(int n, double x, std::span<double> out) {
  const double theta = std::acos(clamp_unit(x));
  out[0] = 1.0;
  for (int k = 1; k <= n; ++k) out[k] = std::numbers::sqrt2 * std::cos(k * theta);
}

}  // namespace

SimplexTensor::SimplexTensor(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("SimplexTensor: degree must be >= 0");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  lookup_.assign(m * m * m, -1);
  indices_.reserve(simplex_size(n));
  for (int total = 0; total <= n; ++total)
    for (int a1 = total; a1 >= 0; --a1)
      for (int a2 = total - a1; a2 >= 0; --a2) {
        const int a3 = total - a1 - a2;
        lookup_[(a1 * m + a2) * m + a3] = static_cast<std::ptrdiff_t>(indices_.size());
        indices_.push_back({a1, a2, a3});
      }
  values_.assign(indices_.size(), 0.0);
}

std::ptrdiff_t SimplexTensor::position(const MultiIndex3& alpha) const {
  if (alpha[0] < 0 || alpha[1] < 0 || alpha[2] < 0) return -1;
  if (alpha[0] + alpha[1] + alpha[2] > n_) return -1;
  const std::size_t m = static_cast<std::size_t>(n_) + 1;
  return lookup_[(alpha[0] * m + alpha[1]) * m + alpha[2]];
}

double SimplexTensor::at(const MultiIndex3& alpha) const {
  const auto pos = position(alpha);
  return pos < 0 ? 0.0 : values_[pos];
}

double& SimplexTensor::operator[](const MultiIndex3& alpha) {
  const auto pos = position(alpha);
  if (pos < 0) throw std::out_of_range("multi-index outside the total-degree simplex");
  return values_[pos];
}

HyperNodeSet hyper_node_set(int n, const SigmaPattern& sigma) {
  if (n < 1) throw std::invalid_argument("hyperinterpolation degree must be >= 1");
  if (sigma.size() != kDim) {
    throw std::invalid_argument("hyperinterpolation needs a sigma pattern of length 3, got " +
                                sigma.str());
  }
  const int nu = n + 1;
  const std::vector<int> idx = sigma_grid_indices(kDim, nu, sigma);
  const std::size_t count = idx.size() / kDim;
  const double base = 4.0 / (static_cast<double>(nu) * nu * nu);

  HyperNodeSet set;
  set.n = n;
  set.sigma = sigma;
  set.points.resize(count);
  set.weights.resize(count);
  set.grid_index.resize(count);
  set.boundary_class.resize(count);
  for (std::size_t p = 0; p < count; ++p) {
    int on_boundary = 0;
    for (int s = 0; s < kDim; ++s) {
      const int j = idx[p * kDim + s];
      set.grid_index[p][s] = j;
      set.points[p][s] = lobatto_node(j, nu);
      if (std::abs(set.points[p][s]) == 1.0) ++on_boundary;
    }
    set.boundary_class[p] = static_cast<BoundaryClass>(on_boundary);
    set.weights[p] = base * boundary_factor(set.boundary_class[p]);
  }
  return set;
}

GridArray build_grid_values(const PointFunction& f, const HyperNodeSet& nodes) {
  GridArray grid(nodes.grid_nu());
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    const auto& g = nodes.grid_index[p];
    grid(g[0], g[1], g[2]) = nodes.weights[p] * f(nodes.points[p]);
  }
  return grid;
}

CoeffTensor coeffs_from_grid(const GridArray& weighted, int n) {
  if (weighted.nu() != n + 1) {
    throw std::invalid_argument("grid extent does not match hyperinterpolation degree");
  }
  const GridArray raw = cosine_sum_3d(weighted);
  CoeffTensor coeffs(n);
  const auto& idx = coeffs.indices();
  auto values = coeffs.values();
  for (std::size_t p = 0; p < idx.size(); ++p) {
    const auto& a = idx[p];
    double beta = 1.0;
    for (int s = 0; s < kDim; ++s)
      if (a[s] > 0) beta *= std::numbers::sqrt2;
    values[p] = beta * raw(a[0], a[1], a[2]);
  }
  return coeffs;
}

CoeffTensor hyper_coeffs(const PointFunction& f, const HyperNodeSet& nodes) {
  return coeffs_from_grid(build_grid_values(f, nodes), nodes.n);
}

CoeffTensor hyper_coeffs(const PointFunction& f, int n, const SigmaPattern& sigma) {
  return hyper_coeffs(f, hyper_node_set(n, sigma));
}

CoeffTensor hyper_coeffs_direct(const PointFunction& f, int n, const SigmaPattern& sigma) {
  const HyperNodeSet nodes = hyper_node_set(n, sigma);
  CoeffTensor coeffs(n);
  const auto& idx = coeffs.indices();
  auto values = coeffs.values();
  std::vector<double> basis(static_cast<std::size_t>(kDim) * (n + 1));
  for (std::size_t p = 0; p < nodes.size(); ++p) {
    const double wf = nodes.weights[p] * f(nodes.points[p]);
    for (int s = 0; s < kDim; ++s) {
      fill_basis(n, nodes.points[p][s], std::span(basis).subspan(s * (n + 1), n + 1));
    }
    for (std::size_t q = 0; q < idx.size(); ++q) {
      const auto& a = idx[q];
      values[q] += wf * basis[a[0]] * basis[(n + 1) + a[1]] * basis[2 * (n + 1) + a[2]];
    }
  }
  return coeffs;
}

double hyper_eval(const CoeffTensor& coeffs, std::span<const double> x) {
  if (x.size() != kDim) throw std::invalid_argument("hyper_eval expects a 3-dimensional point");
  const int n = coeffs.degree();
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  std::vector<double> basis(kDim * m);
  for (int s = 0; s < kDim; ++s) fill_basis(n, x[s], std::span(basis).subspan(s * m, m));
  const auto& idx = coeffs.indices();
  const auto values = coeffs.values();
  double sum = 0.0;
  for (std::size_t q = 0; q < idx.size(); ++q) {
    const auto& a = idx[q];
    sum += values[q] * basis[a[0]] * basis[m + a[1]] * basis[2 * m + a[2]];
  }
  return sum;
}

double relative_error(std::span<const double> approx, std::span<const double> exact) {
  if (approx.size() != exact.size() || exact.empty()) {
    throw std::invalid_argument("relative_error: sequences must be non-empty and of equal length");
  }
  const double mean = std::accumulate(exact.begin(), exact.end(), 0.0) / exact.size();
  double spread = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    spread = std::max(spread, std::abs(exact[i] - mean));
    err = std::max(err, std::abs(approx[i] - exact[i]));
  }
  if (spread <= 1e-15) {
    throw std::domain_error("relative_error: reference values are constant");
  }
  return err / spread;
}

std::vector<Point3> uniform_control_grid(int per_axis) {
  if (per_axis < 2) throw std::invalid_argument("control grid needs at least 2 points per axis");
  std::vector<double> axis(per_axis);
  for (int i = 0; i < per_axis; ++i) axis[i] = -1.0 + 2.0 * i / (per_axis - 1);
  std::vector<Point3> grid;
  grid.reserve(static_cast<std::size_t>(per_axis) * per_axis * per_axis);
  for (double a : axis)
    for (double b : axis)
      for (double c : axis) grid.push_back({a, b, c});
  return grid;
}

}  // namespace chebcube
