#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "chebcube/cubature.hpp"
#include "chebcube/transform.hpp"

namespace chebcube {

using Point3 = std::array<double, 3>;
using MultiIndex3 = std::array<int, 3>;

/// Number of coordinates of a grid point equal to +-1.
enum class BoundaryClass { interior = 0, face = 1, edge = 2, vertex = 3 };

/// Hyperinterpolation nodes of degree n: the sigma rule with parameter
/// n + 1 on the Chebyshev-Lobatto grid C_{n+1}^3.
struct HyperNodeSet {
  int n = 0;
  SigmaPattern sigma;
  std::vector<Point3> points;
  std::vector<double> weights;
  std::vector<MultiIndex3> grid_index;
  std::vector<BoundaryClass> boundary_class;

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
  [[nodiscard]] int grid_nu() const noexcept { return n + 1; }
};

/// Values indexed by the total-degree simplex |alpha| <= n in graded
/// lexicographic order: by |alpha|, then alpha_1 descending, then alpha_2
/// descending.
class SimplexTensor {
 public:
  SimplexTensor() = default;
  explicit SimplexTensor(int n);

  [[nodiscard]] int degree() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

  [[nodiscard]] const std::vector<MultiIndex3>& indices() const noexcept { return indices_; }
  [[nodiscard]] std::span<double> values() noexcept { return values_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

  /// Position of alpha in the ordering, or -1 when |alpha| > n.
  [[nodiscard]] std::ptrdiff_t position(const MultiIndex3& alpha) const;

  /// Value at alpha; 0 outside the simplex.
  [[nodiscard]] double at(const MultiIndex3& alpha) const;
  double& operator[](const MultiIndex3& alpha);

 private:
  int n_ = 0;
  std::vector<MultiIndex3> indices_;
  std::vector<double> values_;
  std::vector<std::ptrdiff_t> lookup_;  // dense (n+1)^3 -> position
};

/// Hyperinterpolation coefficients c_alpha in the orthonormal basis
/// p_alpha = That_{a1}(x1) That_{a2}(x2) That_{a3}(x3).
using CoeffTensor = SimplexTensor;

[[nodiscard]] constexpr std::size_t simplex_size(int n) noexcept {
  const auto m = static_cast<std::size_t>(n);
  return (m + 1) * (m + 2) * (m + 3) / 6;
}

[[nodiscard]] HyperNodeSet hyper_node_set(int n, const SigmaPattern& sigma);

/// F = w f on the nodes, 0 elsewhere on C_{n+1}^3. f is called once per node.
[[nodiscard]] GridArray build_grid_values(const PointFunction& f, const HyperNodeSet& nodes);

/// Coefficients from a grid of weighted samples (steps iv and v of the
/// FFT pipeline).
[[nodiscard]] CoeffTensor coeffs_from_grid(const GridArray& weighted, int n);

[[nodiscard]] CoeffTensor hyper_coeffs(const PointFunction& f, const HyperNodeSet& nodes);
[[nodiscard]] CoeffTensor hyper_coeffs(const PointFunction& f, int n, const SigmaPattern& sigma);

/// c_alpha = sum_xi w_xi f(xi) p_alpha(xi) by direct summation.
[[nodiscard]] CoeffTensor hyper_coeffs_direct(const PointFunction& f, int n,
                                              const SigmaPattern& sigma);

/// Evaluates sum_alpha c_alpha p_alpha(x). Throws std::domain_error outside
/// the cube (beyond a 1e-12 clamp).
[[nodiscard]] double hyper_eval(const CoeffTensor& coeffs, std::span<const double> x);

/// max |approx - exact| / max |exact - mean(exact)|.
[[nodiscard]] double relative_error(std::span<const double> approx, std::span<const double> exact);

/// Equispaced points of [-1, 1]^3, `per_axis` per coordinate, first
/// coordinate slowest.
[[nodiscard]] std::vector<Point3> uniform_control_grid(int per_axis);

}  // namespace chebcube
