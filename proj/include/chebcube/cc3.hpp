#pragma once

#include <vector>

#include "chebcube/hyperinterp.hpp"

/// Clenshaw-Curtis-like cubature on [-1, 1]^3 for the Lebesgue measure,
/// obtained by integrating the total-degree hyperinterpolant exactly.
namespace chebcube {

/// m_alpha = integral of p_alpha over the cube (total mass 8).
using MomentVector = SimplexTensor;

struct CCRule {
  int n = 0;
  SigmaPattern sigma;
  std::vector<Point3> points;
  std::vector<double> lambda;  // may be negative

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
};

/// Integral over [-1, 1] of That_k.
[[nodiscard]] double moment_1d(int k);

[[nodiscard]] MomentVector moments(int n);

/// lambda_xi = w_xi sum_{|alpha| <= n} p_alpha(xi) m_alpha, summed directly.
[[nodiscard]] CCRule cc_rule(int n, const SigmaPattern& sigma);

/// Same weights, with the inner sum over alpha evaluated for the whole
/// grid at once by cosine_sum_3d.
[[nodiscard]] CCRule cc_rule_fast(int n, const SigmaPattern& sigma);

[[nodiscard]] double cc_integrate(const CCRule& rule, const PointFunction& f);
[[nodiscard]] double cc_integrate(const PointFunction& f, int n, const SigmaPattern& sigma);

[[nodiscard]] double sum_abs_weights(const CCRule& rule);

[[nodiscard]] CubatureRule to_cubature_rule(const CCRule& rule);

}  // namespace chebcube
