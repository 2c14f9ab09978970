#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

/// One-dimensional Chebyshev machinery for the normalized arcsine weight
/// w(x) = 1 / (pi sqrt(1 - x^2)) on [-1, 1].
namespace chebcube {

enum class RuleKind { gauss, lobatto, half_even, half_odd };

enum class Parity { even, odd };

/// Nodes and weights of a 1-D quadrature functional.
///
/// Nodes are stored in decreasing abscissa order, which is the index order
/// of the defining cosines. For Lobatto rules and their halves `index[i]`
/// is the j of cos(j pi / n); for Gauss rules it is the k of
/// cos((2k - 1) pi / 2n).
struct Rule1D {
  RuleKind kind;
  int n;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<int> index;

  [[nodiscard]] std::size_t size() const noexcept { return nodes.size(); }
};

struct LobattoHalves {
  Rule1D even;
  Rule1D odd;
};

/// Snaps |x| <= 1 + 1e-12 into [-1, 1]; throws std::domain_error otherwise.
[[nodiscard]] double clamp_unit(double x);

/// T_k(x) = cos(k arccos x).
[[nodiscard]] double cheb_T(int k, double x);

/// Orthonormal Chebyshev polynomial: T_0 = 1, sqrt(2) T_k for k > 0.
[[nodiscard]] double cheb_T_hat(int k, double x);

/// cos(j pi / n), evaluated as sin((n - 2j) pi / 2n) so that the grid is
/// exactly antisymmetric and hits 0 and +-1 exactly.
[[nodiscard]] double lobatto_node(int j, int n);

[[nodiscard]] Rule1D gauss_chebyshev_rule(int n);
[[nodiscard]] Rule1D gauss_lobatto_rule(int n);

/// Even- and odd-index halves of the Lobatto rule with parameter n >= 2.
[[nodiscard]] LobattoHalves split_lobatto(int n);
[[nodiscard]] Rule1D half_rule(Parity parity, int n);

/// Closed-form value of the even or odd half applied to T_k.
[[nodiscard]] double lemma_value(Parity parity, int n, int k);

template <std::invocable<double> F>
[[nodiscard]] double apply_rule(const Rule1D& rule, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(rule.nodes[i]);
  }
  return sum;
}

}  // namespace chebcube
