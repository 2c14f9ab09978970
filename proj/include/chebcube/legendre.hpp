#pragma once

#include <stdexcept>
#include <vector>

/// Classical 1-D rules for the Lebesgue measure on [-1, 1] used as
/// tensor-product baselines. Nodes are in decreasing order.
namespace chebcube {

/// Raised when an iterative numerical procedure fails to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PlainRule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, exact through degree 2n-1. Nodes by Newton
/// iteration on the three-term recurrence; throws NumericalError when a
/// step does not fall below 1e-15 within 100 iterations.
[[nodiscard]] PlainRule1D gauss_legendre(int n);

/// (n+1)-point Gauss-Legendre-Lobatto rule, exact through degree 2n-1.
[[nodiscard]] PlainRule1D gauss_legendre_lobatto(int n);

/// (n+1)-point Clenshaw-Curtis rule on cos(j pi / n).
[[nodiscard]] PlainRule1D clenshaw_curtis(int n);

/// P_n(x) and P_n'(x) by the three-term recurrence.
struct LegendreValue {
  double p;
  double dp;
};
[[nodiscard]] LegendreValue legendre(int n, double x);

}  // namespace chebcube
