#include "chebcube/legendre.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chebcube/cheb1d.hpp"

namespace chebcube {

namespace {

constexpr double kNewtonTolerance = 1e-15;
constexpr int kMaxNewtonIterations = 100;

[[noreturn]] void fail(const char* rule, int n, double x) {
  throw NumericalError(std::string(rule) + ": Newton iteration did not converge for n = " +
                       std::to_string(n) + " near x = " + std::to_string(x));
}

}  // namespace

LegendreValue legendre(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double p_prev = 1.0;
  double p = x;
  double dp_prev = 0.0;
  double dp = 1.0;
  for (int k = 2; k <= n; ++k) {
    const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
    // Differentiated recurrence; stays finite at x = +-1.
    const double dp_next = dp_prev + (2.0 * k - 1.0) * p;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp};
}

PlainRule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  PlainRule1D rule{std::vector<double>(n), std::vector<double>(n)};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    bool converged = false;
    for (int it = 0; it < kMaxNewtonIterations; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= kNewtonTolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) fail("gauss_legendre", n, x);
    if (n % 2 == 1 && i == half - 1) x = 0.0;
    const double dp = legendre(n, x).dp;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.nodes[n - 1 - i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

PlainRule1D gauss_legendre_lobatto(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_lobatto: n must be >= 1");
  PlainRule1D rule{std::vector<double>(n + 1), std::vector<double>(n + 1)};
  const double nn1 = static_cast<double>(n) * (n + 1);
  rule.nodes[0] = 1.0;
  rule.nodes[n] = -1.0;
  rule.weights[0] = rule.weights[n] = 2.0 / nn1;
  // Interior nodes are the roots of P_n'; Newton uses the Legendre ODE
  // (1 - x^2) P_n'' = 2x P_n' - n(n+1) P_n.
  for (int j = 1; j <= n / 2; ++j) {
    double x = lobatto_node(j, n);
    bool converged = false;
    for (int it = 0; it < kMaxNewtonIterations; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = dp * (1.0 - x * x) / (2.0 * x * dp - nn1 * p);
      x -= dx;
      if (std::abs(dx) <= kNewtonTolerance) {
        converged = true;
        break;
      }
    }
    if (!converged) fail("gauss_legendre_lobatto", n, x);
    if (2 * j == n) x = 0.0;
    const double p = legendre(n, x).p;
    const double w = 2.0 / (nn1 * p * p);
    rule.nodes[j] = x;
    rule.nodes[n - j] = -x;
    rule.weights[j] = rule.weights[n - j] = w;
  }
  return rule;
}

PlainRule1D clenshaw_curtis(int n) {
  if (n < 1) throw std::invalid_argument("clenshaw_curtis: n must be >= 1");
  PlainRule1D rule{std::vector<double>(n + 1), std::vector<double>(n + 1)};
  // w_j = (c_j / n) (1 - sum_k b_k cos(2 k j pi / n) / (4k^2 - 1)), i.e. the
  // discrete cosine expansion weighted by the Chebyshev moments.
  for (int j = 0; j <= n; ++j) {
    double s = 1.0;
    for (int k = 1; 2 * k <= n; ++k) {
      const double b = (2 * k == n) ? 1.0 : 2.0;
      const long long r = (2LL * k * j) % (2LL * n);
      s -= b * std::cos(static_cast<double>(r) * std::numbers::pi / n) / (4.0 * k * k - 1.0);
    }
    const double c = (j == 0 || j == n) ? 1.0 : 2.0;
    rule.nodes[j] = lobatto_node(j, n);
    rule.weights[j] = c * s / n;
  }
  return rule;
}

}  // namespace chebcube
