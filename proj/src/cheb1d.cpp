#include "chebcube/cheb1d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebcube {

namespace {

constexpr double kClampTolerance = 1e-12;

void require_positive(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(what) + ": parameter n = " + std::to_string(n) +
                                " must be >= " + std::to_string(minimum));
  }
}

Rule1D lobatto_subset(RuleKind kind, int n, int first_index) {
  Rule1D rule{kind, n, {}, {}, {}};
  const double interior = 1.0 / n;
  for (int j = first_index; j <= n; j += 2) {
    rule.index.push_back(j);
    rule.nodes.push_back(lobatto_node(j, n));
    rule.weights.push_back((j == 0 || j == n) ? 0.5 * interior : interior);
  }
  return rule;
}

}  // namespace

double clamp_unit(double x) {
  if (std::abs(x) <= 1.0) return x;
  if (std::abs(x) <= 1.0 + kClampTolerance) return std::copysign(1.0, x);
  throw std::domain_error("abscissa " + std::to_string(x) + " lies outside [-1, 1]");
}

double cheb_T(int k, double x) {
  if (k < 0) throw std::invalid_argument("cheb_T: negative degree");
  x = clamp_unit(x);
  if (k == 0) return 1.0;
  return std::cos(k * std::acos(x));
}

double cheb_T_hat(int k, double x) {
  const double t = cheb_T(k, x);
  return k == 0 ? t : std::numbers::sqrt2 * t;
}

double lobatto_node(int j, int n) {
  return std::sin(static_cast<double>(n - 2 * j) * std::numbers::pi / (2.0 * n));
}

Rule1D gauss_chebyshev_rule(int n) {
  require_positive(n, 1, "gauss_chebyshev_rule");
  Rule1D rule{RuleKind::gauss, n, {}, {}, {}};
  rule.nodes.reserve(n);
  for (int k = 1; k <= n; ++k) {
    rule.index.push_back(k);
    // cos((2k - 1) pi / 2n)
    rule.nodes.push_back(std::sin(static_cast<double>(n - 2 * k + 1) * std::numbers::pi / (2.0 * n)));
    rule.weights.push_back(1.0 / n);
  }
  return rule;
}

Rule1D gauss_lobatto_rule(int n) {
  require_positive(n, 1, "gauss_lobatto_rule");
  Rule1D rule{RuleKind::lobatto, n, {}, {}, {}};
  for (int j = 0; j <= n; ++j) {
    rule.index.push_back(j);
    rule.nodes.push_back(lobatto_node(j, n));
    rule.weights.push_back((j == 0 || j == n) ? 0.5 / n : 1.0 / n);
  }
  return rule;
}

LobattoHalves split_lobatto(int n) {
  require_positive(n, 2, "split_lobatto");
  return {lobatto_subset(RuleKind::half_even, n, 0), lobatto_subset(RuleKind::half_odd, n, 1)};
}

Rule1D half_rule(Parity parity, int n) {
  require_positive(n, 2, "half_rule");
  return parity == Parity::even ? lobatto_subset(RuleKind::half_even, n, 0)
                                : lobatto_subset(RuleKind::half_odd, n, 1);
}

double lemma_value(Parity parity, int n, int k) {
  require_positive(n, 2, "lemma_value");
  k = std::abs(k);
  if (k % n != 0) return 0.0;
  if (parity == Parity::even) return 0.5;
  return (k / n) % 2 == 0 ? 0.5 : -0.5;
}

}  // namespace chebcube
