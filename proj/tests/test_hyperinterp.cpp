#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "chebcube/bench.hpp"
#include "chebcube/hyperinterp.hpp"
#include "oracles.hpp"

using namespace chebcube;

namespace {

const std::vector<std::string> kSigmas{"EEE", "EEO", "EOE", "EOO"};

double control_error(const PointFunction& f, int n, const SigmaPattern& sigma, int per_axis = 30) {
  const CoeffTensor c = hyper_coeffs(f, n, sigma);
  std::vector<double> approx;
  std::vector<double> exact;
  for (const auto& x : uniform_control_grid(per_axis)) {
    approx.push_back(hyper_eval(c, x));
    exact.push_back(f(x));
  }
  return relative_error(approx, exact);
}

double l2_error(const PointFunction& f, int n, int per_axis = 30) {
  const CoeffTensor c = hyper_coeffs(f, n, SigmaPattern::parse("EEE"));
  double s = 0.0;
  for (const auto& x : uniform_control_grid(per_axis)) {
    const double e = hyper_eval(c, x) - f(x);
    s += e * e;
  }
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("node set example n = 3") {
  const HyperNodeSet x = hyper_node_set(3, SigmaPattern::parse("EEE"));
  CHECK(x.size() == 35);
  CHECK(x.grid_nu() == 4);
  std::map<Point3, double> w;
  for (std::size_t i = 0; i < x.size(); ++i) w[x.points[i]] = x.weights[i];
  CHECK(w.at({0.0, 0.0, 0.0}) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(w.at({1.0, 1.0, 1.0}) == doctest::Approx(0.0078125).epsilon(1e-15));
  std::set<double> axis;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.grid_index[i][0] % 2 == 0) axis.insert(x.points[i][0]);
  CHECK(axis == std::set<double>{-1.0, 0.0, 1.0});
}

TEST_CASE("node sets: weights, classes and agreement with the sigma rule") {
  for (int n = 1; n <= 20; ++n) {
    for (const auto& s : kSigmas) {
      const SigmaPattern sigma = SigmaPattern::parse(s);
      const HyperNodeSet x = hyper_node_set(n, sigma);
      double sum = 0.0;
      const double base = 4.0 / std::pow(n + 1.0, 3);
      for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x.weights[i];
        int on_boundary = 0;
        for (int t = 0; t < 3; ++t) on_boundary += std::abs(x.points[i][static_cast<std::size_t>(t)]) == 1.0;
        CHECK(static_cast<int>(x.boundary_class[i]) == on_boundary);
        CHECK(x.weights[i] == doctest::Approx(base / (1 << on_boundary)).epsilon(1e-14));
      }
      CHECK(std::abs(sum - 1.0) <= 1e-13);

      const CubatureRule rule = build_sigma_rule(3, n + 1, sigma);
      REQUIRE(rule.size() == x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (int t = 0; t < 3; ++t)
          CHECK(rule.node(i)[static_cast<std::size_t>(t)] == x.points[i][static_cast<std::size_t>(t)]);
        CHECK(rule.weights[i] == doctest::Approx(x.weights[i]).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("node set validation") {
  CHECK_THROWS_AS((void)hyper_node_set(0, SigmaPattern::parse("EEE")), std::invalid_argument);
  CHECK_THROWS_AS((void)hyper_node_set(3, SigmaPattern::parse("EE")), std::invalid_argument);
}

TEST_CASE("simplex ordering is graded lexicographic") {
  const SimplexTensor t(2);
  const std::vector<MultiIndex3> want{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0},
                                      {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  CHECK(t.indices() == want);
  CHECK(t.position({3, 0, 0}) == -1);
  CHECK(t.at({3, 0, 0}) == 0.0);
  SimplexTensor u(2);
  CHECK_THROWS_AS(u[(MultiIndex3{2, 1, 0})], std::out_of_range);
  for (int n = 0; n <= 30; ++n) CHECK(SimplexTensor(n).size() == simplex_size(n));
}

TEST_CASE("grid values: zero, constant and call count") {
  const HyperNodeSet x3 = hyper_node_set(3, SigmaPattern::parse("EEE"));
  const GridArray zero = build_grid_values([](std::span<const double>) { return 0.0; }, x3);
  CHECK(zero.size() == 125);
  CHECK(std::all_of(zero.values().begin(), zero.values().end(), [](double v) { return v == 0.0; }));

  const GridArray one = build_grid_values([](std::span<const double>) { return 1.0; }, x3);
  const auto nonzero = std::count_if(one.values().begin(), one.values().end(), [](double v) { return v != 0.0; });
  CHECK(nonzero == 35);
  double sum = 0.0;
  for (double v : one.values()) sum += v;
  CHECK(std::abs(sum - 1.0) <= 1e-15);

  // Count the EEE grid at n = 9 independently: nu = 10 has 6 even and 5 odd
  // indices per axis, so 6^3 + 5^3 nodes, far fewer than the 11^3 grid.
  std::size_t calls = 0;
  const HyperNodeSet x9 = hyper_node_set(9, SigmaPattern::parse("EEE"));
  (void)build_grid_values(
      [&calls](std::span<const double>) {
        ++calls;
        return 1.0;
      },
      x9);
  CHECK(calls == 6 * 6 * 6 + 5 * 5 * 5);
  CHECK(calls < 11 * 11 * 11);
}

TEST_CASE("constants and basis polynomials are reproduced") {
  for (const auto& s : kSigmas) {
    const SigmaPattern sigma = SigmaPattern::parse(s);
    const CoeffTensor c = hyper_coeffs([](std::span<const double>) { return 1.0; }, 6, sigma);
    for (std::size_t q = 0; q < c.size(); ++q) {
      CHECK(std::abs(c.values()[q] - (q == 0 ? 1.0 : 0.0)) <= 1e-13);
    }
    for (const MultiIndex3 a0 : {MultiIndex3{1, 0, 0}, MultiIndex3{0, 2, 3}, MultiIndex3{2, 2, 2}, MultiIndex3{0, 0, 6}}) {
      const CoeffTensor p = hyper_coeffs(
          [a0](std::span<const double> x) { return oracle::basis(a0, {x[0], x[1], x[2]}); }, 6, sigma);
      for (std::size_t q = 0; q < p.size(); ++q) {
        CHECK(std::abs(p.values()[q] - (p.indices()[q] == a0 ? 1.0 : 0.0)) <= 1e-13);
      }
    }
  }
  const CoeffTensor t1 = hyper_coeffs_direct(
      [](std::span<const double> x) { return std::numbers::sqrt2 * x[0]; }, 2, SigmaPattern::parse("EOE"));
  CHECK(t1.at({1, 0, 0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(t1.at({0, 0, 0})) <= 1e-15);
}

TEST_CASE("FFT and direct coefficients agree for n <= 16 and every sigma") {
  const PointFunction f = [](std::span<const double> x) {
    return std::exp(0.3 * x[0] - 0.5 * x[1] + 0.2 * x[2]) * std::cos(2.0 * x[0] * x[2]) + 1.0 / (2.0 + x[1]);
  };
  for (int n = 1; n <= 16; ++n) {
    for (const auto& s : kSigmas) {
      const SigmaPattern sigma = SigmaPattern::parse(s);
      const CoeffTensor fast = hyper_coeffs(f, n, sigma);
      const CoeffTensor direct = hyper_coeffs_direct(f, n, sigma);
      REQUIRE(fast.indices() == direct.indices());
      double worst = 0.0;
      for (std::size_t q = 0; q < fast.size(); ++q) {
        worst = std::max(worst, std::abs(fast.values()[q] - direct.values()[q]));
      }
      INFO("n=" << n << " sigma=" << s);
      CHECK(worst <= 1e-12);
    }
  }
}

TEST_CASE("coefficients of exp(x1) against one-dimensional Chebyshev coefficients") {
  // a_k = integral of exp(x) That_k(x) against w = sqrt2 I_k(1) (I_0(1) for k = 0).
  auto a = [](int k) { return (k == 0 ? 1.0 : std::numbers::sqrt2) * oracle::bessel_i1(k); };
  for (int k = 0; k <= 8; ++k) {
    const double q = oracle::chebyshev_integral([k](double x) { return std::exp(x) * oracle::cheb_T_hat(k, x); });
    CHECK(std::abs(q - a(k)) <= 1e-15);
  }

  const int n = 6;
  const int nu = n + 1;
  const CoeffTensor c = hyper_coeffs_direct([](std::span<const double> x) { return std::exp(x[0]); }, n,
                                            SigmaPattern::parse("EEE"));
  // The grid marginal is the Lobatto rule with parameter nu, which sees
  // T_j T_k through T_{j+k} and T_{|j-k|}: alias every a_j accordingly.
  auto lobatto_T = [nu](int m) { return m % (2 * nu) == 0 ? 1.0 : 0.0; };
  for (int k = 0; k <= n; ++k) {
    double predicted = 0.0;
    for (int j = 0; j <= 60; ++j) {
      const double sj = j == 0 ? 1.0 : std::numbers::sqrt2;
      const double sk = k == 0 ? 1.0 : std::numbers::sqrt2;
      predicted += a(j) * sj * sk * 0.5 * (lobatto_T(j + k) + lobatto_T(std::abs(j - k)));
    }
    INFO("k=" << k);
    CHECK(std::abs(c.at({k, 0, 0}) - predicted) <= 1e-13);
    if (k <= 3) CHECK(std::abs(c.at({k, 0, 0}) - a(k)) <= 1e-10);
    CHECK(std::abs(c.at({k, 1, 0})) <= 1e-14);
  }
}

TEST_CASE("evaluation") {
  CoeffTensor c(3);
  c[{0, 0, 0}] = 1.0;
  const double origin[3] = {0.0, 0.0, 0.0};
  const double corner[3] = {1.0, -1.0, 1.0};
  CHECK(hyper_eval(c, origin) == 1.0);
  CHECK(hyper_eval(c, corner) == 1.0);
  c[{1, 0, 2}] = 0.5;
  const double x[3] = {0.3, -0.2, 0.7};
  CHECK(hyper_eval(c, x) == doctest::Approx(1.0 + 0.5 * oracle::basis({1, 0, 2}, {0.3, -0.2, 0.7})).epsilon(1e-14));
  const double outside[3] = {1.5, 0.0, 0.0};
  CHECK_THROWS_AS((void)hyper_eval(c, outside), std::domain_error);
}

TEST_CASE("relative_error") {
  const std::vector<double> exact{0.0, 1.0, 2.0};
  const std::vector<double> approx{0.0, 1.0, 2.1};
  CHECK(relative_error(approx, exact) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS((void)relative_error(exact, std::vector<double>{1.0, 1.0, 1.0}), std::domain_error);
  CHECK_THROWS_AS((void)relative_error(exact, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("control grid") {
  const auto g = uniform_control_grid(3);
  REQUIRE(g.size() == 27);
  CHECK(g.front() == Point3{-1.0, -1.0, -1.0});
  CHECK(g[1] == Point3{-1.0, -1.0, 0.0});
  CHECK(g.back() == Point3{1.0, 1.0, 1.0});
}

TEST_CASE("random polynomials of degree n are reproduced") {
  std::mt19937_64 rng(2024);
  const auto grid = uniform_control_grid(11);
  for (int n : {3, 5, 8}) {
    for (int trial = 0; trial < 5; ++trial) {
      const oracle::RandomPoly p(n, rng);
      const CoeffTensor c = hyper_coeffs([&p](std::span<const double> x) { return p({x[0], x[1], x[2]}); }, n,
                                         SigmaPattern::parse(kSigmas[static_cast<std::size_t>(trial) % 4]));
      for (std::size_t q = 0; q < p.alpha.size(); ++q) {
        CHECK(std::abs(c.at({p.alpha[q][0], p.alpha[q][1], p.alpha[q][2]}) - p.coeff[q]) <= 1e-12);
      }
      double sup = 0.0;
      double worst = 0.0;
      for (const auto& x : grid) {
        const double v = p(x);
        sup = std::max(sup, std::abs(v));
        worst = std::max(worst, std::abs(hyper_eval(c, x) - v));
      }
      CHECK(worst <= 1e-11 * (1.0 + sup));
    }
  }
}

TEST_CASE("hyperinterpolation does not interpolate") {
  const PointFunction f = [](std::span<const double> x) { return 1.0 / (1.0 + 16.0 * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2])); };
  const HyperNodeSet nodes = hyper_node_set(8, SigmaPattern::parse("EEE"));
  const CoeffTensor c = hyper_coeffs(f, nodes);
  double worst = 0.0;
  for (const auto& x : nodes.points) worst = std::max(worst, std::abs(hyper_eval(c, x) - f(x)));
  CHECK(worst > 1e-3);
}

TEST_CASE("the node set is larger than the polynomial space") {
  for (int n = 1; n <= 30; ++n) CHECK(hyper_node_set(n, SigmaPattern::parse("EEE")).size() > simplex_size(n));
}

TEST_CASE("Runge-type error decreases with the degree") {
  const PointFunction f = test_function("RUNGE").evaluator;
  CHECK(control_error(f, 20, SigmaPattern::parse("EEE")) < control_error(f, 10, SigmaPattern::parse("EEE")));
}

TEST_CASE("discrete L2 error decreases for the Runge-type function") {
  const PointFunction f = test_function("RUNGE").evaluator;
  double previous = l2_error(f, 4);
  for (int n : {8, 12, 16, 20}) {
    const double e = l2_error(f, n);
    INFO("n=" << n);
    CHECK(e < previous);
    previous = e;
  }
}

TEST_CASE("exp(x1 + x2 + x3) control-grid error follows the projection tail") {
  const PointFunction f = test_function("EXP").evaluator;
  // Tail of the exact expansion at (1, 1, 1), where the error peaks:
  // sum over |alpha| > n of a_alpha1 a_alpha2 a_alpha3 That(1) products.
  auto tail = [](int n) {
    auto b = [](int k) { return (k == 0 ? 1.0 : 2.0) * oracle::bessel_i1(k); };
    double s = 0.0;
    for (int i = 0; i <= 40; ++i)
      for (int j = 0; j <= 40; ++j)
        for (int k = 0; k <= 40; ++k)
          if (i + j + k > n) s += b(i) * b(j) * b(k);
    return s;
  };
  // relative_error divides by the largest deviation from the grid mean.
  const double mean = [] {
    double s = 0.0;
    for (const auto& x : uniform_control_grid(30)) s += std::exp(x[0] + x[1] + x[2]);
    return s / 27000.0;
  }();
  const double denom = std::max(std::exp(3.0) - mean, mean - std::exp(-3.0));

  const double e14 = control_error(f, 14, SigmaPattern::parse("EEE"));
  CHECK(e14 == doctest::Approx(tail(14) / denom).epsilon(0.25));
  CHECK(control_error(f, 15, SigmaPattern::parse("EEE")) < 1e-10);
}

TEST_CASE("pipeline scales to n = 64") {
  const CoeffTensor c = hyper_coeffs(test_function("GAUSSIAN").evaluator, 64, SigmaPattern::parse("EEE"));
  CHECK(c.size() == simplex_size(64));
  CHECK(std::isfinite(c.values()[0]));
}
