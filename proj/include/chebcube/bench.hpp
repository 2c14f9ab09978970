#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chebcube/cubature.hpp"

namespace chebcube {

enum class FunctionId { poly, exp, gaussian, runge, cinf, c2 };

/// Test integrand on [-1, 1]^3.
struct TestFunction {
  FunctionId id;
  std::string name;        // POLY, EXP, GAUSSIAN, RUNGE, CINF, C2
  std::string smoothness;  // entire, analytic, C-infinity, C2
  PointFunction evaluator;

  double operator()(std::span<const double> x) const { return evaluator(x); }
};

/// The six integrands, in FunctionId order:
///   POLY     ((x1 + x2 + x3) / 3)^20
///   EXP      exp(x1 + x2 + x3)
///   GAUSSIAN exp(-|x|^2)
///   RUNGE    1 / (1 + 16 |x|^2)
///   CINF     exp(-1 / |x|^2), 0 at the origin
///   C2       |x|^3
[[nodiscard]] std::vector<TestFunction> test_suite();

/// Lookup by name (case-insensitive); throws std::invalid_argument.
[[nodiscard]] TestFunction test_function(std::string_view name);

enum class TensorKind {
  gauss_cheb,
  gauss_cheb_lobatto,
  gauss_legendre,
  gauss_legendre_lobatto,
  clenshaw_curtis
};

[[nodiscard]] std::string_view to_string(TensorKind kind) noexcept;

/// d-fold product rule. Point counts per axis: n for the Gauss kinds, n + 1
/// for the Lobatto kinds and Clenshaw-Curtis.
[[nodiscard]] CubatureRule tensor_rule(TensorKind kind, int n, int d);

struct ReferenceValue {
  double value = 0.0;
  double agreement = 0.0;  // relative change over the last doubling
  int points_per_axis = 0;
  bool converged = false;
};

/// Tensor Gauss-Legendre (Lebesgue) or Gauss-Chebyshev (Chebyshev measure)
/// with the points per axis doubled from 32 until two successive values
/// agree to 1e-14 relative or 512 points are reached. Results are memoized
/// per (function name, measure).
[[nodiscard]] ReferenceValue reference_integral(const TestFunction& f, Measure measure);

/// Bench rule names: cheb_<sigma>, cc_like_<sigma>, gauss_cheb,
/// gauss_cheb_lobatto, gauss_legendre, gauss_legendre_lobatto,
/// clenshaw_curtis. All rules live on the 3-cube.
[[nodiscard]] CubatureRule make_bench_rule(std::string_view name, int n);

/// Smallest n the named rule accepts.
[[nodiscard]] int min_rule_parameter(std::string_view name);

[[nodiscard]] std::vector<std::string> default_bench_rules();

struct BenchRecord {
  std::string rule_name;
  Measure measure;
  int n;
  std::size_t num_nodes;
  std::string function_id;
  double approx;
  double reference;
  double relative_error;
};

struct BenchConfig {
  std::vector<std::string> functions;  // names; empty means none
  std::vector<std::string> rules;
  int n_min = 2;
  int n_max = 40;
  int stride = 1;
  std::optional<Measure> measure;  // restrict to rules of this measure
};

/// One record per (rule, n, function), sorted by (rule, function, n).
[[nodiscard]] std::vector<BenchRecord> run_benchmark(const BenchConfig& config);

/// rule,measure,n,nodes,function,approx,reference,rel_error preceded by
/// '#' metadata lines.
void write_bench_csv(std::ostream& out, const BenchConfig& config,
                     const std::vector<BenchRecord>& records);

/// Runs the benchmark and writes the CSV to `path`; I/O failures raise
/// std::runtime_error naming the path.
std::vector<BenchRecord> run_benchmark_to_file(const BenchConfig& config, const std::string& path);

/// "%.17g".
[[nodiscard]] std::string format_double(double v);

}  // namespace chebcube
