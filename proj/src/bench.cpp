#include "chebcube/bench.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "chebcube/cc3.hpp"
#include "chebcube/legendre.hpp"

namespace chebcube {

namespace {

double norm2(std::span<const double> x) {
  return x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

std::optional<TensorKind> parse_tensor_kind(std::string_view name) {
  if (name == "gauss_cheb") return TensorKind::gauss_cheb;
  if (name == "gauss_cheb_lobatto") return TensorKind::gauss_cheb_lobatto;
  if (name == "gauss_legendre") return TensorKind::gauss_legendre;
  if (name == "gauss_legendre_lobatto") return TensorKind::gauss_legendre_lobatto;
  if (name == "clenshaw_curtis") return TensorKind::clenshaw_curtis;
  return std::nullopt;
}

SigmaPattern parse_sigma3(std::string_view text) {
  SigmaPattern sigma = SigmaPattern::parse(text);
  if (sigma.size() != 3) throw std::invalid_argument("bench rules need a 3-letter sigma, got " + std::string(text));
  return sigma;
}

// Nested sum over the tensor grid, innermost axis first.
double tensor_sum(const PlainRule1D& rule, const PointFunction& f) {
  const std::size_t m = rule.nodes.size();
  double point[3];
  double outer = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    point[0] = rule.nodes[i];
    double middle = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      point[1] = rule.nodes[j];
      double inner = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        point[2] = rule.nodes[k];
        inner += rule.weights[k] * f(std::span<const double>(point, 3));
      }
      middle += rule.weights[j] * inner;
    }
    outer += rule.weights[i] * middle;
  }
  return outer;
}

PlainRule1D to_plain(const Rule1D& r) { return {r.nodes, r.weights}; }

}  // namespace

std::vector<TestFunction> test_suite() {
  return {
      {FunctionId::poly, "POLY", "entire",
       [](std::span<const double> x) { return std::pow((x[0] + x[1] + x[2]) / 3.0, 20); }},
      {FunctionId::exp, "EXP", "entire",
       [](std::span<const double> x) { return std::exp(x[0] + x[1] + x[2]); }},
      {FunctionId::gaussian, "GAUSSIAN", "entire",
       [](std::span<const double> x) { return std::exp(-norm2(x)); }},
      {FunctionId::runge, "RUNGE", "analytic",
       [](std::span<const double> x) { return 1.0 / (1.0 + 16.0 * norm2(x)); }},
      {FunctionId::cinf, "CINF", "C-infinity",
       [](std::span<const double> x) {
         const double r2 = norm2(x);
         return r2 == 0.0 ? 0.0 : std::exp(-1.0 / r2);
       }},
      {FunctionId::c2, "C2", "C2",
       [](std::span<const double> x) {
         const double r2 = norm2(x);
         return r2 * std::sqrt(r2);
       }},
  };
}

TestFunction test_function(std::string_view name) {
  const std::string key = upper(name);
  for (auto& f : test_suite())
    if (f.name == key) return f;
  throw std::invalid_argument("unknown test function '" + std::string(name) +
                              "' (expected POLY, EXP, GAUSSIAN, RUNGE, CINF or C2)");
}

std::string_view to_string(TensorKind kind) noexcept {
  switch (kind) {
    case TensorKind::gauss_cheb: return "gauss_cheb";
    case TensorKind::gauss_cheb_lobatto: return "gauss_cheb_lobatto";
    case TensorKind::gauss_legendre: return "gauss_legendre";
    case TensorKind::gauss_legendre_lobatto: return "gauss_legendre_lobatto";
    case TensorKind::clenshaw_curtis: return "clenshaw_curtis";
  }
  return "unknown";
}

CubatureRule tensor_rule(TensorKind kind, int n, int d) {
  if (n < 1) throw std::invalid_argument("tensor_rule: n must be >= 1");
  PlainRule1D base;
  Measure measure = Measure::lebesgue;
  switch (kind) {
    case TensorKind::gauss_cheb:
      base = to_plain(gauss_chebyshev_rule(n));
      measure = Measure::chebyshev_normalized;
      break;
    case TensorKind::gauss_cheb_lobatto:
      base = to_plain(gauss_lobatto_rule(n));
      measure = Measure::chebyshev_normalized;
      break;
    case TensorKind::gauss_legendre: base = gauss_legendre(n); break;
    case TensorKind::gauss_legendre_lobatto: base = gauss_legendre_lobatto(n); break;
    case TensorKind::clenshaw_curtis: base = clenshaw_curtis(n); break;
  }
  return tensor_product(std::string(to_string(kind)), base.nodes, base.weights, d, n, measure);
}

ReferenceValue reference_integral(const TestFunction& f, Measure measure) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, Measure>, ReferenceValue> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({f.name, measure}); it != cache.end()) return it->second;
  }

  auto base = [measure](int m) {
    return measure == Measure::lebesgue ? gauss_legendre(m) : to_plain(gauss_chebyshev_rule(m));
  };
  ReferenceValue ref;
  double previous = tensor_sum(base(32), f.evaluator);
  ref.value = previous;
  ref.points_per_axis = 32;
  for (int m = 64; m <= 512; m *= 2) {
    const double current = tensor_sum(base(m), f.evaluator);
    ref.value = current;
    ref.points_per_axis = m;
    ref.agreement = std::abs(current - previous) / std::max(std::abs(current), 1e-300);
    if (ref.agreement <= 1e-14) {
      ref.converged = true;
      break;
    }
    previous = current;
  }

  std::lock_guard lock(mutex);
  cache.emplace(std::pair{f.name, measure}, ref);
  return ref;
}

CubatureRule make_bench_rule(std::string_view name, int n) {
  if (auto kind = parse_tensor_kind(name)) return tensor_rule(*kind, n, 3);
  if (starts_with(name, "cheb_")) return build_sigma_rule(3, n, parse_sigma3(name.substr(5)));
  if (starts_with(name, "cc_like_")) return to_cubature_rule(cc_rule(n, parse_sigma3(name.substr(8))));
  throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

int min_rule_parameter(std::string_view name) {
  if (parse_tensor_kind(name)) return 1;
  if (starts_with(name, "cheb_")) {
    (void)parse_sigma3(name.substr(5));
    return 2;
  }
  if (starts_with(name, "cc_like_")) {
    (void)parse_sigma3(name.substr(8));
    return 1;
  }
  throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

std::vector<std::string> default_bench_rules() {
  return {"cheb_EEE",       "gauss_cheb",           "gauss_cheb_lobatto",
          "gauss_legendre", "gauss_legendre_lobatto", "clenshaw_curtis",
          "cc_like_EEE"};
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& config) {
  if (config.stride < 1) throw std::invalid_argument("bench stride must be >= 1");
  if (config.n_min < 1 || config.n_max < config.n_min) {
    throw std::invalid_argument("bench n range must satisfy 1 <= n-min <= n-max");
  }
  std::vector<TestFunction> functions;
  for (const auto& name : config.functions) functions.push_back(test_function(name));
  for (const auto& rule : config.rules) (void)min_rule_parameter(rule);

  std::vector<BenchRecord> records;
  for (const auto& rule_name : config.rules) {
    const int n_first = std::max(config.n_min, min_rule_parameter(rule_name));
    for (int n = n_first; n <= config.n_max; n += config.stride) {
      const CubatureRule rule = make_bench_rule(rule_name, n);
      if (config.measure && rule.measure != *config.measure) break;
      for (const auto& f : functions) {
        const ReferenceValue ref = reference_integral(f, rule.measure);
        const double approx = integrate(rule, f.evaluator);
        records.push_back({rule_name, rule.measure, n, rule.size(), f.name, approx, ref.value,
                           std::abs(approx - ref.value) / std::max(std::abs(ref.value), 1e-300)});
      }
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tie(a.rule_name, a.function_id, a.n) < std::tie(b.rule_name, b.function_id, b.n);
  });
  return records;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_bench_csv(std::ostream& out, const BenchConfig& config,
                     const std::vector<BenchRecord>& records) {
  out << "# n_min=" << config.n_min << " n_max=" << config.n_max << " stride=" << config.stride
      << '\n';
  std::vector<std::pair<std::string, Measure>> refs;
  for (const auto& r : records) {
    std::pair key{r.function_id, r.measure};
    if (std::find(refs.begin(), refs.end(), key) == refs.end()) refs.push_back(key);
  }
  for (const auto& [name, measure] : refs) {
    const ReferenceValue ref = reference_integral(test_function(name), measure);
    out << "# reference " << name << ' ' << to_string(measure) << " value=" << format_double(ref.value)
        << " agreement=" << format_double(ref.agreement) << " points_per_axis=" << ref.points_per_axis
        << " converged=" << (ref.converged ? "true" : "false") << '\n';
  }
  out << "rule,measure,n,nodes,function,approx,reference,rel_error\n";
  for (const auto& r : records) {
    out << r.rule_name << ',' << to_string(r.measure) << ',' << r.n << ',' << r.num_nodes << ','
        << r.function_id << ',' << format_double(r.approx) << ',' << format_double(r.reference)
        << ',' << format_double(r.relative_error) << '\n';
  }
}

std::vector<BenchRecord> run_benchmark_to_file(const BenchConfig& config, const std::string& path) {
  auto records = run_benchmark(config);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_bench_csv(out, config, records);
  out.flush();
  if (!out) throw std::runtime_error("failed writing benchmark CSV to '" + path + "'");
  return records;
}

}  // namespace chebcube
