#include "chebcube/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "chebcube/bench.hpp"
#include "chebcube/cc3.hpp"
#include "chebcube/hyperinterp.hpp"
#include "chebcube/legendre.hpp"

namespace chebcube {

namespace {

struct RuleOptions {
  int dim = 3;
  int n = 0;
  std::string sigma;
  std::string measure = "chebyshev";
  std::string kind = "sigma";
};

void add_rule_options(CLI::App& cmd, RuleOptions& opt) {
  cmd.add_option("--dim", opt.dim, "Dimension d")->check(CLI::PositiveNumber);
  cmd.add_option("--n", opt.n, "Rule parameter n")->required();
  cmd.add_option("--sigma", opt.sigma, "E/O pattern of length d (default all E)");
  cmd.add_option("--measure", opt.measure, "chebyshev | lebesgue")
      ->check(CLI::IsMember({"chebyshev", "lebesgue"}));
  cmd.add_option("--kind", opt.kind,
                 "sigma | gauss_cheb | gauss_cheb_lobatto | gauss_legendre | "
                 "gauss_legendre_lobatto | clenshaw_curtis");
}

SigmaPattern sigma_or_default(const std::string& text, int dim) {
  if (text.empty()) return SigmaPattern(std::vector<Parity>(dim, Parity::even));
  return SigmaPattern::parse(text);
}

CubatureRule build_rule(const RuleOptions& opt) {
  if (opt.kind == "sigma") {
    const SigmaPattern sigma = sigma_or_default(opt.sigma, opt.dim);
    if (opt.measure == "lebesgue") {
      if (opt.dim != 3) throw std::invalid_argument("the Lebesgue sigma rule exists only for --dim 3");
      return to_cubature_rule(cc_rule(opt.n, sigma));
    }
    return build_sigma_rule(opt.dim, opt.n, sigma);
  }
  for (TensorKind kind : {TensorKind::gauss_cheb, TensorKind::gauss_cheb_lobatto,
                          TensorKind::gauss_legendre, TensorKind::gauss_legendre_lobatto,
                          TensorKind::clenshaw_curtis}) {
    if (opt.kind == to_string(kind)) return tensor_rule(kind, opt.n, opt.dim);
  }
  throw std::invalid_argument("unknown rule kind '" + opt.kind + "'");
}

// Runs `write` against the file at `path`, or against `out` for "-".
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

void write_rule_csv(std::ostream& os, const CubatureRule& rule) {
  for (int s = 1; s <= rule.dim; ++s) os << 'x' << s << ',';
  os << "weight\n";
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (double c : rule.node(i)) os << format_double(c) << ',';
    os << format_double(rule.weights[i]) << '\n';
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_error_summary(std::ostream& out, double approx, double reference) {
  out << "approx=" << format_double(approx) << '\n'
      << "reference=" << format_double(reference) << '\n'
      << "rel_error=" << format_double(std::abs(approx - reference) / std::max(std::abs(reference), 1e-300))
      << '\n';
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chebyshev cubature, hyperinterpolation and Clenshaw-Curtis-like rules on the cube"};
  app.require_subcommand(1);

  RuleOptions rule_opt;
  std::string rule_out = "-";
  auto* rule_cmd = app.add_subcommand("rule", "Write cubature nodes and weights as CSV");
  add_rule_options(*rule_cmd, rule_opt);
  rule_cmd->add_option("--out", rule_out, "Output CSV path ('-' for stdout)");

  RuleOptions int_opt;
  std::string int_fn;
  auto* int_cmd = app.add_subcommand("integrate", "Integrate a test function with a rule");
  add_rule_options(*int_cmd, int_opt);
  int_cmd->add_option("--fn", int_fn, "POLY | EXP | GAUSSIAN | RUNGE | CINF | C2")->required();

  int hyper_n = 0;
  std::string hyper_sigma = "EEE";
  std::string hyper_fn;
  std::string hyper_coeffs_out;
  int hyper_grid = 30;
  auto* hyper_cmd = app.add_subcommand("hyper", "Total-degree hyperinterpolation in the 3-cube");
  hyper_cmd->add_option("--n", hyper_n, "Hyperinterpolation degree")->required();
  hyper_cmd->add_option("--sigma", hyper_sigma, "E/O pattern of length 3");
  hyper_cmd->add_option("--fn", hyper_fn, "Test function")->required();
  hyper_cmd->add_option("--coeffs-out", hyper_coeffs_out, "Write coefficients CSV here");
  hyper_cmd->add_option("--control-grid", hyper_grid, "Equispaced control points per axis");

  int cc_n = 0;
  std::string cc_sigma = "EEE";
  std::string cc_fn;
  std::string cc_weights_out;
  auto* cc_cmd = app.add_subcommand("cc", "Clenshaw-Curtis-like rule for the Lebesgue measure");
  cc_cmd->add_option("--n", cc_n, "Hyperinterpolation degree")->required();
  cc_cmd->add_option("--sigma", cc_sigma, "E/O pattern of length 3");
  cc_cmd->add_option("--fn", cc_fn, "Test function to integrate");
  cc_cmd->add_option("--weights-out", cc_weights_out, "Write x1,x2,x3,lambda CSV here");

  std::string bench_suite = "all";
  std::string bench_rules = "default";
  std::string bench_sigma = "EEE";
  std::string bench_measure = "all";
  std::string bench_out = "-";
  BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "Error-versus-cost benchmark as CSV");
  bench_cmd->add_option("--suite", bench_suite, "Comma-separated test functions or 'all'");
  bench_cmd->add_option("--rules", bench_rules, "Comma-separated rules, 'default', or empty");
  bench_cmd->add_option("--sigma", bench_sigma, "Pattern used by the default rule list");
  bench_cmd->add_option("--n-min", bench.n_min, "Smallest rule parameter");
  bench_cmd->add_option("--n-max", bench.n_max, "Largest rule parameter");
  bench_cmd->add_option("--stride", bench.stride, "Step between rule parameters");
  bench_cmd->add_option("--measure", bench_measure, "chebyshev | lebesgue | all")
      ->check(CLI::IsMember({"chebyshev", "lebesgue", "all"}));
  bench_cmd->add_option("--out", bench_out, "Output CSV path ('-' for stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    if (*rule_cmd) {
      const CubatureRule rule = build_rule(rule_opt);
      emit(rule_out, out, [&](std::ostream& os) { write_rule_csv(os, rule); });
    } else if (*int_cmd) {
      const TestFunction f = test_function(int_fn);
      const CubatureRule rule = build_rule(int_opt);
      if (rule.dim != 3) throw std::invalid_argument("test functions are defined on the 3-cube; use --dim 3");
      const double approx = integrate(rule, f.evaluator);
      const ReferenceValue ref = reference_integral(f, rule.measure);
      out << "rule=" << rule.name << '\n' << "measure=" << to_string(rule.measure) << '\n'
          << "nodes=" << rule.size() << '\n';
      print_error_summary(out, approx, ref.value);
    } else if (*hyper_cmd) {
      const SigmaPattern sigma = SigmaPattern::parse(hyper_sigma);
      const TestFunction f = test_function(hyper_fn);
      if (hyper_grid < 2) throw std::invalid_argument("--control-grid must be >= 2");
      const HyperNodeSet nodes = hyper_node_set(hyper_n, sigma);
      const CoeffTensor coeffs = hyper_coeffs(f.evaluator, nodes);
      const auto grid = uniform_control_grid(hyper_grid);
      std::vector<double> approx(grid.size());
      std::vector<double> exact(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) {
        approx[i] = hyper_eval(coeffs, grid[i]);
        exact[i] = f(grid[i]);
      }
      out << "n=" << hyper_n << '\n' << "sigma=" << sigma.str() << '\n'
          << "nodes=" << nodes.size() << '\n' << "coefficients=" << coeffs.size() << '\n'
          << "control_grid=" << hyper_grid << "^3\n"
          << "rel_error=" << format_double(relative_error(approx, exact)) << '\n';
      if (!hyper_coeffs_out.empty()) {
        emit(hyper_coeffs_out, out, [&](std::ostream& os) {
          os << "# n=" << hyper_n << " sigma=" << sigma.str() << " function=" << f.name << '\n';
          os << "alpha1,alpha2,alpha3,c\n";
          for (std::size_t q = 0; q < coeffs.size(); ++q) {
            const auto& a = coeffs.indices()[q];
            os << a[0] << ',' << a[1] << ',' << a[2] << ',' << format_double(coeffs.values()[q]) << '\n';
          }
        });
      }
    } else if (*cc_cmd) {
      if (cc_fn.empty() && cc_weights_out.empty()) {
        throw std::invalid_argument("cc needs --fn, --weights-out or both");
      }
      const SigmaPattern sigma = SigmaPattern::parse(cc_sigma);
      std::optional<TestFunction> f;
      if (!cc_fn.empty()) f = test_function(cc_fn);
      const CCRule rule = cc_rule(cc_n, sigma);
      out << "nodes=" << rule.size() << '\n';
      if (f) {
        const double approx = cc_integrate(rule, f->evaluator);
        const ReferenceValue ref = reference_integral(*f, Measure::lebesgue);
        print_error_summary(out, approx, ref.value);
      }
      out << "sum_abs_weights=" << format_double(sum_abs_weights(rule)) << '\n';
      if (!cc_weights_out.empty()) {
        emit(cc_weights_out, out, [&](std::ostream& os) {
          os << "x1,x2,x3,lambda\n";
          for (std::size_t p = 0; p < rule.size(); ++p) {
            for (double c : rule.points[p]) os << format_double(c) << ',';
            os << format_double(rule.lambda[p]) << '\n';
          }
        });
      }
    } else if (*bench_cmd) {
      bench.functions.clear();
      if (bench_suite == "all") {
        for (const auto& f : test_suite()) bench.functions.push_back(f.name);
      } else {
        bench.functions = split_list(bench_suite);
      }
      const SigmaPattern sigma = SigmaPattern::parse(bench_sigma);
      if (bench_rules == "default") {
        for (auto name : default_bench_rules()) {
          if (name == "cheb_EEE") name = "cheb_" + sigma.str();
          if (name == "cc_like_EEE") name = "cc_like_" + sigma.str();
          bench.rules.push_back(name);
        }
      } else {
        bench.rules = split_list(bench_rules);
      }
      if (bench_measure == "chebyshev") bench.measure = Measure::chebyshev_normalized;
      if (bench_measure == "lebesgue") bench.measure = Measure::lebesgue;
      if (bench_out.empty() || bench_out == "-") {
        write_bench_csv(out, bench, run_benchmark(bench));
      } else {
        const auto records = run_benchmark_to_file(bench, bench_out);
        out << "records=" << records.size() << '\n' << "out=" << bench_out << '\n';
      }
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalidArguments;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }
  return kExitOk;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace chebcube
