#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chebcube/bench.hpp"
#include "chebcube/cc3.hpp"
#include "chebcube/cheb1d.hpp"
#include "chebcube/cubature.hpp"
#include "chebcube/cli.hpp"
#include "chebcube/hyperinterp.hpp"
#include "chebcube/legendre.hpp"

namespace py = pybind11;
using namespace chebcube;

namespace {

// Python integrands receive the point as separate float arguments.
PointFunction wrap(py::function f) {
  return [f = std::move(f)](std::span<const double> x) {
    py::tuple args(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) args[i] = py::float_(x[i]);
    return f(*args).cast<double>();
  };
}

PointFunction resolve(const py::object& f) {
  if (py::isinstance<py::str>(f)) return test_function(f.cast<std::string>()).evaluator;
  return wrap(f.cast<py::function>());
}

py::array_t<double> nodes_array(const CubatureRule& rule) {
  py::array_t<double> a({rule.size(), static_cast<std::size_t>(rule.dim)});
  std::copy(rule.coords.begin(), rule.coords.end(), a.mutable_data());
  return a;
}

py::array_t<double> points_array(const std::vector<Point3>& pts) {
  py::array_t<double> a({pts.size(), std::size_t{3}});
  auto r = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (int s = 0; s < 3; ++s) r(i, s) = pts[i][s];
  return a;
}

py::array_t<double> vector_array(const std::vector<double>& v) {
  py::array_t<double> a(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), a.mutable_data());
  return a;
}

py::dict coeff_dict(const CoeffTensor& c) {
  py::dict d;
  for (std::size_t q = 0; q < c.size(); ++q) {
    const auto& a = c.indices()[q];
    d[py::make_tuple(a[0], a[1], a[2])] = c.values()[q];
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_chebcube, m) {
  m.doc() = "Chebyshev cubature on the d-cube, hyperinterpolation and Clenshaw-Curtis-like rules";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("cheb_T", &cheb_T, py::arg("k"), py::arg("x"));
  m.def("cheb_T_hat", &cheb_T_hat, py::arg("k"), py::arg("x"));
  m.def("lemma_value",
        [](const std::string& parity, int n, int k) {
          if (parity != "E" && parity != "O") throw std::invalid_argument("parity must be 'E' or 'O'");
          return lemma_value(parity == "E" ? Parity::even : Parity::odd, n, k);
        },
        py::arg("parity"), py::arg("n"), py::arg("k"));

  m.def("gauss_chebyshev_rule", [](int n) {
    const Rule1D r = gauss_chebyshev_rule(n);
    return py::make_tuple(r.nodes, r.weights);
  });
  m.def("gauss_lobatto_rule", [](int n) {
    const Rule1D r = gauss_lobatto_rule(n);
    return py::make_tuple(r.nodes, r.weights);
  });
  m.def("split_lobatto", [](int n) {
    const LobattoHalves h = split_lobatto(n);
    return py::make_tuple(py::make_tuple(h.even.nodes, h.even.weights),
                          py::make_tuple(h.odd.nodes, h.odd.weights));
  });

  m.def("representative_patterns", [](int d) {
    std::vector<std::string> out;
    for (const auto& s : representative_patterns(d)) out.push_back(s.str());
    return out;
  });
  m.def("node_count",
        [](int d, int n, const std::string& sigma) { return node_count(d, n, SigmaPattern::parse(sigma)); },
        py::arg("d"), py::arg("n"), py::arg("sigma"));
  m.def("sigma_rule",
        [](int d, int n, const std::string& sigma) {
          const CubatureRule r = build_sigma_rule(d, n, SigmaPattern::parse(sigma));
          return py::make_tuple(nodes_array(r), vector_array(r.weights));
        },
        py::arg("d"), py::arg("n"), py::arg("sigma"),
        "Nodes (N x d) and weights of the degree 2n-1 rule for the normalized product Chebyshev measure.");
  m.def("integrate_sigma_rule",
        [](int d, int n, const std::string& sigma, const py::object& f) {
          return integrate(build_sigma_rule(d, n, SigmaPattern::parse(sigma)), resolve(f));
        },
        py::arg("d"), py::arg("n"), py::arg("sigma"), py::arg("f"));

  m.def("hyper_coeffs",
        [](const py::object& f, int n, const std::string& sigma) {
          return coeff_dict(hyper_coeffs(resolve(f), n, SigmaPattern::parse(sigma)));
        },
        py::arg("f"), py::arg("n"), py::arg("sigma") = "EEE",
        "Hyperinterpolation coefficients {(a1, a2, a3): c} computed with the FFT pipeline.");
  m.def("hyper_eval",
        [](const py::object& f, int n, const std::string& sigma, const py::array_t<double, py::array::c_style | py::array::forcecast>& points) {
          const CoeffTensor c = hyper_coeffs(resolve(f), n, SigmaPattern::parse(sigma));
          auto p = points.unchecked<2>();
          if (p.shape(1) != 3) throw std::invalid_argument("points must have shape (M, 3)");
          std::vector<double> out(static_cast<std::size_t>(p.shape(0)));
          for (py::ssize_t i = 0; i < p.shape(0); ++i) {
            const double x[3] = {p(i, 0), p(i, 1), p(i, 2)};
            out[static_cast<std::size_t>(i)] = hyper_eval(c, x);
          }
          return vector_array(out);
        },
        py::arg("f"), py::arg("n"), py::arg("sigma"), py::arg("points"));

  m.def("moment_1d", &moment_1d, py::arg("k"));
  m.def("cc_rule",
        [](int n, const std::string& sigma) {
          const CCRule r = cc_rule(n, SigmaPattern::parse(sigma));
          return py::make_tuple(points_array(r.points), vector_array(r.lambda));
        },
        py::arg("n"), py::arg("sigma") = "EEE");
  m.def("cc_integrate",
        [](const py::object& f, int n, const std::string& sigma) {
          return cc_integrate(resolve(f), n, SigmaPattern::parse(sigma));
        },
        py::arg("f"), py::arg("n"), py::arg("sigma") = "EEE");
  m.def("sum_abs_weights",
        [](int n, const std::string& sigma) { return sum_abs_weights(cc_rule(n, SigmaPattern::parse(sigma))); },
        py::arg("n"), py::arg("sigma") = "EEE");

  m.def("test_function_names", [] {
    std::vector<std::string> out;
    for (const auto& f : test_suite()) out.push_back(f.name);
    return out;
  });
  m.def("evaluate_test_function",
        [](const std::string& name, double x1, double x2, double x3) {
          const double x[3] = {x1, x2, x3};
          return test_function(name)(x);
        });
  m.def("reference_integral",
        [](const std::string& name, const std::string& measure) {
          if (measure != "chebyshev" && measure != "lebesgue") {
            throw std::invalid_argument("measure must be 'chebyshev' or 'lebesgue'");
          }
          const ReferenceValue r = reference_integral(
              test_function(name), measure == "lebesgue" ? Measure::lebesgue : Measure::chebyshev_normalized);
          return py::make_tuple(r.value, r.agreement, r.converged);
        },
        py::arg("name"), py::arg("measure"));

  m.def("run_benchmark",
        [](std::vector<std::string> functions, std::vector<std::string> rules, int n_min, int n_max,
           int stride) {
          BenchConfig cfg{std::move(functions), std::move(rules), n_min, n_max, stride, std::nullopt};
          py::list out;
          for (const auto& r : run_benchmark(cfg)) {
            py::dict d;
            d["rule"] = r.rule_name;
            d["measure"] = std::string(to_string(r.measure));
            d["n"] = r.n;
            d["nodes"] = r.num_nodes;
            d["function"] = r.function_id;
            d["approx"] = r.approx;
            d["reference"] = r.reference;
            d["rel_error"] = r.relative_error;
            out.append(d);
          }
          return out;
        },
        py::arg("functions"), py::arg("rules"), py::arg("n_min"), py::arg("n_max"), py::arg("stride") = 1);

  m.def("cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out;
          std::ostringstream err;
          const int code = cli_main(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line tool; returns (exit_code, stdout, stderr).");
}
