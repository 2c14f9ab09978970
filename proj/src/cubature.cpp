#include "chebcube/cubature.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace chebcube {

namespace {

void validate(int d, int n, const SigmaPattern& sigma) {
  if (d < 1) throw std::invalid_argument("cubature dimension must be >= 1");
  if (n < 2) throw std::invalid_argument("sigma rule parameter n must be >= 2");
  if (sigma.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("sigma pattern " + sigma.str() + " does not have length " +
                                std::to_string(d));
  }
}

// Number of even (j = 0, 2, ...) and odd (j = 1, 3, ...) indices in 0..n.
std::size_t half_size(Parity p, int n) {
  return p == Parity::even ? static_cast<std::size_t>(n / 2 + 1)
                           : static_cast<std::size_t>((n + 1) / 2);
}

// Appends the Cartesian product of the parity halves selected by `sigma`.
void append_product(int n, const SigmaPattern& sigma, std::vector<int>& out) {
  const std::size_t d = sigma.size();
  std::vector<int> first(d);
  std::vector<int> idx(d);
  for (std::size_t s = 0; s < d; ++s) {
    first[s] = sigma[s] == Parity::even ? 0 : 1;
    idx[s] = first[s];
  }
  while (true) {
    out.insert(out.end(), idx.begin(), idx.end());
    std::size_t s = d;
    while (s > 0) {
      --s;
      idx[s] += 2;
      if (idx[s] <= n) break;
      idx[s] = first[s];
      if (s == 0) return;
    }
  }
}

}  // namespace

std::string_view to_string(Measure m) noexcept {
  return m == Measure::chebyshev_normalized ? "chebyshev" : "lebesgue";
}

SigmaPattern::SigmaPattern(std::vector<Parity> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("sigma pattern must not be empty");
}

SigmaPattern SigmaPattern::parse(std::string_view text) {
  std::vector<Parity> entries;
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'E': entries.push_back(Parity::even); break;
      case 'O': entries.push_back(Parity::odd); break;
      default:
        throw std::invalid_argument("invalid sigma pattern '" + std::string(text) +
                                    "': letters must be E or O");
    }
  }
  if (entries.empty()) throw std::invalid_argument("sigma pattern must not be empty");
  return SigmaPattern(std::move(entries));
}

std::string SigmaPattern::str() const {
  std::string s;
  for (Parity p : entries_) s.push_back(p == Parity::even ? 'E' : 'O');
  return s;
}

SigmaPattern flip(const SigmaPattern& sigma) {
  std::vector<Parity> out;
  out.reserve(sigma.size());
  for (Parity p : sigma.entries()) out.push_back(p == Parity::even ? Parity::odd : Parity::even);
  return SigmaPattern(std::move(out));
}

std::vector<SigmaPattern> representative_patterns(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (d > 30) throw std::invalid_argument("dimension too large to enumerate patterns");
  const unsigned count = 1u << (d - 1);
  std::vector<SigmaPattern> out;
  out.reserve(count);
  for (unsigned code = 0; code < count; ++code) {
    std::vector<Parity> entries(d, Parity::even);
    for (int s = 1; s < d; ++s) {
      if ((code >> (d - 1 - s)) & 1u) entries[s] = Parity::odd;
    }
    out.emplace_back(std::move(entries));
  }
  return out;
}

std::vector<int> sigma_grid_indices(int d, int n, const SigmaPattern& sigma) {
  validate(d, n, sigma);
  std::vector<int> out;
  out.reserve(node_count(d, n, sigma) * d);
  append_product(n, sigma, out);
  const std::size_t first_grid = out.size();
  append_product(n, flip(sigma), out);
  // The two grids differ in the parity of every coordinate, so they cannot share a node.
  for (std::size_t i = first_grid; i < out.size(); i += d) {
    const bool first_is_even = out[i] % 2 == 0;
    if (first_is_even == (sigma[0] == Parity::even)) {
      throw std::logic_error("sigma and flipped grids overlap");
    }
  }
  return out;
}

CubatureRule build_sigma_rule(int d, int n, const SigmaPattern& sigma) {
  const std::vector<int> indices = sigma_grid_indices(d, n, sigma);
  const std::size_t count = indices.size() / d;

  CubatureRule rule;
  rule.name = "cheb_" + sigma.str();
  rule.dim = d;
  rule.degree_param = n;
  rule.measure = Measure::chebyshev_normalized;
  rule.sigma = sigma;
  rule.coords.resize(indices.size());
  rule.weights.resize(count);

  const double scale = std::ldexp(1.0, d - 1);
  for (std::size_t i = 0; i < count; ++i) {
    double w = scale;
    for (int s = 0; s < d; ++s) {
      const int j = indices[i * d + s];
      rule.coords[i * d + s] = lobatto_node(j, n);
      w *= (j == 0 || j == n) ? 0.5 / n : 1.0 / n;
    }
    rule.weights[i] = w;
  }
  return rule;
}

std::size_t node_count(int d, int n, const SigmaPattern& sigma) {
  validate(d, n, sigma);
  std::size_t direct = 1;
  std::size_t flipped = 1;
  for (Parity p : sigma.entries()) {
    direct *= half_size(p, n);
    flipped *= half_size(p == Parity::even ? Parity::odd : Parity::even, n);
  }
  return direct + flipped;
}

double integrate(const CubatureRule& rule, const PointFunction& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) sum += rule.weights[i] * f(rule.node(i));
  return sum;
}

CubatureRule tensor_product(std::string name, std::span<const double> nodes,
                            std::span<const double> weights, int d, int degree_param,
                            Measure measure) {
  if (d < 1) throw std::invalid_argument("tensor_product: dimension must be >= 1");
  if (nodes.size() != weights.size() || nodes.empty()) {
    throw std::invalid_argument("tensor_product: nodes and weights must be non-empty and equal length");
  }
  const std::size_t m = nodes.size();
  std::size_t count = 1;
  for (int s = 0; s < d; ++s) count *= m;

  CubatureRule rule;
  rule.name = std::move(name);
  rule.dim = d;
  rule.degree_param = degree_param;
  rule.measure = measure;
  rule.coords.resize(count * d);
  rule.weights.resize(count);

  std::vector<std::size_t> idx(d, 0);
  for (std::size_t i = 0; i < count; ++i) {
    double w = 1.0;
    for (int s = 0; s < d; ++s) {
      rule.coords[i * d + s] = nodes[idx[s]];
      w *= weights[idx[s]];
    }
    rule.weights[i] = w;
    for (int s = d - 1; s >= 0; --s) {
      if (++idx[s] < m) break;
      idx[s] = 0;
    }
  }
  return rule;
}

}  // namespace chebcube
