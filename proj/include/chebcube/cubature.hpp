#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chebcube/cheb1d.hpp"

namespace chebcube {

/// Integrand on the d-cube; receives one point of length d.
using PointFunction = std::function<double(std::span<const double>)>;

enum class Measure { chebyshev_normalized, lebesgue };

[[nodiscard]] std::string_view to_string(Measure m) noexcept;

/// A word over {E, O}, one letter per coordinate.
class SigmaPattern {
 public:
  SigmaPattern() = default;
  explicit SigmaPattern(std::vector<Parity> entries);

  /// Parses a string such as "EEO"; throws std::invalid_argument on anything
  /// other than a non-empty sequence of 'E'/'O' (case-insensitive).
  [[nodiscard]] static SigmaPattern parse(std::string_view text);

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] Parity operator[](std::size_t i) const { return entries_[i]; }
  [[nodiscard]] const std::vector<Parity>& entries() const noexcept { return entries_; }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const SigmaPattern&, const SigmaPattern&) = default;

 private:
  std::vector<Parity> entries_;
};

[[nodiscard]] SigmaPattern flip(const SigmaPattern& sigma);

/// One pattern per {sigma, flip(sigma)} class, each starting with E,
/// enumerated with the remaining letters counted in binary (E = 0, O = 1).
[[nodiscard]] std::vector<SigmaPattern> representative_patterns(int d);

/// Node/weight set on [-1, 1]^d. Coordinates are stored row-major.
struct CubatureRule {
  std::string name;
  int dim = 0;
  int degree_param = 0;
  Measure measure = Measure::chebyshev_normalized;
  std::vector<double> coords;
  std::vector<double> weights;
  std::optional<SigmaPattern> sigma;

  [[nodiscard]] std::size_t size() const noexcept { return weights.size(); }
  [[nodiscard]] std::span<const double> node(std::size_t i) const {
    return {coords.data() + i * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)};
  }
};

/// Lobatto indices of every node of the sigma rule: the sigma grid first,
/// then the flipped grid, each in lexicographic order (first coordinate
/// slowest). Row-major, d entries per node.
[[nodiscard]] std::vector<int> sigma_grid_indices(int d, int n, const SigmaPattern& sigma);

/// The degree 2n-1 rule 2^{d-1} (I^sigma + I^flip(sigma)) for the
/// normalized product Chebyshev measure.
[[nodiscard]] CubatureRule build_sigma_rule(int d, int n, const SigmaPattern& sigma);

[[nodiscard]] std::size_t node_count(int d, int n, const SigmaPattern& sigma);

[[nodiscard]] double integrate(const CubatureRule& rule, const PointFunction& f);

/// d-fold tensor product of a 1-D rule.
[[nodiscard]] CubatureRule tensor_product(std::string name, std::span<const double> nodes,
                                          std::span<const double> weights, int d, int degree_param,
                                          Measure measure);

}  // namespace chebcube
