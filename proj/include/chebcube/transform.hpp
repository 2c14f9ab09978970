#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace chebcube {

/// Cubic array of extent (nu + 1)^3, row-major: index (i, j, k) with k
/// fastest. Axis 0 carries the first coordinate.
class GridArray {
 public:
  GridArray() = default;
  explicit GridArray(int nu);
  GridArray(int nu, std::vector<double> values);

  [[nodiscard]] int nu() const noexcept { return nu_; }
  [[nodiscard]] std::size_t extent() const noexcept { return static_cast<std::size_t>(nu_) + 1; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }

  [[nodiscard]] double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return values_[(i * extent() + j) * extent() + k];
  }
  [[nodiscard]] double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return values_[(i * extent() + j) * extent() + k];
  }

  [[nodiscard]] std::span<double> values() noexcept { return values_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

 private:
  int nu_ = 0;
  std::vector<double> values_;
};

/// G_a = sum_{k=0}^{nu} g_k cos(k a pi / nu), a = 0..nu, with no halving of
/// the end terms. Computed from a length-2nu real FFT of the even extension.
[[nodiscard]] std::vector<double> cosine_sum_1d(std::span<const double> g, int nu);

/// O(nu^2) reference summation of the same transform.
[[nodiscard]] std::vector<double> cosine_sum_1d_direct(std::span<const double> g, int nu);

/// Applies cosine_sum_1d along all three axes; output axis s carries alpha_s.
[[nodiscard]] GridArray cosine_sum_3d(const GridArray& values);

/// Triple-loop reference for cosine_sum_3d.
[[nodiscard]] GridArray cosine_sum_3d_direct(const GridArray& values);

}  // namespace chebcube
