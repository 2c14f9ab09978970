#include "chebcube/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace chebcube {

namespace {

// The FFTW planner is not reentrant; plan execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

// Real-to-complex plan of length 2 nu with its own aligned buffers.
class EvenExtensionPlan {
 public:
  explicit EvenExtensionPlan(int nu) : nu_(nu) {
    const std::size_t len = 2 * static_cast<std::size_t>(nu);
    in_ = static_cast<double*>(fftw_malloc(sizeof(double) * len));
    out_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (len / 2 + 1)));
    if (in_ == nullptr || out_ == nullptr) {
      release();
      throw std::bad_alloc();
    }
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(len), in_, out_, FFTW_ESTIMATE);
    if (plan_ == nullptr) {
      release();
      throw std::runtime_error("FFTW failed to create a plan of length " + std::to_string(len));
    }
  }

  EvenExtensionPlan(const EvenExtensionPlan&) = delete;
  EvenExtensionPlan& operator=(const EvenExtensionPlan&) = delete;

  ~EvenExtensionPlan() { release(); }

  // out[a] = sum_{k=0}^{nu} in[k * stride] cos(k a pi / nu), a = 0..nu.
  void run(const double* in, std::size_t in_stride, double* out, std::size_t out_stride) {
    const std::size_t nu = static_cast<std::size_t>(nu_);
    for (std::size_t k = 0; k <= nu; ++k) in_[k] = in[k * in_stride];
    for (std::size_t k = 1; k < nu; ++k) in_[2 * nu - k] = in_[k];
    fftw_execute(plan_);
    // Re(FFT) counts interior terms twice and the end terms once.
    const double g0 = in_[0];
    const double gnu = in_[nu];
    for (std::size_t a = 0; a <= nu; ++a) {
      const double end_terms = g0 + (a % 2 == 0 ? gnu : -gnu);
      out[a * out_stride] = 0.5 * (out_[a][0] + end_terms);
    }
  }

 private:
  void release() noexcept {
    if (plan_ != nullptr) {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan_);
      plan_ = nullptr;
    }
    if (in_ != nullptr) fftw_free(in_);
    if (out_ != nullptr) fftw_free(out_);
    in_ = nullptr;
    out_ = nullptr;
  }

  int nu_;
  double* in_ = nullptr;
  fftw_complex* out_ = nullptr;
  fftw_plan plan_ = nullptr;
};

EvenExtensionPlan& plan_for(int nu) {
  thread_local std::unordered_map<int, std::unique_ptr<EvenExtensionPlan>> cache;
  auto& slot = cache[nu];
  if (!slot) slot = std::make_unique<EvenExtensionPlan>(nu);
  return *slot;
}

void check_length(std::span<const double> g, int nu) {
  if (nu < 1) throw std::invalid_argument("cosine sum: nu must be >= 1");
  if (g.size() != static_cast<std::size_t>(nu) + 1) {
    throw std::invalid_argument("cosine sum: expected " + std::to_string(nu + 1) +
                                " samples, got " + std::to_string(g.size()));
  }
}

}  // namespace

GridArray::GridArray(int nu) : nu_(nu) {
  if (nu < 1) throw std::invalid_argument("GridArray: nu must be >= 1");
  values_.assign(extent() * extent() * extent(), 0.0);
}

GridArray::GridArray(int nu, std::vector<double> values) : nu_(nu), values_(std::move(values)) {
  if (nu < 1) throw std::invalid_argument("GridArray: nu must be >= 1");
  if (values_.size() != extent() * extent() * extent()) {
    throw std::invalid_argument("GridArray: value count does not match (nu + 1)^3");
  }
}

std::vector<double> cosine_sum_1d(std::span<const double> g, int nu) {
  check_length(g, nu);
  std::vector<double> out(g.size());
  plan_for(nu).run(g.data(), 1, out.data(), 1);
  return out;
}

std::vector<double> cosine_sum_1d_direct(std::span<const double> g, int nu) {
  check_length(g, nu);
  std::vector<double> out(g.size(), 0.0);
  for (int a = 0; a <= nu; ++a) {
    double sum = 0.0;
    for (int k = 0; k <= nu; ++k) {
      // Reduce k*a mod 2nu so the cosine argument stays in [0, 2pi).
      const long long r = (static_cast<long long>(k) * a) % (2LL * nu);
      sum += g[k] * std::cos(static_cast<double>(r) * std::numbers::pi / nu);
    }
    out[a] = sum;
  }
  return out;
}

GridArray cosine_sum_3d(const GridArray& values) {
  const int nu = values.nu();
  const std::size_t m = values.extent();
  GridArray out = values;
  double* data = out.values().data();
  EvenExtensionPlan& plan = plan_for(nu);
  // Each line is transformed in place; the plan copies its input before writing.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double* line = data + (i * m + j) * m;
      plan.run(line, 1, line, 1);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      double* line = data + i * m * m + k;
      plan.run(line, m, line, m);
    }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      double* line = data + j * m + k;
      plan.run(line, m * m, line, m * m);
    }
  return out;
}

GridArray cosine_sum_3d_direct(const GridArray& values) {
  const int nu = values.nu();
  const std::size_t m = values.extent();
  std::vector<double> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t k = 0; k < m; ++k) {
      const long long r = static_cast<long long>(a * k) % (2LL * nu);
      table[a * m + k] = std::cos(static_cast<double>(r) * std::numbers::pi / nu);
    }
  GridArray out(nu);
  for (std::size_t a1 = 0; a1 < m; ++a1)
    for (std::size_t a2 = 0; a2 < m; ++a2)
      for (std::size_t a3 = 0; a3 < m; ++a3) {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) {
            const double cij = table[a1 * m + i] * table[a2 * m + j];
            for (std::size_t k = 0; k < m; ++k) sum += values(i, j, k) * cij * table[a3 * m + k];
          }
        out(a1, a2, a3) = sum;
      }
  return out;
}

}  // namespace chebcube
