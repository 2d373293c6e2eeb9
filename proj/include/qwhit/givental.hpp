// Classical gl(n)-Whittaker function via recursive Givental quadrature.
//
// psi^{gl_1}(x) = e^{i lambda_1 x}; each further level integrates the kernel
//   Q(x_up; x_lo; lambda) = exp{ i lambda (sum x_up - sum x_lo)
//                                - sum_i (e^{x_lo,i - x_up,i} + e^{x_up,i+1 - x_lo,i}) }
// against the previous level over real boxes [c-R, c+R] centered at the
// midpoints of neighboring upper coordinates. Intermediate levels are
// tabulated on uniform grids and sampled with cubic interpolation.
#pragma once

#include <complex>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qwhit {

struct QuadratureConfig {
  double half_width = 12.0;
  int nodes_per_axis = 0;  // 0: rank-based default (257 for gl_1/gl_2, 129 gl_3, 33 gl_4)
  enum class Scheme { gauss10, simpson };
  Scheme scheme = Scheme::gauss10;
  // Relative disagreement between the N and N/2 resolutions that counts as
  // non-convergence.
  double tolerance = 0.05;
};

int default_nodes_per_axis(int rank);

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::complex<double> givental_kernel(std::span<const double> x_upper,
                                     std::span<const double> x_lower, double lambda);

/// Uniform rectangular grid of complex values with separable cubic
/// (Catmull-Rom) interpolation; immutable after fill.
class TabulatedFunction {
 public:
  struct Axis {
    double lo = 0;
    double step = 0;
    int count = 0;
  };

  TabulatedFunction() = default;
  TabulatedFunction(std::vector<Axis> axes,
                    const std::function<std::complex<double>(std::span<const double>)>& fn);

  int dim() const { return static_cast<int>(axes_.size()); }
  const std::vector<Axis>& axes() const { return axes_; }
  std::complex<double> eval_cubic(std::span<const double> pt) const;
  std::complex<double> at_flat(std::size_t i) const { return values_[i]; }

 private:
  std::vector<Axis> axes_;
  std::vector<std::complex<double>> values_;
};

struct WhittakerResult {
  std::complex<double> value{0, 0};
  std::complex<double> value_coarse{0, 0};
  double error_estimate = 0;  // |value - value_coarse|
};

/// Evaluates psi^{gl_n}(x) for rank n = x.size() <= 4 and real lambda, with a
/// two-resolution error estimate. Throws ConvergenceError when the estimates
/// disagree beyond cfg.tolerance relative.
WhittakerResult whittaker_classical(const std::vector<double>& x,
                                    const std::vector<double>& lambda,
                                    const QuadratureConfig& cfg = {});

struct ClassicalEigenReport {
  double h = 0;
  double abs_psi = 0;
  double residual_h1 = 0;  // |H_1 psi - i (sum lambda) psi| / |psi|
  double residual_h2 = 0;  // |H_2 psi - (1/2 sum lambda^2) psi| / |psi|
};

/// Central-difference residuals of the Toda Hamiltonians
/// H_1 = sum d/dx_i and H_2 = -1/2 sum d^2/dx_i^2 + sum e^{x_{i+1}-x_i} on the
/// quadrature-evaluated psi. Throws when |psi(x)| < 1e-12.
ClassicalEigenReport classical_eigencheck(const std::vector<double>& x,
                                          const std::vector<double>& lambda, double h,
                                          const QuadratureConfig& cfg = {});

}  // namespace qwhit
