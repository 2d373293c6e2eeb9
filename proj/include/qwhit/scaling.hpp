// The q -> 1 scaling machinery: q = e^{-eps}, m(eps) = -[ln(eps)/eps],
// A(eps) = -pi^2/(6 eps) - ln(eps/2pi)/2, weight quantization
// p_k = (l+2-2k) m(eps) + x_k/eps, q-factorial asymptotics f_alpha, the
// Dedekind-eta modular check, the scaled limit of the pattern sum, and the
// finite-difference expansion checks of the q-Toda Hamiltonians.
#pragma once

#include <qwhit/givental.hpp>
#include <qwhit/logcomplex.hpp>
#include <qwhit/qfactorial.hpp>

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace qwhit {

/// Convention for the integer part in m(eps); floor is the library default,
/// truncation toward zero is exposed for sensitivity checks only.
enum class IntPart { floor_int, trunc_int };

int m_epsilon(double eps, IntPart conv = IntPart::floor_int);
double A_epsilon(double eps);

struct ScalingContext {
  double eps = 0;
  double q = 0;  // e^{-eps}
  int m = 0;
  double A = 0;
  int rank = 0;
  static ScalingContext make(double eps, int rank, IntPart conv = IntPart::floor_int);
};

/// Lattice image of a real coordinate vector and the exact preimage actually
/// used. |effective_x - requested_x| <= eps/2 componentwise.
struct QuantizedPoint {
  std::vector<double> requested;
  std::vector<int> p;
  std::vector<double> effective;
  bool dominant = false;
};

QuantizedPoint quantize_weight(const std::vector<double>& x, double eps,
                               IntPart conv = IntPart::floor_int);

struct FAlphaValue {
  int n = 0;           // rounded q-factorial argument
  double log_value = 0;  // ln f_alpha(y, eps)
  double residual = 0;   // ln f1 - A - e^{-y}  (alpha=1)  /  ln f2 - A  (alpha=2)
};

/// f_alpha(y, eps) = (y/eps + alpha m(eps))_q!, alpha in {1,2}, via the
/// cached log prefix sums; throws when the argument rounds negative.
FAlphaValue f_alpha(double y, double eps, int alpha, IntPart conv = IntPart::floor_int);

/// Relative defect of the Dedekind-eta modular identity
///   prod(1-e^{-n eps}) = sqrt(2pi/eps) e^{eps/24} e^{-pi^2/(6 eps)}
///                        prod(1-e^{-4pi^2 n/eps}),
/// with both products truncated once factors are within 1e-17 of 1.
double eta_modular_residual(double eps);

struct ScaledPsiResult {
  std::complex<double> value{0, 0};
  LogComplex log_value = LogComplex::zero();
  QuantizedPoint point;
};

/// eps^{l(l+1)/2} e^{l(l+3)/2 A(eps)} Psi^{gl_{l+1}}_{z}(p) with
/// z_k = e^{i eps lambda_k} and p the quantized weight; exact zero (with the
/// dominance flag down) when quantization leaves the dominant cone.
ScaledPsiResult scaled_psi(const std::vector<double>& x, const std::vector<double>& lambda,
                           double eps, IntPart conv = IntPart::floor_int);

struct LimitRow {
  double eps = 0;
  int m = 0;
  QuantizedPoint point;
  std::complex<double> q_value{0, 0};
  std::complex<double> classical{0, 0};
  double abs_err = 0;
  double rel_err = 0;
};

/// One row per eps: scaled q-value vs the classical quadrature value at the
/// effective x (recomputed per row to remove quantization bias).
std::vector<LimitRow> limit_scan(const std::vector<double>& x, const std::vector<double>& lambda,
                                 const std::vector<double>& eps_list,
                                 const QuadratureConfig& cfg = {},
                                 IntPart conv = IntPart::floor_int);

/// Smooth test function with the analytic pieces the expansion checks need.
struct SmoothTestFunction {
  std::function<double(std::span<const double>)> value;
  std::function<double(std::span<const double>)> sum_dx;   // sum_i dF/dx_i
  std::function<double(std::span<const double>)> sum_dxx;  // sum_i d2F/dx_i^2
  static SmoothTestFunction gaussian();                    // F = e^{-|x|^2/2}
};

struct HamLimitResiduals {
  double residual1 = 0;  // |(H_1^q F - (l+1) F)/eps - H_1^cl F|
  double residual2 = 0;  // |-(H_1^q - H_{l+1}^q - l + (H_{l+1}^q-1)^2/2) F / eps^2 - H_2^cl F|
};

/// Finite-eps check of the Hamiltonian expansion: the q-Toda operators act on
/// F through the quantized coordinates (a unit shift of p_i is an eps shift
/// of x_i), the classical operators act analytically.
HamLimitResiduals hamiltonian_limit_residual(const std::vector<double>& x, double eps,
                                             const SmoothTestFunction& f = SmoothTestFunction::gaussian(),
                                             IntPart conv = IntPart::floor_int);

}  // namespace qwhit
