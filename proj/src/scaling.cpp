#include <qwhit/scaling.hpp>

#include <qwhit/qwhittaker.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qwhit {

namespace {
constexpr double kPi = std::numbers::pi;

void require_pos_eps(double eps) {
  if (!(eps > 0)) throw std::domain_error("eps must be positive");
}
}  // namespace

int m_epsilon(double eps, IntPart conv) {
  require_pos_eps(eps);
  double v = std::log(eps) / eps;
  double ip = (conv == IntPart::floor_int) ? std::floor(v) : std::trunc(v);
  return -static_cast<int>(ip);
}

double A_epsilon(double eps) {
  require_pos_eps(eps);
  return -kPi * kPi / (6 * eps) - 0.5 * std::log(eps / (2 * kPi));
}

ScalingContext ScalingContext::make(double eps, int rank, IntPart conv) {
  require_pos_eps(eps);
  if (rank < 1) throw std::invalid_argument("ScalingContext: rank must be >= 1");
  return {eps, std::exp(-eps), m_epsilon(eps, conv), A_epsilon(eps), rank};
}

QuantizedPoint quantize_weight(const std::vector<double>& x, double eps, IntPart conv) {
  require_pos_eps(eps);
  int n = static_cast<int>(x.size());
  int l = n - 1;
  int m = m_epsilon(eps, conv);
  QuantizedPoint out;
  out.requested = x;
  out.p.resize(x.size());
  out.effective.resize(x.size());
  for (int k = 0; k < n; ++k) {
    int shift = (l + 2 - 2 * (k + 1)) * m;  // (l+2-2k) m in 1-based k
    out.p[static_cast<size_t>(k)] =
        static_cast<int>(std::llround(shift + x[static_cast<size_t>(k)] / eps));
    out.effective[static_cast<size_t>(k)] = eps * (out.p[static_cast<size_t>(k)] - shift);
  }
  out.dominant = is_dominant(out.p);
  return out;
}

FAlphaValue f_alpha(double y, double eps, int alpha, IntPart conv) {
  require_pos_eps(eps);
  if (alpha != 1 && alpha != 2) throw std::invalid_argument("f_alpha: alpha must be 1 or 2");
  long n = std::llround(y / eps + alpha * m_epsilon(eps, conv));
  if (n < 0) throw std::domain_error("f_alpha: argument rounds to a negative integer");
  QFactorialLogTable table(eps);
  FAlphaValue out;
  out.n = static_cast<int>(n);
  out.log_value = table(out.n);
  double a = A_epsilon(eps);
  out.residual = (alpha == 1) ? out.log_value - a - std::exp(-y) : out.log_value - a;
  return out;
}

double eta_modular_residual(double eps) {
  require_pos_eps(eps);
  auto product = [](double s) {
    double out = 1.0;
    for (int n = 1;; ++n) {
      double t = std::exp(-n * s);
      out *= -std::expm1(-n * s);
      if (t < 1e-17) break;
    }
    return out;
  };
  double lhs = product(eps);
  double pref = std::exp(eps / 24 - kPi * kPi / (6 * eps) + 0.5 * std::log(2 * kPi / eps));
  double rhs = pref * product(4 * kPi * kPi / eps);
  return std::abs(lhs - rhs) / lhs;
}

ScaledPsiResult scaled_psi(const std::vector<double>& x, const std::vector<double>& lambda,
                           double eps, IntPart conv) {
  if (x.size() != lambda.size()) throw std::invalid_argument("scaled_psi: rank mismatch");
  if (x.empty()) throw std::invalid_argument("scaled_psi: empty coordinates");
  ScaledPsiResult out;
  out.point = quantize_weight(x, eps, conv);
  if (!out.point.dominant) return out;  // exact zero, flag carries the warning

  int l = static_cast<int>(x.size()) - 1;
  double pref_log = 0.5 * l * (l + 1) * std::log(eps) + 0.5 * l * (l + 3) * A_epsilon(eps);
  LogComplex psi = psi_log(out.point.p, lambda, eps);
  out.log_value = LogComplex::from_polar(pref_log, 0.0) * psi;
  out.value = out.log_value.to_complex();
  if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
    throw std::overflow_error("scaled_psi: scaled value exceeds double range");
  return out;
}

std::vector<LimitRow> limit_scan(const std::vector<double>& x, const std::vector<double>& lambda,
                                 const std::vector<double>& eps_list, const QuadratureConfig& cfg,
                                 IntPart conv) {
  if (eps_list.empty()) throw std::invalid_argument("limit_scan: empty eps list");
  for (size_t i = 0; i < eps_list.size(); ++i) {
    require_pos_eps(eps_list[i]);
    if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
      throw std::invalid_argument("limit_scan: eps list must be strictly decreasing");
  }
  std::vector<LimitRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) {
    LimitRow row;
    row.eps = eps;
    row.m = m_epsilon(eps, conv);
    ScaledPsiResult sp = scaled_psi(x, lambda, eps, conv);
    row.point = sp.point;
    row.q_value = sp.value;
    row.classical = whittaker_classical(sp.point.effective, lambda, cfg).value;
    row.abs_err = std::abs(row.q_value - row.classical);
    double denom = std::abs(row.classical);
    row.rel_err = denom > 0 ? row.abs_err / denom : std::numeric_limits<double>::infinity();
    rows.push_back(std::move(row));
  }
  return rows;
}

SmoothTestFunction SmoothTestFunction::gaussian() {
  SmoothTestFunction f;
  f.value = [](std::span<const double> v) {
    double s = 0;
    for (double t : v) s += t * t;
    return std::exp(-0.5 * s);
  };
  f.sum_dx = [](std::span<const double> v) {
    double s = 0, n2 = 0;
    for (double t : v) {
      s += -t;
      n2 += t * t;
    }
    return s * std::exp(-0.5 * n2);
  };
  f.sum_dxx = [](std::span<const double> v) {
    double s = 0, n2 = 0;
    for (double t : v) {
      s += t * t - 1;
      n2 += t * t;
    }
    return s * std::exp(-0.5 * n2);
  };
  return f;
}

HamLimitResiduals hamiltonian_limit_residual(const std::vector<double>& x, double eps,
                                             const SmoothTestFunction& f, IntPart conv) {
  require_pos_eps(eps);
  if (x.empty()) throw std::invalid_argument("hamiltonian_limit_residual: empty coordinates");
  int n = static_cast<int>(x.size());
  int l = n - 1;
  QuantizedPoint qp = quantize_weight(x, eps, conv);
  const std::vector<double>& xe = qp.effective;

  auto shifted = [&](int i) {  // x + eps e_i
    std::vector<double> v = xe;
    v[static_cast<size_t>(i)] += eps;
    return v;
  };
  auto shifted_all = [&](int times) {  // x + times * eps * (1,..,1)
    std::vector<double> v = xe;
    for (double& t : v) t += times * eps;
    return v;
  };

  double F0 = f.value(xe);
  double h1q = 0;
  for (int i = 0; i < l; ++i) {
    double coeff = -std::expm1(-eps * (qp.p[static_cast<size_t>(i)] -
                                       qp.p[static_cast<size_t>(i) + 1] + 1));
    h1q += coeff * f.value(shifted(i));
  }
  h1q += f.value(shifted(l));
  double hn1 = f.value(shifted_all(1));
  double hn2 = f.value(shifted_all(2));

  double pot = 0;
  for (int i = 0; i < l; ++i)
    pot += std::exp(xe[static_cast<size_t>(i) + 1] - xe[static_cast<size_t>(i)]);
  double h1cl = f.sum_dx(xe);
  double h2cl = -0.5 * f.sum_dxx(xe) + pot * F0;

  HamLimitResiduals out;
  out.residual1 = std::abs((h1q - (l + 1) * F0) / eps - h1cl);
  double sq = hn2 - 2 * hn1 + F0;  // (H_{l+1} - 1)^2 F, the operator applied twice
  out.residual2 = std::abs(-(h1q - hn1 - l * F0 + 0.5 * sq) / (eps * eps) - h2cl);
  return out;
}

}  // namespace qwhit
