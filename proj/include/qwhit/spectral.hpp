// Spectral parameters z_1..z_n: formal, exact rational-complex values, or
// unit-circle values z_k = e^{i eps lambda_k}.
#pragma once

#include <qwhit/rational.hpp>

#include <stdexcept>
#include <vector>

namespace qwhit {

struct SpectralParams {
  enum class Mode { formal, exact, unit_circle };

  Mode mode = Mode::formal;
  std::vector<RatComplex> values;  // exact mode
  std::vector<double> lambdas;     // unit_circle mode: z_k = e^{i eps lambda_k}

  static SpectralParams formal() { return {}; }
  static SpectralParams exact(std::vector<RatComplex> z) {
    SpectralParams s;
    s.mode = Mode::exact;
    s.values = std::move(z);
    return s;
  }
  static SpectralParams unit_circle(std::vector<double> lambdas) {
    SpectralParams s;
    s.mode = Mode::unit_circle;
    s.lambdas = std::move(lambdas);
    return s;
  }

  int rank() const {
    switch (mode) {
      case Mode::exact: return static_cast<int>(values.size());
      case Mode::unit_circle: return static_cast<int>(lambdas.size());
      default: return 0;  // formal: rank comes from the weight
    }
  }
};

/// q specification: formal (truncated series), exact rational in (0,1) for
/// float-free evaluation, or q = e^{-eps}.
struct QSpec {
  enum class Kind { formal, rational, exponential };

  Kind kind = Kind::formal;
  int truncation_order = 40;
  Rat q_rational{0};
  double eps = 0.0;

  static QSpec formal(int truncation_order) {
    QSpec s;
    s.kind = Kind::formal;
    s.truncation_order = truncation_order;
    return s;
  }
  static QSpec rational(Rat q) {
    QSpec s;
    s.kind = Kind::rational;
    s.q_rational = std::move(q);
    return s;
  }
  static QSpec exponential(double eps) {
    if (!(eps > 0)) throw std::invalid_argument("QSpec: eps must be positive (q in (0,1))");
    QSpec s;
    s.kind = Kind::exponential;
    s.eps = eps;
    return s;
  }
};

}  // namespace qwhit
