// Log-domain complex values and max-rescaled accumulation.
//
// Terms of the scaled pattern sums span hundreds of orders of magnitude at
// small eps, so sums are accumulated as exp(log_mag)*e^{i phase} relative to
// the running maximum log magnitude (complex log-sum-exp).
#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace qwhit {

struct LogComplex {
  // value = exp(log_mag) * exp(i*phase); log_mag == -inf encodes exact zero.
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;

  static LogComplex zero() { return {}; }
  static LogComplex from(std::complex<double> v) {
    if (v == std::complex<double>(0.0, 0.0)) return zero();
    return {std::log(std::abs(v)), std::arg(v)};
  }
  static LogComplex from_polar(double lm, double ph) { return {lm, ph}; }

  bool is_zero() const { return log_mag == -std::numeric_limits<double>::infinity(); }
  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    return std::polar(std::exp(log_mag), phase);
  }

  friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return {a.log_mag + b.log_mag, a.phase + b.phase};
  }
};

/// Max-rescaled complex accumulator. Deterministic: the result depends only
/// on the order of add() calls, which callers keep fixed.
class LogAccumulator {
 public:
  void add(double log_mag, double phase) {
    if (log_mag == -std::numeric_limits<double>::infinity()) return;
    if (log_mag > max_log_) {
      if (max_log_ != -std::numeric_limits<double>::infinity())
        acc_ *= std::exp(max_log_ - log_mag);
      max_log_ = log_mag;
    }
    acc_ += std::polar(std::exp(log_mag - max_log_), phase);
  }
  void add(const LogComplex& v) { add(v.log_mag, v.phase); }

  /// Merges another accumulator (a finished chunk) into this one.
  void merge(const LogAccumulator& o) {
    if (o.empty()) return;
    if (o.max_log_ > max_log_) {
      if (max_log_ != -std::numeric_limits<double>::infinity())
        acc_ *= std::exp(max_log_ - o.max_log_);
      max_log_ = o.max_log_;
      acc_ += o.acc_;
    } else {
      acc_ += o.acc_ * std::exp(o.max_log_ - max_log_);
    }
  }

  bool empty() const { return max_log_ == -std::numeric_limits<double>::infinity(); }

  LogComplex value() const {
    if (empty() || acc_ == std::complex<double>(0.0, 0.0)) return LogComplex::zero();
    return {max_log_ + std::log(std::abs(acc_)), std::arg(acc_)};
  }

 private:
  double max_log_ = -std::numeric_limits<double>::infinity();
  std::complex<double> acc_{0.0, 0.0};
};

}  // namespace qwhit
