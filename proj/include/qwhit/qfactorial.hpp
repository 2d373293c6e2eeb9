// q-factorials (n)_q! = (1-q)(1-q^2)...(1-q^n) in three arithmetic flavours:
// exact truncated series, exact values at rational q, and cached log values
// at q = e^{-eps} for the scaling scans.
#pragma once

#include <qwhit/qseries.hpp>

#include <map>
#include <vector>

namespace qwhit {

/// (n)_q! as an exact polynomial truncated at order T.
QSeries q_factorial_series(int n, int truncation_order = kDefaultTruncationOrder);

/// Gaussian binomial [m choose k]_q = (m)_q!/((k)_q!(m-k)_q!), computed by
/// exact polynomial division (throws logic_error on a nonzero remainder) and
/// checked to have nonnegative integer coefficients.
QSeries gaussian_binomial(int m, int k, int truncation_order = kDefaultTruncationOrder);

/// Exact values of (n)_q! at a fixed rational q, cached as prefix products.
class QFactorialValues {
 public:
  explicit QFactorialValues(Rat q) : q_(std::move(q)), vals_{Rat(1)}, qpow_{Rat(1)} {}

  const Rat& q() const { return q_; }
  const Rat& operator()(int n) {
    if (n < 0) throw std::domain_error("QFactorialValues: negative n");
    while (static_cast<int>(vals_.size()) <= n) {
      qpow_.push_back(qpow_.back() * q_);
      vals_.push_back(vals_.back() * (Rat(1) - qpow_.back()));
    }
    return vals_[n];
  }

 private:
  Rat q_;
  std::vector<Rat> vals_;
  std::vector<Rat> qpow_;  // q^k
};

/// ln (n)_q! at q = e^{-eps}, cached as prefix sums so that calls with
/// increasing n are amortized O(1). Build (or extend) before sharing across
/// workers; concurrent reads after that are lock-free.
class QFactorialLogTable {
 public:
  explicit QFactorialLogTable(double eps);

  double eps() const { return eps_; }
  /// Grows the prefix-sum cache to cover arguments up to n.
  void extend_to(int n);
  /// ln prod_{k=1..n} (1 - e^{-k eps}); extends the cache if needed.
  double operator()(int n);
  /// Read-only lookup; n must be covered by a prior extend_to.
  double at(int n) const { return prefix_[static_cast<size_t>(n)]; }
  int max_n() const { return static_cast<int>(prefix_.size()) - 1; }

 private:
  double eps_;
  std::vector<double> prefix_;
  double kahan_carry_ = 0.0;
};

/// Series inverses 1/(n)_q!, cached per n at a fixed truncation order.
class InverseQFactorialTable {
 public:
  explicit InverseQFactorialTable(int truncation_order = kDefaultTruncationOrder)
      : order_(truncation_order) {}

  int truncation_order() const { return order_; }
  const QSeries& operator()(int n);
  const QSeries& factorial(int n);

 private:
  int order_;
  std::map<int, QSeries> inv_;
  std::map<int, QSeries> fact_;
};

}  // namespace qwhit
