// Truncated power series in q with exact rational coefficients.
//
// A QSeries represents a series modulo q^{T+1}; T is the truncation order.
// Binary operations return the min of the operand orders, so truncation
// never silently gains precision.
#pragma once

#include <qwhit/rational.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace qwhit {

inline constexpr int kDefaultTruncationOrder = 40;

class QSeries {
 public:
  explicit QSeries(int truncation_order = kDefaultTruncationOrder)
      : order_(check_order(truncation_order)) {}
  QSeries(std::vector<Rat> coeffs, int truncation_order)
      : c_(std::move(coeffs)), order_(check_order(truncation_order)) {
    if (static_cast<int>(c_.size()) > order_ + 1) c_.resize(order_ + 1);
    trim();
  }

  static QSeries one(int truncation_order = kDefaultTruncationOrder) {
    return QSeries({Rat(1)}, truncation_order);
  }
  static QSeries constant(const Rat& v, int truncation_order = kDefaultTruncationOrder) {
    return QSeries({v}, truncation_order);
  }
  /// c * q^k
  static QSeries monomial(const Rat& c, int k, int truncation_order = kDefaultTruncationOrder) {
    std::vector<Rat> v(static_cast<size_t>(std::min(k, truncation_order + 1)) + 1);
    if (k <= truncation_order) v[k] = c;
    return QSeries(std::move(v), truncation_order);
  }

  int truncation_order() const { return order_; }
  /// Highest stored power (<= truncation order); -1 for the zero series.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  const Rat& coefficient(int k) const {
    static const Rat zero{0};
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[k];
  }

  bool is_zero() const { return c_.empty(); }
  bool is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.get_den() == 1; });
  }
  bool is_nonneg_integral() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rat& r) { return r.get_den() == 1 && r >= 0; });
  }

  QSeries& operator+=(const QSeries& o) {
    order_ = std::min(order_, o.order_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    clamp();
    trim();
    return *this;
  }
  QSeries& operator-=(const QSeries& o) {
    order_ = std::min(order_, o.order_);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    clamp();
    trim();
    return *this;
  }
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    int order = std::min(a.order_, b.order_);
    if (a.is_zero() || b.is_zero()) return QSeries(order);
    size_t n = std::min(a.c_.size() + b.c_.size() - 1, static_cast<size_t>(order) + 1);
    std::vector<Rat> out(n);
    for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return QSeries(std::move(out), order);
  }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  friend QSeries operator*(QSeries a, const Rat& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }

  /// Multiplicative inverse as a truncated series; requires nonzero constant term.
  QSeries reciprocal() const {
    if (is_zero() || c_[0] == 0)
      throw std::domain_error("QSeries::reciprocal: zero constant term");
    std::vector<Rat> b(static_cast<size_t>(order_) + 1);
    Rat inv0 = Rat(1) / c_[0];
    b[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
      Rat s{0};
      int jmax = std::min<int>(k, degree());
      for (int j = 1; j <= jmax; ++j) s += c_[j] * b[k - j];
      b[k] = -s * inv0;
    }
    return QSeries(std::move(b), order_);
  }

  Rat evaluate(const Rat& q) const {
    Rat acc{0};
    for (size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
    return acc;
  }
  double evaluate(double q) const {
    double acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i].get_d();
    return acc;
  }

  /// Equal as truncated series: coefficients agree up to the min order.
  friend bool operator==(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order_, b.order_);
    for (int k = 0; k <= n; ++k)
      if (a.coefficient(k) != b.coefficient(k)) return false;
    return true;
  }

  std::string str() const;

 private:
  static int check_order(int t) {
    if (t < 0) throw std::invalid_argument("QSeries: negative truncation order");
    return t;
  }
  void clamp() {
    if (static_cast<int>(c_.size()) > order_ + 1) c_.resize(order_ + 1);
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rat> c_;
  int order_;
};

}  // namespace qwhit
