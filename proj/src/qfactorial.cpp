#include <qwhit/qfactorial.hpp>

#include <cmath>
#include <stdexcept>

namespace qwhit {

QSeries q_factorial_series(int n, int truncation_order) {
  if (n < 0) throw std::domain_error("q_factorial_series: negative n");
  QSeries out = QSeries::one(truncation_order);
  for (int k = 1; k <= n; ++k) {
    if (k > truncation_order) break;  // (1 - q^k) == 1 mod q^{T+1}
    out *= QSeries({Rat(1)}, truncation_order) - QSeries::monomial(Rat(1), k, truncation_order);
  }
  return out;
}

namespace {

// Dense exact polynomial of (n)_q!, no truncation (degree n(n+1)/2).
std::vector<Rat> q_factorial_poly(int n) {
  std::vector<Rat> p{Rat(1)};
  for (int k = 1; k <= n; ++k) {
    std::vector<Rat> next(p.size() + static_cast<size_t>(k));
    for (size_t i = 0; i < p.size(); ++i) {
      next[i] += p[i];
      next[i + static_cast<size_t>(k)] -= p[i];
    }
    p = std::move(next);
  }
  return p;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Exact division; throws if a remainder is left.
std::vector<Rat> poly_div_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  std::vector<Rat> d = den;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw std::domain_error("poly_div_exact: zero divisor");
  if (num.size() < d.size()) {
    for (const Rat& c : num)
      if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return {Rat(0)};
  }
  std::vector<Rat> quot(num.size() - d.size() + 1);
  for (size_t i = quot.size(); i-- > 0;) {
    Rat c = num[i + d.size() - 1] / d.back();
    quot[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < d.size(); ++j) num[i + j] -= c * d[j];
  }
  for (const Rat& c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

}  // namespace

QSeries gaussian_binomial(int m, int k, int truncation_order) {
  if (k < 0 || k > m) throw std::domain_error("gaussian_binomial: need 0 <= k <= m");
  std::vector<Rat> quot =
      poly_div_exact(q_factorial_poly(m), poly_mul(q_factorial_poly(k), q_factorial_poly(m - k)));
  for (const Rat& c : quot)
    if (c.get_den() != 1 || c < 0)
      throw std::logic_error("gaussian_binomial: coefficient not a nonnegative integer");
  return QSeries(std::move(quot), truncation_order);
}

QFactorialLogTable::QFactorialLogTable(double eps) : eps_(eps), prefix_{0.0} {
  if (!(eps > 0)) throw std::domain_error("QFactorialLogTable: eps must be positive");
}

void QFactorialLogTable::extend_to(int n) {
  // Kahan-compensated prefix sums; each term via expm1 so that small and
  // large k*eps are both accurate to ~1 ulp.
  while (static_cast<int>(prefix_.size()) <= n) {
    int k = static_cast<int>(prefix_.size());
    double term = std::log(-std::expm1(-static_cast<double>(k) * eps_));
    double y = term - kahan_carry_;
    double t = prefix_.back() + y;
    kahan_carry_ = (t - prefix_.back()) - y;
    prefix_.push_back(t);
  }
}

double QFactorialLogTable::operator()(int n) {
  if (n < 0) throw std::domain_error("QFactorialLogTable: negative n");
  extend_to(n);
  return prefix_[static_cast<size_t>(n)];
}

const QSeries& InverseQFactorialTable::factorial(int n) {
  auto it = fact_.find(n);
  if (it == fact_.end()) it = fact_.emplace(n, q_factorial_series(n, order_)).first;
  return it->second;
}

const QSeries& InverseQFactorialTable::operator()(int n) {
  auto it = inv_.find(n);
  if (it == inv_.end()) it = inv_.emplace(n, factorial(n).reciprocal()).first;
  return it->second;
}

}  // namespace qwhit
