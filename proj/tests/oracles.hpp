// Test-only oracles, independent of the library code paths they check:
// a naive recursive GZ enumerator, the Weyl character determinant formula,
// long-double reference sums, a brute-force complex pattern sum, and a
// least-squares slope helper for decay-rate assertions.
#pragma once

#include <qwhit/gz.hpp>
#include <qwhit/rational.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using qwhit::Rat;
using qwhit::Weight;

// Naive pattern enumeration by explicit recursion over all candidate rows
// (independent of qwhit::for_each_pattern's odometer).
inline void naive_patterns(const Weight& top,
                           const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (!qwhit::is_dominant(top)) return;
  std::vector<std::vector<int>> rows{top};
  std::function<void()> descend = [&] {
    const std::vector<int> upper = rows.back();  // copy: push_back below reallocates
    if (upper.size() == 1) {
      std::vector<std::vector<int>> ordered(rows.rbegin(), rows.rend());
      visit(ordered);
      return;
    }
    std::vector<int> lower(upper.size() - 1);
    std::function<void(size_t)> choose = [&](size_t i) {
      if (i + 1 == upper.size()) {
        rows.push_back(lower);
        descend();
        rows.pop_back();
        return;
      }
      for (int v = upper[i + 1]; v <= upper[i]; ++v) {
        lower[i] = v;
        choose(i + 1);
      }
    };
    choose(0);
  };
  descend();
}

inline long naive_pattern_count(const Weight& top) {
  long n = 0;
  naive_patterns(top, [&](const auto&) { ++n; });
  return n;
}

// Exact determinant by fraction-free-ish Gaussian elimination on rationals.
inline Rat det(std::vector<std::vector<Rat>> m) {
  size_t n = m.size();
  Rat d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    Rat inv = Rat(1) / m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] * inv;
      for (size_t cc = c; cc < n; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  return d;
}

// Weyl character formula s_p(z) = det(z_i^{p_j + n - j}) / det(z_i^{n - j});
// needs distinct z values.
inline Rat schur_weyl(const Weight& p, const std::vector<Rat>& z) {
  size_t n = p.size();
  std::vector<std::vector<Rat>> num(n, std::vector<Rat>(n));
  std::vector<std::vector<Rat>> den(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      num[i][j] = qwhit::rat_pow(z[i], p[j] + static_cast<long>(n - 1 - j));
      den[i][j] = qwhit::rat_pow(z[i], static_cast<long>(n - 1 - j));
    }
  return det(num) / det(den);
}

// ln prod (1 - e^{-k eps}) in extended precision.
inline long double qfactorial_log_ld(int n, long double eps) {
  long double s = 0;
  for (int k = 1; k <= n; ++k) s += std::log(-std::expm1(-k * eps));
  return s;
}

// Plain complex<double> pattern sum (no log rescaling) for small weights.
inline std::complex<double> psi_bruteforce_cx(const Weight& top, const std::vector<double>& lambda,
                                              double eps) {
  std::complex<double> total(0, 0);
  double q = std::exp(-eps);
  auto qfact = [&](int n) {
    double v = 1;
    for (int k = 1; k <= n; ++k) v *= 1 - std::pow(q, k);
    return v;
  };
  naive_patterns(top, [&](const std::vector<std::vector<int>>& rows) {
    double coeff = 1;
    for (size_t k = 1; k + 1 < rows.size(); ++k)
      for (size_t i = 0; i + 1 < rows[k].size(); ++i)
        coeff *= qfact(rows[k][i] - rows[k][i + 1]);
    for (size_t k = 0; k + 1 < rows.size(); ++k)
      for (size_t i = 0; i < rows[k].size(); ++i)
        coeff /= qfact(rows[k + 1][i] - rows[k][i]) * qfact(rows[k][i] - rows[k + 1][i + 1]);
    double phase = 0;
    int prev = 0;
    for (size_t k = 0; k < rows.size(); ++k) {
      int s = 0;
      for (int v : rows[k]) s += v;
      phase += eps * lambda[k] * (s - prev);
      prev = s;
    }
    total += coeff * std::polar(1.0, phase);
  });
  return total;
}

// Least-squares slope of ln(y) against ln(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace oracle
