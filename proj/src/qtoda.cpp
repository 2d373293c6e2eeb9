#include <qwhit/qtoda.hpp>

#include <map>

namespace qwhit {

Rat subset_coefficient(unsigned mask, const std::vector<int>& p, const Rat& q) {
  int n = static_cast<int>(p.size());
  Rat coeff(1);
  std::vector<int> chosen;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) chosen.push_back(i);
  for (size_t j = 0; j < chosen.size(); ++j) {
    int i = chosen[j];                                        // 0-based index
    int next = (j + 1 < chosen.size()) ? chosen[j + 1] : n;   // i_{r+1} = n+1 in 1-based terms
    if (next == i + 1) continue;                              // exponent 1 - delta = 0
    if (i == n - 1) continue;                                 // X_n = 1
    long expnt = p[static_cast<size_t>(i)] - p[static_cast<size_t>(i) + 1] + 1;
    coeff *= Rat(1) - rat_pow(q, expnt);
    if (coeff == 0) return coeff;
  }
  return coeff;
}

ZLaurentRat elementary_symmetric(int rank, int r) {
  ZLaurentRat out(rank);
  if (r < 0 || r > rank) return out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    ExpVec e(static_cast<size_t>(rank), 0);
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) e[static_cast<size_t>(i)] = 1;
    out.add_term(e, Rat(1));
  }
  return out;
}

std::complex<double> elementary_symmetric_at(const std::vector<double>& lambdas, int r,
                                             double eps) {
  int n = static_cast<int>(lambdas.size());
  std::complex<double> acc(0.0, 0.0);
  if (r == 0) return {1.0, 0.0};
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    double ph = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) ph += eps * lambdas[static_cast<size_t>(i)];
    acc += std::polar(1.0, ph);
  }
  return acc;
}

EigenReport verify_eigen(const Weight& p, const Rat& q) {
  int n = static_cast<int>(p.size());
  EigenReport report;
  report.weight = p;
  report.q = q;
  report.dominant = is_dominant(p);

  std::map<Weight, ZLaurentRat> memo;
  std::function<ZLaurentRat(const Weight&)> psi = [&](const Weight& w) {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, psi_formal_z(w, q)).first;
    return it->second;
  };

  ZLaurentRat psi_p = psi(p);
  for (int r = 1; r <= n; ++r) {
    ZLaurentRat lhs =
        apply_hamiltonian<ZLaurentRat>(HamiltonianSpec(n, r), psi, p, q, ZLaurentRat(n));
    ZLaurentRat rhs = elementary_symmetric(n, r) * psi_p;
    ZLaurentRat resid = lhs - rhs;
    EigenResidual e;
    e.order = r;
    e.exactly_zero = resid.is_zero();
    e.residual = resid.is_zero() ? "0" : resid.str();
    if (!e.exactly_zero) report.all_zero = false;
    report.residuals.push_back(std::move(e));
  }
  return report;
}

}  // namespace qwhit
