// q-deformed Toda Hamiltonians as shift operators on lattice functions, and
// exact verification of the eigenvalue equation with formal z and rational q.
//
// H_r f(p) = sum over ordered subsets I_r = {i_1<...<i_r} of {1..n} of
//   prod_j X_{i_j}^{1-delta(i_{j+1}-i_j,1)} * f(p + sum e_{i_j}),
// X_i = 1 - q^{p_i - p_{i+1} + 1} for i <= n-1, X_n = 1, i_{r+1} := n+1,
// with the X factors evaluated at the unshifted p (coefficients stand to the
// left of the shifts, as in the gl_2 example H_1 = (1-q^{p_1-p_2+1})T_1 + T_2).
#pragma once

#include <qwhit/qwhittaker.hpp>

#include <functional>
#include <string>
#include <vector>

namespace qwhit {

struct HamiltonianSpec {
  int rank;   // n = l+1
  int order;  // r in 1..n
  HamiltonianSpec(int rank_, int order_) : rank(rank_), order(order_) {
    if (rank < 1 || rank > 16) throw std::invalid_argument("HamiltonianSpec: rank out of range");
    if (order < 1 || order > rank) throw std::invalid_argument("HamiltonianSpec: need 1 <= r <= rank");
  }
};

/// X-coefficient product for the subset encoded in `mask` (bit i = index i+1),
/// as an exact rational at the unshifted p. Factors with exponent zero are
/// the consecutive-index ones; X_n never contributes.
Rat subset_coefficient(unsigned mask, const std::vector<int>& p, const Rat& q);

/// Applies H_r to a lattice function with values V; V needs +=, and scaling
/// by Rat via free mul(V, Rat). Subsets are visited in ascending bitmask
/// order, so the summation order is deterministic.
template <class V>
V apply_hamiltonian(const HamiltonianSpec& h,
                    const std::function<V(const std::vector<int>&)>& f,
                    const std::vector<int>& p, const Rat& q, V zero) {
  int n = h.rank;
  if (static_cast<int>(p.size()) != n)
    throw std::invalid_argument("apply_hamiltonian: point rank mismatch");
  V acc = std::move(zero);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != h.order) continue;
    Rat coeff = subset_coefficient(mask, p, q);
    if (coeff == 0) continue;
    std::vector<int> shifted = p;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) ++shifted[static_cast<size_t>(i)];
    V term = f(shifted);
    term.scale(coeff);
    acc += term;
  }
  return acc;
}

/// e_r(z_1..z_n) as a formal Laurent polynomial (the lattice eigenvalues).
ZLaurentRat elementary_symmetric(int rank, int r);

/// e_r at unit-circle values z_k = e^{i eps lambda_k}.
std::complex<double> elementary_symmetric_at(const std::vector<double>& lambdas, int r, double eps);

struct EigenResidual {
  int order = 0;            // r
  bool exactly_zero = true;
  std::string residual;     // printable residual polynomial ("0" when exact)
};

struct EigenReport {
  Weight weight;
  Rat q;
  bool dominant = false;
  bool all_zero = true;
  std::vector<EigenResidual> residuals;
};

/// For every r in 1..rank computes H_r Psi - e_r(z) Psi(p) with Psi in
/// formal-z / rational-q mode (class-one extension by zero off the dominant
/// cone) and reports whether each residual is exactly the zero polynomial.
EigenReport verify_eigen(const Weight& p, const Rat& q);

}  // namespace qwhit
