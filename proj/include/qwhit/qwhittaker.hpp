// Class-one q-deformed gl(n)-Whittaker functions as Gelfand-Zetlin pattern
// sums: direct summation, the one-row recursion, the character form
// Delta * Psi, and the q=0 Schur specialization.
//
// Every entry point returns exact zero for non-dominant weights; Hamiltonian
// shifts land there by design.
#pragma once

#include <qwhit/gz.hpp>
#include <qwhit/laurent.hpp>
#include <qwhit/logcomplex.hpp>
#include <qwhit/qfactorial.hpp>
#include <qwhit/spectral.hpp>

#include <mutex>
#include <variant>

namespace qwhit {

using ZLaurentQS = LaurentPoly<QSeries>;   // z formal, q formal (truncated)
using ZLaurentRat = LaurentPoly<Rat>;      // z formal, q an exact rational

/// Value of Psi in whichever arithmetic the caller requested.
using QWhittakerValue = std::variant<ZLaurentQS, ZLaurentRat, RatComplex, LogComplex>;

/// q-factorial arguments and z-exponents of one pattern term of the sum.
struct PatternTerm {
  std::vector<int> z_exponents;      // d_k = sum(row k) - sum(row k-1)
  std::vector<int> numerator_args;   // (p_{k,i} - p_{k,i+1}) over inner rows 2..l
  std::vector<int> denominator_args; // (p_{k+1,i} - p_{k,i}), (p_{k,i} - p_{k+1,i+1})
  void fill(const PatternRows& rows);
};

// ---- direct summation (one entry per arithmetic mode) ----

/// Fully formal: Laurent polynomial in z over truncated q-series.
ZLaurentQS psi_formal(const Weight& p, int truncation_order = kDefaultTruncationOrder);

/// z formal, q an exact rational.
ZLaurentRat psi_formal_z(const Weight& p, const Rat& q);

/// Exact rational-complex z values, exact rational q.
RatComplex psi_exact(const Weight& p, const std::vector<RatComplex>& z, const Rat& q);

/// Unit-circle z_k = e^{i eps lambda_k}, q = e^{-eps}; log-domain max-rescaled
/// sum, parallel over the row-l interlacing split with fixed reduction order.
LogComplex psi_log(const Weight& p, const std::vector<double>& lambdas, double eps);

/// Mode-dispatching wrapper matching the CLI surface.
QWhittakerValue psi_direct(const DominantWeight& p, const SpectralParams& spec, const QSpec& q);

// ---- recursion (Corollary-style), memoized per lower weight ----

class PsiMemo {
 public:
  ZLaurentQS* find_formal(const Weight& w, int order);
  void store_formal(const Weight& w, int order, ZLaurentQS v);
  ZLaurentRat* find_rat(const Weight& w);
  void store_rat(const Weight& w, ZLaurentRat v);

 private:
  std::mutex mu_;
  std::map<std::pair<Weight, int>, ZLaurentQS> formal_;
  std::map<Weight, ZLaurentRat> rat_;
};

ZLaurentQS psi_recursive(const Weight& p, int truncation_order = kDefaultTruncationOrder,
                         PsiMemo* memo = nullptr);
ZLaurentRat psi_recursive_z(const Weight& p, const Rat& q, PsiMemo* memo = nullptr);
RatComplex psi_recursive_exact(const Weight& p, const std::vector<RatComplex>& z, const Rat& q);

// ---- character form and Schur degeneration ----

/// Thrown when a coefficient of Delta * Psi fails integrality/positivity.
struct CharacterPositivityError : std::logic_error {
  ExpVec monomial;
  CharacterPositivityError(std::string what, ExpVec m)
      : std::logic_error(std::move(what)), monomial(std::move(m)) {}
};

/// Delta(p) * Psi with Delta(p) = prod_i (p_i - p_{i+1})_q!; asserts every
/// z-monomial coefficient is a polynomial with nonnegative integer
/// coefficients up to the truncation order.
ZLaurentQS psi_character(const Weight& p, int truncation_order = kDefaultTruncationOrder);

/// Psi at q = 0 (every q-factorial equals 1) evaluated at exact z; equals the
/// Schur polynomial s_p(z).
Rat schur_specialization(const Weight& p, const std::vector<Rat>& z);

}  // namespace qwhit
