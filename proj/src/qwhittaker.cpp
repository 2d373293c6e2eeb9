#include <qwhit/qwhittaker.hpp>

#include <qwhit/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qwhit {

void PatternTerm::fill(const PatternRows& rows) {
  size_t n = rows.size();
  z_exponents.assign(n, 0);
  numerator_args.clear();
  denominator_args.clear();
  int prev_sum = 0;
  for (size_t k = 0; k < n; ++k) {
    int s = std::accumulate(rows[k].begin(), rows[k].end(), 0);
    z_exponents[k] = s - prev_sum;
    prev_sum = s;
  }
  // numerator: (p_{k,i} - p_{k,i+1})_q! over rows of length 2..n-1
  for (size_t k = 1; k + 1 < n; ++k)
    for (size_t i = 0; i + 1 < rows[k].size(); ++i)
      numerator_args.push_back(rows[k][i] - rows[k][i + 1]);
  // denominator: (p_{k+1,i} - p_{k,i})_q! (p_{k,i} - p_{k+1,i+1})_q!
  for (size_t k = 0; k + 1 < n; ++k) {
    const auto& up = rows[k + 1];
    const auto& lo = rows[k];
    for (size_t i = 0; i < lo.size(); ++i) {
      denominator_args.push_back(up[i] - lo[i]);
      denominator_args.push_back(lo[i] - up[i + 1]);
    }
  }
}

ZLaurentQS psi_formal(const Weight& p, int truncation_order) {
  ZLaurentQS out(static_cast<int>(p.size()));
  if (!is_dominant(p)) return out;
  InverseQFactorialTable table(truncation_order);
  PatternTerm term;
  for_each_pattern(p, [&](const PatternRows& rows) {
    term.fill(rows);
    QSeries coeff = QSeries::one(truncation_order);
    for (int a : term.numerator_args) coeff *= table.factorial(a);
    for (int a : term.denominator_args) coeff *= table(a);
    out.add_term(term.z_exponents, coeff);
  });
  return out;
}

ZLaurentRat psi_formal_z(const Weight& p, const Rat& q) {
  ZLaurentRat out(static_cast<int>(p.size()));
  if (!is_dominant(p)) return out;
  QFactorialValues fact(q);
  PatternTerm term;
  for_each_pattern(p, [&](const PatternRows& rows) {
    term.fill(rows);
    Rat coeff(1);
    for (int a : term.numerator_args) coeff *= fact(a);
    for (int a : term.denominator_args) coeff /= fact(a);
    out.add_term(term.z_exponents, coeff);
  });
  return out;
}

RatComplex psi_exact(const Weight& p, const std::vector<RatComplex>& z, const Rat& q) {
  if (z.size() != p.size()) throw std::invalid_argument("psi_exact: z/weight rank mismatch");
  RatComplex out;
  if (!is_dominant(p)) return out;
  QFactorialValues fact(q);
  PatternTerm term;
  for_each_pattern(p, [&](const PatternRows& rows) {
    term.fill(rows);
    Rat coeff(1);
    for (int a : term.numerator_args) coeff *= fact(a);
    for (int a : term.denominator_args) coeff /= fact(a);
    RatComplex mono{Rat(1), Rat(0)};
    for (size_t k = 0; k < z.size(); ++k) mono = mono * ratc_pow(z[k], term.z_exponents[k]);
    out += mono * coeff;
  });
  return out;
}

LogComplex psi_log(const Weight& p, const std::vector<double>& lambdas, double eps) {
  if (lambdas.size() != p.size()) throw std::invalid_argument("psi_log: lambda/weight rank mismatch");
  if (!(eps > 0)) throw std::invalid_argument("psi_log: eps must be positive");
  if (!is_dominant(p)) return LogComplex::zero();

  int spread = p.front() - p.back();
  QFactorialLogTable logs(eps);
  logs.extend_to(spread + 2);

  std::uint64_t chunks = p.size() > 1 ? interlacing_count(p) : 1;
  auto run_chunk = [&](std::uint64_t c) {
    LogAccumulator acc;
    PatternTerm term;
    for_each_pattern_in_subtree(p, c, [&](const PatternRows& rows) {
      term.fill(rows);
      double lm = 0.0;
      for (int a : term.numerator_args) lm += logs.at(a);
      for (int a : term.denominator_args) lm -= logs.at(a);
      double ph = 0.0;
      for (size_t k = 0; k < lambdas.size(); ++k) ph += eps * lambdas[k] * term.z_exponents[k];
      acc.add(lm, ph);
    });
    return acc;
  };

  std::vector<LogAccumulator> parts =
      parallel_map<LogAccumulator>(static_cast<size_t>(chunks), run_chunk);
  LogAccumulator total;
  for (const LogAccumulator& a : parts) total.merge(a);
  return total.value();
}

QWhittakerValue psi_direct(const DominantWeight& p, const SpectralParams& spec, const QSpec& q) {
  switch (spec.mode) {
    case SpectralParams::Mode::formal:
      if (q.kind == QSpec::Kind::formal) return psi_formal(p.entries, q.truncation_order);
      if (q.kind == QSpec::Kind::rational) return psi_formal_z(p.entries, q.q_rational);
      throw std::invalid_argument("psi_direct: formal z with float q is unsupported");
    case SpectralParams::Mode::exact:
      if (q.kind != QSpec::Kind::rational)
        throw std::invalid_argument("psi_direct: exact z needs a rational q");
      return psi_exact(p.entries, spec.values, q.q_rational);
    case SpectralParams::Mode::unit_circle:
      if (q.kind != QSpec::Kind::exponential)
        throw std::invalid_argument("psi_direct: unit-circle z needs q = e^{-eps}");
      return psi_log(p.entries, spec.lambdas, q.eps);
  }
  throw std::logic_error("psi_direct: bad mode");
}

// ---- recursion ----

ZLaurentQS* PsiMemo::find_formal(const Weight& w, int order) {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = formal_.find({w, order});
  return it == formal_.end() ? nullptr : &it->second;
}
void PsiMemo::store_formal(const Weight& w, int order, ZLaurentQS v) {
  std::lock_guard<std::mutex> lk(mu_);
  formal_.emplace(std::make_pair(w, order), std::move(v));
}
ZLaurentRat* PsiMemo::find_rat(const Weight& w) {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = rat_.find(w);
  return it == rat_.end() ? nullptr : &it->second;
}
void PsiMemo::store_rat(const Weight& w, ZLaurentRat v) {
  std::lock_guard<std::mutex> lk(mu_);
  rat_.emplace(w, std::move(v));
}

namespace {

// Generic one-row recursion. A sub-level value for a rank-k weight is a
// genuine Laurent polynomial in z_1..z_k (so the memo is reusable across top
// ranks); the parent lifts each term by appending the z_{k+1} exponent.
template <class Poly, class CoeffOf>
Poly psi_recursive_impl(const Weight& p, CoeffOf coeff_of,
                        const std::function<Poly*(const Weight&)>& memo_find,
                        const std::function<void(const Weight&, Poly)>& memo_store) {
  int rank = static_cast<int>(p.size());
  Poly out(rank);
  if (!is_dominant(p)) return out;
  if (rank == 1) {
    out.add_term(ExpVec{p[0]}, coeff_of(std::vector<int>{}, std::vector<int>{}));
    return out;
  }
  int top_sum = std::accumulate(p.begin(), p.end(), 0);
  for_each_interlacing(p, [&](const std::vector<int>& lower) {
    Poly* sub = memo_find(lower);
    Poly computed;
    if (!sub) {
      computed = psi_recursive_impl<Poly, CoeffOf>(lower, coeff_of, memo_find, memo_store);
      memo_store(lower, computed);
      sub = &computed;
    }
    // Delta(lower) / Q-denominator factors
    std::vector<int> num;
    for (size_t i = 0; i + 1 < lower.size(); ++i) num.push_back(lower[i] - lower[i + 1]);
    std::vector<int> den;
    for (size_t i = 0; i < lower.size(); ++i) {
      den.push_back(p[i] - lower[i]);
      den.push_back(lower[i] - p[i + 1]);
    }
    auto coeff = coeff_of(num, den);
    int z_top = top_sum - std::accumulate(lower.begin(), lower.end(), 0);
    for (const auto& [e, c] : sub->terms()) {
      ExpVec lifted = e;
      lifted.push_back(z_top);
      out.add_term(lifted, c * coeff);
    }
  });
  return out;
}

}  // namespace

ZLaurentQS psi_recursive(const Weight& p, int truncation_order, PsiMemo* memo) {
  PsiMemo local;
  PsiMemo& m = memo ? *memo : local;
  InverseQFactorialTable table(truncation_order);
  auto coeff = [&](const std::vector<int>& num, const std::vector<int>& den) {
    QSeries c = QSeries::one(truncation_order);
    for (int a : num) c *= table.factorial(a);
    for (int a : den) c *= table(a);
    return c;
  };
  std::function<ZLaurentQS*(const Weight&)> find = [&](const Weight& w) {
    return m.find_formal(w, truncation_order);
  };
  std::function<void(const Weight&, ZLaurentQS)> store = [&](const Weight& w, ZLaurentQS v) {
    m.store_formal(w, truncation_order, std::move(v));
  };
  return psi_recursive_impl<ZLaurentQS>(p, coeff, find, store);
}

ZLaurentRat psi_recursive_z(const Weight& p, const Rat& q, PsiMemo* memo) {
  PsiMemo local;
  PsiMemo& m = memo ? *memo : local;
  QFactorialValues fact(q);
  auto coeff = [&](const std::vector<int>& num, const std::vector<int>& den) {
    Rat c(1);
    for (int a : num) c *= fact(a);
    for (int a : den) c /= fact(a);
    return c;
  };
  std::function<ZLaurentRat*(const Weight&)> find = [&](const Weight& w) { return m.find_rat(w); };
  std::function<void(const Weight&, ZLaurentRat)> store = [&](const Weight& w, ZLaurentRat v) {
    m.store_rat(w, std::move(v));
  };
  return psi_recursive_impl<ZLaurentRat>(p, coeff, find, store);
}

RatComplex psi_recursive_exact(const Weight& p, const std::vector<RatComplex>& z, const Rat& q) {
  ZLaurentRat poly = psi_recursive_z(p, q);
  return poly.evaluate<RatComplex>(
      z, [](const RatComplex& b, int e) { return ratc_pow(b, e); }, RatComplex{});
}

ZLaurentQS psi_character(const Weight& p, int truncation_order) {
  if (!is_dominant(p)) throw std::invalid_argument("psi_character: weight must be dominant");
  ZLaurentQS psi = psi_formal(p, truncation_order);
  QSeries delta = QSeries::one(truncation_order);
  for (size_t i = 0; i + 1 < p.size(); ++i)
    delta *= q_factorial_series(p[i] - p[i + 1], truncation_order);
  ZLaurentQS out(static_cast<int>(p.size()));
  for (const auto& [e, c] : psi.terms()) {
    QSeries v = c * delta;
    if (!v.is_nonneg_integral())
      throw CharacterPositivityError(
          "psi_character: coefficient of a z-monomial is not a nonnegative-integer polynomial: " +
              v.str(),
          e);
    out.add_term(e, v);
  }
  return out;
}

Rat schur_specialization(const Weight& p, const std::vector<Rat>& z) {
  if (z.size() != p.size()) throw std::invalid_argument("schur_specialization: rank mismatch");
  if (!is_dominant(p)) throw std::invalid_argument("schur_specialization: weight must be dominant");
  // q = 0 turns every q-factorial into 1: a bare monomial sum over patterns.
  Rat out(0);
  PatternTerm term;
  for_each_pattern(p, [&](const PatternRows& rows) {
    term.fill(rows);
    Rat mono(1);
    for (size_t k = 0; k < z.size(); ++k) mono *= rat_pow(z[k], term.z_exponents[k]);
    out += mono;
  });
  return out;
}

}  // namespace qwhit
