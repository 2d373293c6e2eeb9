// Laurent polynomials in z_1..z_n over an exact coefficient ring.
// Terms live in an ordered map keyed by the exponent vector, so iteration
// order (and therefore printing and summation order) is deterministic.
#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwhit {

using ExpVec = std::vector<int>;

template <class C>
class LaurentPoly {
 public:
  using Terms = std::map<ExpVec, C>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  static LaurentPoly monomial(ExpVec e, C coeff) {
    LaurentPoly p(static_cast<int>(e.size()));
    if (!coeff_is_zero(coeff)) p.terms_.emplace(std::move(e), std::move(coeff));
    return p;
  }

  void add_term(const ExpVec& e, const C& coeff) {
    if (nvars_ == 0 && terms_.empty()) nvars_ = static_cast<int>(e.size());
    if (static_cast<int>(e.size()) != nvars_)
      throw std::invalid_argument("LaurentPoly: exponent vector length mismatch");
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    } else if (coeff_is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, neg(c));
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out(a.nvars_ ? a.nvars_ : b.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        ExpVec e = ea;
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  template <class S>
  LaurentPoly& scale(const S& s) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * s;
      if (coeff_is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
    return *this;
  }

  /// Multiply by the monomial z^shift.
  LaurentPoly shifted(const ExpVec& shift) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      ExpVec e2 = e;
      for (size_t i = 0; i < e2.size(); ++i) e2[i] += shift[i];
      out.terms_.emplace(std::move(e2), c);
    }
    return out;
  }

  /// Coefficient lookup; returns C{} for absent monomials.
  C coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Applies a permutation of the variables: exponent i moves to perm[i].
  LaurentPoly permuted(const std::vector<int>& perm) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      ExpVec e2(e.size());
      for (size_t i = 0; i < e.size(); ++i) e2[static_cast<size_t>(perm[i])] = e[i];
      out.add_term(e2, c);
    }
    return out;
  }

  /// Substitutes concrete values; Value must support pow-by-int and ring ops.
  template <class Value, class Pow>
  Value evaluate(const std::vector<Value>& z, Pow pow, Value zero) const {
    Value acc = zero;
    for (const auto& [e, c] : terms_) {
      Value m = pow(z[0], e[0]);
      for (size_t i = 1; i < e.size(); ++i) m = m * pow(z[i], e[i]);
      acc += m * c;
    }
    return acc;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  std::string str(const std::string& var = "z") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << coeff_str(c) << ")";
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        os << "*" << var << i + 1;
        if (e[i] != 1) os << "^" << e[i];
      }
      first = false;
    }
    return os.str();
  }

 private:
  template <class T>
  static bool coeff_is_zero(const T& c) {
    if constexpr (requires { c.is_zero(); })
      return c.is_zero();
    else
      return c == 0;
  }
  template <class T>
  static T neg(const T& c) {
    return T{} - c;
  }
  template <class T>
  static std::string coeff_str(const T& c) {
    if constexpr (requires { c.str(); })
      return c.str();
    else if constexpr (requires { c.get_str(); })
      return c.get_str();
    else {
      std::ostringstream os;
      os << c;
      return os.str();
    }
  }

  int nvars_ = 0;
  Terms terms_;
};

}  // namespace qwhit
