#include <qwhit/gz.hpp>

#include <cassert>
#include <stdexcept>

namespace qwhit {

bool is_dominant(const Weight& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) return false;
  return true;
}

bool rows_interlace(const std::vector<int>& upper, const std::vector<int>& lower) {
  if (lower.size() + 1 != upper.size()) return false;
  for (size_t i = 0; i < lower.size(); ++i)
    if (!(upper[i] >= lower[i] && lower[i] >= upper[i + 1])) return false;
  return true;
}

GZPattern::GZPattern(PatternRows rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("GZPattern: empty");
  for (size_t k = 0; k < rows_.size(); ++k)
    if (rows_[k].size() != k + 1) throw std::invalid_argument("GZPattern: bad row lengths");
  for (size_t k = 0; k + 1 < rows_.size(); ++k)
    if (!rows_interlace(rows_[k + 1], rows_[k]))
      throw std::invalid_argument("GZPattern: interlacing violated");
}

void for_each_interlacing(const std::vector<int>& upper,
                          const std::function<void(const std::vector<int>&)>& visit) {
  size_t n = upper.size();
  if (n == 0) return;
  if (!is_dominant(upper)) return;
  if (n == 1) {
    std::vector<int> none;
    visit(none);
    return;
  }
  std::vector<int> lower(n - 1);
  for (size_t i = 0; i < n - 1; ++i) lower[i] = upper[i + 1];
  for (;;) {
    visit(lower);
    size_t i = n - 1;
    while (i-- > 0) {
      if (lower[i] < upper[i]) {
        ++lower[i];
        for (size_t j = i + 1; j < n - 1; ++j) lower[j] = upper[j + 1];
        break;
      }
      if (i == 0) return;
    }
  }
}

std::uint64_t interlacing_count(const std::vector<int>& upper) {
  if (!is_dominant(upper)) return 0;
  std::uint64_t c = 1;
  for (size_t i = 0; i + 1 < upper.size(); ++i) {
    std::uint64_t span = static_cast<std::uint64_t>(upper[i] - upper[i + 1]) + 1;
    if (c > UINT64_MAX / span) throw std::overflow_error("interlacing_count: overflow");
    c *= span;
  }
  return c;
}

std::vector<int> interlacing_at(const std::vector<int>& upper, std::uint64_t index) {
  size_t n = upper.size();
  std::vector<int> lower(n - 1);
  // Mixed-radix decode, last coordinate fastest (lex order).
  for (size_t i = n - 1; i-- > 0;) {
    std::uint64_t span = static_cast<std::uint64_t>(upper[i] - upper[i + 1]) + 1;
    lower[i] = upper[i + 1] + static_cast<int>(index % span);
    index /= span;
  }
  return lower;
}

namespace {

void enumerate_below(PatternRows& rows, size_t k,
                     const std::function<void(const PatternRows&)>& visit) {
  // rows[k] is fixed; choose rows k-1 .. 0.
  if (k == 0) {
    visit(rows);
    return;
  }
  const std::vector<int>& upper = rows[k];
  std::vector<int>& lower = rows[k - 1];
  size_t n = upper.size();
  for (size_t i = 0; i < n - 1; ++i) lower[i] = upper[i + 1];
  for (;;) {
    enumerate_below(rows, k - 1, visit);
    size_t i = n - 1;
    bool done = false;
    while (i-- > 0) {
      if (lower[i] < upper[i]) {
        ++lower[i];
        for (size_t j = i + 1; j < n - 1; ++j) lower[j] = upper[j + 1];
        break;
      }
      if (i == 0) done = true;
    }
    if (done || n == 1) return;
  }
}

PatternRows make_rows(const Weight& top) {
  PatternRows rows(top.size());
  for (size_t k = 0; k < top.size(); ++k) rows[k].resize(k + 1);
  rows.back() = top;
  return rows;
}

}  // namespace

void for_each_pattern(const Weight& top, const std::function<void(const PatternRows&)>& visit) {
  if (top.empty() || !is_dominant(top)) return;
  PatternRows rows = make_rows(top);
  enumerate_below(rows, top.size() - 1, visit);
}

void for_each_pattern_in_subtree(const Weight& top, std::uint64_t subtree,
                                 const std::function<void(const PatternRows&)>& visit) {
  if (top.empty() || !is_dominant(top)) return;
  PatternRows rows = make_rows(top);
  if (top.size() == 1) {
    if (subtree == 0) visit(rows);
    return;
  }
  rows[top.size() - 2] = interlacing_at(top, subtree);
  enumerate_below(rows, top.size() - 2, visit);
}

BigInt count_patterns(const Weight& top) {
  if (!is_dominant(top)) return BigInt(0);
  size_t n = top.size();
  BigInt num(1), den(1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      num *= BigInt(top[i] - top[j]) + BigInt(static_cast<long>(j - i));
      den *= BigInt(static_cast<long>(j - i));
    }
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  assert(r == 0);
  return q;
}

}  // namespace qwhit
