// Gelfand-Zetlin patterns: streaming enumeration, interlacing sets, counting.
//
// Patterns are streamed row by row into a caller visitor (no global
// materialization); enumeration is lexicographic by rows from the row just
// below the top downward, so summation order is reproducible. Parallel
// consumers split on the row-l interlacing set via subtree indices.
#pragma once

#include <qwhit/rational.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace qwhit {

using Weight = std::vector<int>;

/// Weakly decreasing test (the dominant domain).
bool is_dominant(const Weight& w);

/// Integer weight vector with its dominance flag; non-dominant weights are
/// representable (psi vanishes there).
struct DominantWeight {
  Weight entries;
  explicit DominantWeight(Weight e) : entries(std::move(e)) {}
  int rank() const { return static_cast<int>(entries.size()); }
  bool dominant() const { return is_dominant(entries); }
};

/// Rows of a pattern: rows[k] has k+1 entries, rows.back() is the top row.
using PatternRows = std::vector<std::vector<int>>;

/// Triangular array satisfying the interlacing conditions; construction
/// validates them.
class GZPattern {
 public:
  explicit GZPattern(PatternRows rows);
  const PatternRows& rows() const { return rows_; }
  const std::vector<int>& row(int k) const { return rows_[static_cast<size_t>(k)]; }
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  PatternRows rows_;
};

bool rows_interlace(const std::vector<int>& upper, const std::vector<int>& lower);

/// Streams all length n-1 rows interlacing the given length-n upper row, in
/// lexicographic order; the stream is empty when upper is not weakly
/// decreasing. Entry i ranges over [upper[i+1], upper[i]].
void for_each_interlacing(const std::vector<int>& upper,
                          const std::function<void(const std::vector<int>&)>& visit);

/// Number of rows interlacing `upper`: prod (upper_i - upper_{i+1} + 1).
std::uint64_t interlacing_count(const std::vector<int>& upper);

/// Decodes the i-th element (lex order) of the interlacing set.
std::vector<int> interlacing_at(const std::vector<int>& upper, std::uint64_t index);

/// Streams every pattern under `top`, exactly once, lexicographically by rows
/// from row l downward; O(l^2) working memory. Empty for non-dominant top.
/// The rows reference passed to the visitor is reused between calls.
void for_each_pattern(const Weight& top, const std::function<void(const PatternRows&)>& visit);

/// As for_each_pattern but restricted to the subtree whose row-l choice is
/// interlacing_at(top, subtree); used for the deterministic parallel split.
void for_each_pattern_in_subtree(const Weight& top, std::uint64_t subtree,
                                 const std::function<void(const PatternRows&)>& visit);

/// Weyl dimension formula prod_{i<j} (p_i - p_j + j - i)/(j - i), exact;
/// 0 for non-dominant top. Equals the pattern count.
BigInt count_patterns(const Weight& top);

}  // namespace qwhit
