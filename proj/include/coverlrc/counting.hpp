#ifndef COVERLRC_COUNTING_HPP
#define COVERLRC_COUNTING_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coverlrc/cover_metric.hpp"

namespace coverlrc {

using Count = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient; 0 outside 0 <= k <= n.
inline Count binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count out = 1;
  for (long long i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is C(n-k+i, i) after each step
  }
  return out;
}

enum class CorruptionMode { errors, erasures };
enum class Construction { cover, rank_metric };

/// Channel/code parameters for the crisscross pattern counts: an n x n array
/// whose 2n lines are split into `groups` row groups and `groups` column
/// groups of `lines_per_group` consecutive lines each, with local distance
/// rho. The per-block capability is floor((rho-1)/2) against errors and
/// rho - 1 against erasures.
struct PatternParams {
  size_t n, lines_per_group, groups, rho;
  CorruptionMode mode;

  PatternParams(size_t n_, size_t nl, size_t mu, size_t rho_, CorruptionMode mode_)
      : n(n_), lines_per_group(nl), groups(mu), rho(rho_), mode(mode_) {
    if (nl * mu != n_) throw std::invalid_argument("need n = lines_per_group * groups");
    if (rho_ < 1) throw std::invalid_argument("rho must be >= 1");
  }

  size_t capability() const { return mode == CorruptionMode::erasures ? rho - 1 : (rho - 1) / 2; }
};

/// Memoized evaluation of the two pattern-counting recursions for a fixed
/// group size n_l.
class PatternCounter {
 public:
  explicit PatternCounter(long long lines_per_group) : nl_(lines_per_group) {}

  /// Number of ways to pick `total` lines from `groups` groups of n_l lines
  /// each with at most `cap` lines per group and at least `min_saturated`
  /// groups holding exactly `cap` lines.
  ///
  ///   capped(0, ., ., .) = 1
  ///   capped(t, 0, ., .) = 0                              (t > 0)
  ///   capped(t, c, g, a) = sum_{i = max(a, t - g(c-1))}^{min(g, floor(t/c))}
  ///       C(g, i) C(n_l, c)^i capped(t - i c, c - 1, g - i, 0)
  Count capped(long long total, long long cap, long long groups, long long min_saturated) {
    if (total < 0) return 0;
    if (total == 0) return 1;
    if (cap <= 0) return 0;
    const std::array<long long, 4> key{total, cap, groups, min_saturated};
    if (auto it = memo_capped_.find(key); it != memo_capped_.end()) return it->second;
    const long long lo = std::max(min_saturated, total - groups * (cap - 1));
    const long long hi = std::min(groups, total / cap);
    Count sum = 0;
    for (long long i = lo; i <= hi; ++i) {
      Count term = binomial(groups, i);
      term *= boost::multiprecision::pow(binomial(nl_, cap), static_cast<unsigned>(i));
      term *= capped(total - i * cap, cap - 1, groups - i, 0);
      sum += term;
    }
    memo_capped_[key] = sum;
    return sum;
  }

  /// Number of crisscross line patterns of total weight `total` with `rows`
  /// of them row lines, locally decodable with per-block capability
  /// `capability` when the running per-row-group load bound is `row_cap`:
  ///
  ///   crisscross(t, l, 0, ., g)  = capped(t, l, g, 0)
  ///   crisscross(t, l, tr, lr, g), 0 < tr <= lr:
  ///       C(g,1) C(n_l, tr) capped(t - tr, l - tr, g, 0)
  ///       + crisscross(t, l, tr, tr - 1, g)
  ///   crisscross(t, l, tr, lr, g), lr < tr <= g lr:
  ///       capped(tr, lr, g, 1) capped(t - tr, l - lr, g, 0)
  ///       + crisscross(t, l, tr, lr - 1, g)
  ///   0 otherwise
  ///
  /// Equivalently: the number of patterns whose per-row-group loads r_a and
  /// per-column-group loads c_b satisfy max_a r_a + max_b c_b <= capability,
  /// with max_a r_a <= row_cap.
  Count crisscross(long long total, long long capability, long long rows, long long row_cap, long long groups) {
    if (total < 0 || rows < 0) return 0;
    if (rows == 0) return capped(total, capability, groups, 0);
    const std::array<long long, 5> key{total, capability, rows, row_cap, groups};
    if (auto it = memo_criss_.find(key); it != memo_criss_.end()) return it->second;
    Count out = 0;
    if (rows <= row_cap) {
      // a row-group load above the capability is never decodable
      if (rows <= capability)
        out = binomial(groups, 1) * binomial(nl_, rows) * capped(total - rows, capability - rows, groups, 0);
      out += crisscross(total, capability, rows, rows - 1, groups);
    } else if (rows <= groups * row_cap) {
      if (row_cap <= capability)
        out = capped(rows, row_cap, groups, 1) * capped(total - rows, capability - row_cap, groups, 0);
      out += crisscross(total, capability, rows, row_cap - 1, groups);
    }
    memo_criss_[key] = out;
    return out;
  }

 private:
  long long nl_;
  std::map<std::array<long long, 4>, Count> memo_capped_;
  std::map<std::array<long long, 5>, Count> memo_criss_;
};

/// Exact probability that a uniformly random set of t corrupted lines is
/// locally decodable, for either construction.
inline Rational local_decoding_probability(const PatternParams& params, size_t t, Construction construction,
                                           PatternCounter& counter) {
  const long long two_n = 2 * static_cast<long long>(params.n);
  if (static_cast<long long>(t) > two_n) throw std::invalid_argument("t exceeds the number of lines");
  const long long cap = static_cast<long long>(params.capability());
  const long long g = static_cast<long long>(params.groups);
  const long long tt = static_cast<long long>(t);
  Count hits = 0;
  if (construction == Construction::cover) {
    for (long long tr = 0; tr <= tt; ++tr) hits += counter.crisscross(tt, cap, tr, cap, g);
  } else {
    for (long long tr = 0; tr <= cap && tr <= tt; ++tr)
      hits += binomial(static_cast<long long>(params.n), tr) * counter.capped(tt - tr, cap - tr, g, 0);
  }
  return Rational(hits, binomial(two_n, tt));
}

inline Rational local_decoding_probability(const PatternParams& params, size_t t, Construction construction) {
  PatternCounter counter(static_cast<long long>(params.lines_per_group));
  return local_decoding_probability(params, t, construction, counter);
}

/// Per-group line loads of a pattern: first `groups` entries are row groups,
/// the rest column groups.
inline std::pair<std::vector<size_t>, std::vector<size_t>> group_loads(const LineSet& pattern,
                                                                       const PatternParams& params) {
  std::vector<size_t> row_load(params.groups, 0), col_load(params.groups, 0);
  for (unsigned line : pattern.lines()) {
    if (line == 0 || line > 2 * params.n) throw std::invalid_argument("line index out of range");
    if (line <= params.n)
      ++row_load[(line - 1) / params.lines_per_group];
    else
      ++col_load[(line - params.n - 1) / params.lines_per_group];
  }
  return {std::move(row_load), std::move(col_load)};
}

/// Cover construction: block (a, b) sees r_a + c_b corrupted lines, so the
/// pattern is locally decodable iff max_a r_a + max_b c_b <= capability.
/// Rank-metric construction: every corrupted row intersects all local codes,
/// so the condition is (total rows) + max_b c_b <= capability.
inline bool is_locally_decodable(const LineSet& pattern, const PatternParams& params, Construction construction) {
  const auto [row_load, col_load] = group_loads(pattern, params);
  size_t max_col = 0, max_row = 0, total_rows = 0;
  for (size_t b = 0; b < params.groups; ++b) max_col = std::max(max_col, col_load[b]);
  for (size_t a = 0; a < params.groups; ++a) {
    max_row = std::max(max_row, row_load[a]);
    total_rows += row_load[a];
  }
  const size_t rows_term = construction == Construction::cover ? max_row : total_rows;
  return rows_term + max_col <= params.capability();
}

/// Visit every t-subset of {1, ..., universe} in lexicographic order.
template <typename Fn>
void for_each_line_set(size_t universe, size_t t, Fn&& fn) {
  if (t > universe) return;
  std::vector<unsigned> pick(t);
  for (size_t i = 0; i < t; ++i) pick[i] = static_cast<unsigned>(i + 1);
  while (true) {
    fn(static_cast<const std::vector<unsigned>&>(pick));
    size_t i = t;
    while (i > 0 && pick[i - 1] == universe - t + i) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Exhaustive fraction of t-line patterns accepted by the predicate.
/// Independent validation oracle for the counting recursions.
inline Rational oracle_enumerate(const PatternParams& params, size_t t,
                                 const std::function<bool(const LineSet&)>& predicate) {
  const Count total = binomial(2 * static_cast<long long>(params.n), static_cast<long long>(t));
  if (total > 10'000'000) throw std::invalid_argument("too many patterns for exhaustive enumeration");
  Count hits = 0;
  for_each_line_set(2 * params.n, t, [&](const std::vector<unsigned>& lines) {
    if (predicate(LineSet(lines))) ++hits;
  });
  return Rational(hits, total);
}

inline Rational oracle_enumerate(const PatternParams& params, size_t t, Construction construction) {
  return oracle_enumerate(params, t,
                          [&](const LineSet& ls) { return is_locally_decodable(ls, params, construction); });
}

/// Exact decimal rendering of a non-negative rational, rounded half-up to
/// `significant` significant digits, trailing fractional zeros stripped.
inline std::string decimal_string(const Rational& value, int significant = 12) {
  using boost::multiprecision::numerator;
  using boost::multiprecision::denominator;
  if (value < 0) return "-" + decimal_string(-value, significant);
  Count num = numerator(value), den = denominator(value);
  if (num == 0) return "0";

  const Count integer_part = num / den;
  std::string int_digits = integer_part.str();
  int frac_significant;
  Count scaled_num = num;
  int leading_zeros = 0;
  if (integer_part > 0) {
    frac_significant = significant - static_cast<int>(int_digits.size());
  } else {
    // position of the first significant fractional digit
    Count probe = num * 10;
    while (probe < den) {
      probe *= 10;
      ++leading_zeros;
    }
    frac_significant = significant + leading_zeros;
  }
  if (frac_significant < 0) frac_significant = 0;
  for (int i = 0; i < frac_significant; ++i) scaled_num *= 10;
  Count rounded = (2 * scaled_num + den) / (2 * den);  // round half-up

  std::string digits = rounded.str();
  // rounding may gain a digit (e.g. 0.999... -> 1.000...)
  const size_t expect = int_digits == "0" ? static_cast<size_t>(frac_significant)
                                          : int_digits.size() + static_cast<size_t>(frac_significant);
  std::string whole, frac;
  if (digits.size() > expect && integer_part == 0 && frac_significant > 0) {
    // carried past the decimal point within the scaled window
    whole = digits.substr(0, digits.size() - frac_significant);
    frac = digits.substr(digits.size() - frac_significant);
  } else if (integer_part == 0) {
    whole = "0";
    frac = std::string(static_cast<size_t>(frac_significant) - digits.size(), '0') + digits;
  } else {
    whole = digits.substr(0, digits.size() - frac_significant);
    frac = digits.substr(digits.size() - frac_significant);
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return frac.empty() ? whole : whole + "." + frac;
}

}  // namespace coverlrc

#endif  // COVERLRC_COUNTING_HPP
