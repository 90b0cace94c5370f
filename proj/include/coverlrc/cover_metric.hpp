#ifndef COVERLRC_COVER_METRIC_HPP
#define COVERLRC_COVER_METRIC_HPP

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

#include "coverlrc/matrix.hpp"

namespace coverlrc {

/// A set of lines of an m x n matrix: 1-based indices, 1..m are rows and
/// m+1..m+n are columns. Stored sorted without duplicates.
class LineSet {
 public:
  LineSet() = default;

  explicit LineSet(std::vector<unsigned> lines) : lines_(std::move(lines)) {
    std::sort(lines_.begin(), lines_.end());
    lines_.erase(std::unique(lines_.begin(), lines_.end()), lines_.end());
    if (!lines_.empty() && lines_.front() == 0) throw std::invalid_argument("line indices are 1-based");
  }

  /// Build from 1-based row and column numbers of an m-row matrix.
  static LineSet rows_and_cols(size_t m, const std::vector<unsigned>& rows, const std::vector<unsigned>& cols) {
    std::vector<unsigned> lines;
    lines.reserve(rows.size() + cols.size());
    for (unsigned r : rows) lines.push_back(r);
    for (unsigned c : cols) lines.push_back(c + static_cast<unsigned>(m));
    return LineSet(std::move(lines));
  }

  const std::vector<unsigned>& lines() const { return lines_; }
  size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }

  bool contains(unsigned line) const { return std::binary_search(lines_.begin(), lines_.end(), line); }

  unsigned max_line() const { return lines_.empty() ? 0 : lines_.back(); }

  /// 0-based row indices and column indices for an m-row matrix.
  std::pair<std::vector<size_t>, std::vector<size_t>> split(size_t m) const {
    std::vector<size_t> rows, cols;
    for (unsigned line : lines_) {
      if (line <= m)
        rows.push_back(line - 1);
      else
        cols.push_back(line - m - 1);
    }
    return {std::move(rows), std::move(cols)};
  }

  bool operator==(const LineSet& o) const { return lines_ == o.lines_; }

 private:
  std::vector<unsigned> lines_;
};

namespace detail {

/// Hopcroft-Karp maximum matching on the bipartite graph with the matrix
/// rows on the left, columns on the right, and one edge per nonzero entry.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const Matrix& e) : nl_(e.rows()), nr_(e.cols()), adj_(nl_) {
    for (size_t r = 0; r < nl_; ++r)
      for (size_t c = 0; c < nr_; ++c)
        if (e(r, c) != 0) adj_[r].push_back(c);
    match_l_.assign(nl_, kFree);
    match_r_.assign(nr_, kFree);
    while (bfs()) {
      for (size_t u = 0; u < nl_; ++u)
        if (match_l_[u] == kFree && dfs(u)) ++matching_;
    }
  }

  size_t matching_size() const { return matching_; }

  /// Minimum vertex cover via Koenig: alternating reachability Z from the
  /// unmatched left vertices; the cover is (L \ Z) on the left plus (R n Z)
  /// on the right. Unique given the matching, hence deterministic here.
  LineSet min_cover() const {
    std::vector<bool> vis_l(nl_, false), vis_r(nr_, false);
    std::deque<size_t> queue;
    for (size_t u = 0; u < nl_; ++u) {
      if (match_l_[u] == kFree) {
        vis_l[u] = true;
        queue.push_back(u);
      }
    }
    while (!queue.empty()) {
      const size_t u = queue.front();
      queue.pop_front();
      for (size_t v : adj_[u]) {
        if (vis_r[v] || match_l_[u] == static_cast<long>(v)) continue;
        vis_r[v] = true;
        const long w = match_r_[v];
        if (w != kFree && !vis_l[w]) {
          vis_l[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::vector<unsigned> lines;
    for (size_t u = 0; u < nl_; ++u)
      if (!vis_l[u] && match_l_[u] != kFree) lines.push_back(static_cast<unsigned>(u + 1));
    for (size_t v = 0; v < nr_; ++v)
      if (vis_r[v]) lines.push_back(static_cast<unsigned>(nl_ + v + 1));
    return LineSet(std::move(lines));
  }

 private:
  static constexpr long kFree = -1;

  bool bfs() {
    dist_.assign(nl_, -1);
    std::deque<size_t> queue;
    for (size_t u = 0; u < nl_; ++u) {
      if (match_l_[u] == kFree) {
        dist_[u] = 0;
        queue.push_back(u);
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const size_t u = queue.front();
      queue.pop_front();
      for (size_t v : adj_[u]) {
        const long w = match_r_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] < 0) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(static_cast<size_t>(w));
        }
      }
    }
    return found;
  }

  bool dfs(size_t u) {
    for (size_t v : adj_[u]) {
      const long w = match_r_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(static_cast<size_t>(w)))) {
        match_l_[u] = static_cast<long>(v);
        match_r_[v] = static_cast<long>(u);
        return true;
      }
    }
    dist_[u] = -1;
    return false;
  }

  size_t nl_, nr_;
  std::vector<std::vector<size_t>> adj_;
  std::vector<long> match_l_, match_r_;
  std::vector<long> dist_;
  size_t matching_ = 0;
};

}  // namespace detail

/// True iff every nonzero entry lies on a row or column of x.
inline bool is_cover(const Matrix& e, const LineSet& x) {
  const size_t m = e.rows(), n = e.cols();
  if (x.max_line() > m + n) throw std::invalid_argument("line index out of range");
  for (size_t r = 0; r < m; ++r) {
    if (x.contains(static_cast<unsigned>(r + 1))) continue;
    for (size_t c = 0; c < n; ++c)
      if (e(r, c) != 0 && !x.contains(static_cast<unsigned>(m + c + 1))) return false;
  }
  return true;
}

/// Size of a minimum cover: by Koenig duality, the maximum matching size of
/// the bipartite nonzero-entry graph.
inline size_t cover_weight(const Matrix& e) { return detail::BipartiteMatcher(e).matching_size(); }

/// One minimum cover (minimum covers need not be unique).
inline LineSet min_cover(const Matrix& e) { return detail::BipartiteMatcher(e).min_cover(); }

inline size_t cover_distance(const Matrix& a, const Matrix& b) { return cover_weight(a - b); }

/// Number of nonzero columns; cover_weight(e) <= column_weight(e).
inline size_t column_weight(const Matrix& e) {
  size_t out = 0;
  for (size_t c = 0; c < e.cols(); ++c) {
    for (size_t r = 0; r < e.rows(); ++r) {
      if (e(r, c) != 0) {
        ++out;
        break;
      }
    }
  }
  return out;
}

inline size_t row_weight(const Matrix& e) {
  size_t out = 0;
  for (size_t r = 0; r < e.rows(); ++r) {
    for (size_t c = 0; c < e.cols(); ++c) {
      if (e(r, c) != 0) {
        ++out;
        break;
      }
    }
  }
  return out;
}

/// Exact minimum over all 2^(m+n) line subsets; oracle for cover_weight.
inline size_t cover_weight_exhaustive(const Matrix& e) {
  const size_t m = e.rows(), n = e.cols();
  if (m + n > 24) throw std::invalid_argument("matrix too large for exhaustive cover search");
  std::vector<std::pair<size_t, size_t>> nonzeros;
  for (size_t r = 0; r < m; ++r)
    for (size_t c = 0; c < n; ++c)
      if (e(r, c) != 0) nonzeros.emplace_back(r, c);
  size_t best = m + n;
  const uint32_t total = 1u << (m + n);
  for (uint32_t mask = 0; mask < total; ++mask) {
    const size_t sz = static_cast<size_t>(__builtin_popcount(mask));
    if (sz >= best) continue;
    bool covers = true;
    for (const auto& [r, c] : nonzeros) {
      if (!(mask & (1u << r)) && !(mask & (1u << (m + c)))) {
        covers = false;
        break;
      }
    }
    if (covers) best = sz;
  }
  return best;
}

}  // namespace coverlrc

#endif  // COVERLRC_COVER_METRIC_HPP
