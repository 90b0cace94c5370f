#ifndef COVERLRC_LINEAR_CODE_HPP
#define COVERLRC_LINEAR_CODE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "coverlrc/matrix.hpp"

namespace coverlrc {

/// A length-n word with possibly erased positions.
struct ReceivedWord {
  std::vector<std::optional<uint32_t>> symbols;

  static ReceivedWord from_codeword(std::span<const uint32_t> word) {
    ReceivedWord out;
    out.symbols.assign(word.begin(), word.end());
    return out;
  }

  void erase_at(size_t pos) { symbols.at(pos) = std::nullopt; }

  size_t erasure_count() const {
    size_t n = 0;
    for (const auto& s : symbols) n += !s.has_value();
    return n;
  }
};

enum class DecodeStatus { ok, unrecoverable, not_a_codeword };

struct ErasureDecodeResult {
  DecodeStatus status = DecodeStatus::unrecoverable;
  std::vector<uint32_t> message;   // populated iff ok
  std::vector<uint32_t> codeword;  // populated iff ok
  bool ok() const { return status == DecodeStatus::ok; }
};

/// Linear [n, k] code over a Field, given by a full-row-rank generator matrix.
class LinearCode {
 public:
  LinearCode(const Field& f, Matrix generator)
      : field_(f), n_(generator.cols()), k_(generator.rows()), gen_(std::move(generator)) {
    if (!field_.same(gen_.field())) throw std::invalid_argument("generator matrix field mismatch");
    if (k_ == 0 || k_ > n_) throw std::invalid_argument("dimension must satisfy 1 <= k <= n");
    if (rank_of(gen_) != k_) throw std::invalid_argument("generator matrix does not have full row rank");
  }

  const Field& field() const { return field_; }
  size_t length() const { return n_; }
  size_t dimension() const { return k_; }
  const Matrix& generator() const { return gen_; }

  std::vector<uint32_t> encode(std::initializer_list<uint32_t> message) const {
    return encode(std::span<const uint32_t>(message.begin(), message.size()));
  }

  std::vector<uint32_t> encode(std::span<const uint32_t> message) const {
    if (message.size() != k_) throw std::invalid_argument("message length mismatch");
    std::vector<uint32_t> out(n_, 0);
    for (size_t i = 0; i < k_; ++i) {
      const uint32_t m = message[i];
      if (m == 0) continue;
      for (size_t c = 0; c < n_; ++c) out[c] = field_.add(out[c], field_.mul(m, gen_(i, c)));
    }
    return out;
  }

  /// Recover the message from the non-erased coordinates by a direct linear
  /// solve against the generator matrix. Unique iff the generator restricted
  /// to the known coordinates has rank k; rank deficiency reports
  /// `unrecoverable`, a full-rank but contradictory system `not_a_codeword`.
  /// Never wrong when the erasure count is at most d_H - 1.
  ErasureDecodeResult erasure_decode(const ReceivedWord& word) const {
    if (word.symbols.size() != n_) throw std::invalid_argument("received word length mismatch");
    std::vector<size_t> known;
    std::vector<uint32_t> values;
    for (size_t c = 0; c < n_; ++c) {
      if (word.symbols[c]) {
        known.push_back(c);
        values.push_back(*word.symbols[c]);
      }
    }
    Matrix system(field_, known.size(), k_);
    for (size_t e = 0; e < known.size(); ++e)
      for (size_t i = 0; i < k_; ++i) system(e, i) = gen_(i, known[e]);
    LinearSolve solved = solve_linear(system, values);
    switch (solved.outcome) {
      case SolveOutcome::underdetermined:
        return {DecodeStatus::unrecoverable, {}, {}};
      case SolveOutcome::inconsistent:
        return {DecodeStatus::not_a_codeword, {}, {}};
      case SolveOutcome::unique:
        break;
    }
    std::vector<uint32_t> codeword = encode(solved.solution);
    return {DecodeStatus::ok, std::move(solved.solution), std::move(codeword)};
  }

 private:
  Field field_;
  size_t n_, k_;
  Matrix gen_;
};

/// The (r, rho) local-group structure of a block LRC: a partition of the
/// coordinates into groups of size n_l = r + rho - 1, each stored sorted
/// ascending. All downstream index maps rely on this fixed order.
class LrcProfile {
 public:
  LrcProfile(size_t r, size_t rho, std::vector<std::vector<size_t>> groups)
      : r_(r), rho_(rho), groups_(std::move(groups)) {
    if (r_ < 1 || rho_ < 1) throw std::invalid_argument("locality parameters must be >= 1");
    const size_t nl = group_size();
    size_t n = 0;
    for (auto& g : groups_) {
      if (g.size() != nl) throw std::invalid_argument("local group size must equal r + rho - 1");
      if (!std::is_sorted(g.begin(), g.end())) throw std::invalid_argument("local groups must be sorted");
      n += g.size();
    }
    group_of_.assign(n, groups_.size());
    rank_in_group_.assign(n, 0);
    for (size_t j = 0; j < groups_.size(); ++j) {
      for (size_t v = 0; v < groups_[j].size(); ++v) {
        const size_t p = groups_[j][v];
        if (p >= n || group_of_[p] != groups_.size())
          throw std::invalid_argument("local groups must partition the coordinates");
        group_of_[p] = j;
        rank_in_group_[p] = v;
      }
    }
  }

  /// Groups of n_l consecutive coordinates.
  static LrcProfile contiguous(size_t n, size_t r, size_t rho) {
    const size_t nl = r + rho - 1;
    if (nl == 0 || n % nl != 0) throw std::invalid_argument("group size must divide the code length");
    std::vector<std::vector<size_t>> groups(n / nl);
    for (size_t j = 0; j < groups.size(); ++j) {
      groups[j].resize(nl);
      std::iota(groups[j].begin(), groups[j].end(), j * nl);
    }
    return LrcProfile(r, rho, std::move(groups));
  }

  size_t r() const { return r_; }
  size_t rho() const { return rho_; }
  size_t group_size() const { return r_ + rho_ - 1; }
  size_t group_count() const { return groups_.size(); }
  size_t length() const { return group_of_.size(); }
  const std::vector<std::vector<size_t>>& groups() const { return groups_; }
  const std::vector<size_t>& group(size_t j) const { return groups_.at(j); }
  size_t group_of(size_t coord) const { return group_of_.at(coord); }
  size_t rank_in_group(size_t coord) const { return rank_in_group_.at(coord); }

 private:
  size_t r_, rho_;
  std::vector<std::vector<size_t>> groups_;
  std::vector<size_t> group_of_;
  std::vector<size_t> rank_in_group_;
};

/// d <= n - k + 1 - (ceil(k/r) - 1)(rho - 1) for an [n, k] code with (r, rho)
/// locality in the Hamming metric.
inline long lrc_singleton_bound(long n, long k, long r, long rho) {
  if (r < 1 || k < r || n < k || rho < 1) throw std::invalid_argument("invalid locality bound parameters");
  const long ceil_kr = (k + r - 1) / r;
  return n - k + 1 - (ceil_kr - 1) * (rho - 1);
}

/// Exact minimum distance by exhaustive codeword enumeration (q^k <= 1e7).
inline size_t min_hamming_distance(const LinearCode& code) {
  const uint64_t q = code.field().order();
  const size_t k = code.dimension(), n = code.length();
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) {
    total *= q;
    if (total > 10'000'000ull) throw std::invalid_argument("code too large for exhaustive distance enumeration");
  }
  std::vector<uint32_t> msg(k, 0);
  size_t best = n + 1;
  for (uint64_t iter = 1; iter < total; ++iter) {
    // odometer step
    for (size_t i = 0; i < k; ++i) {
      if (++msg[i] == q) {
        msg[i] = 0;
      } else {
        break;
      }
    }
    const auto cw = code.encode(msg);
    size_t w = 0;
    for (uint32_t v : cw) w += (v != 0);
    best = std::min(best, w);
    if (best == 1) break;
  }
  return best;
}

/// Row basis of the restriction of the code to the given coordinates.
inline Matrix restriction_basis(const LinearCode& code, const std::vector<size_t>& coords) {
  return row_basis(code.generator().select_columns(coords));
}

}  // namespace coverlrc

#endif  // COVERLRC_LINEAR_CODE_HPP
