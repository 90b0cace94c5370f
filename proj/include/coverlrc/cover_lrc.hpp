#ifndef COVERLRC_COVER_LRC_HPP
#define COVERLRC_COVER_LRC_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coverlrc/cover_metric.hpp"
#include "coverlrc/tamo_barg.hpp"

namespace coverlrc {

/// Arrange s vectors of length n on the cyclic diagonals of an n x n array:
/// coordinate j of vector i lands in row (i + j) mod n, column j (0-based).
/// Vector 0 is the main diagonal; the remaining n - s diagonals stay zero.
inline Matrix diagonal_layout(const Field& f, const std::vector<std::vector<uint32_t>>& vectors, size_t n) {
  if (vectors.empty() || vectors.size() > n) throw std::invalid_argument("need between 1 and n vectors");
  Matrix out(f, n, n);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw std::invalid_argument("vector length mismatch");
    for (size_t j = 0; j < n; ++j) out((i + j) % n, j) = vectors[i][j];
  }
  return out;
}

/// The blocked variant: one inner diagonal layout per (word group, coordinate
/// group) pair, then the mu x mu grid of blocks is itself arranged
/// diagonally. Word group i restricted to coordinate group j lands at block
/// row (i + j) mod mu, block column j.
inline Matrix blocked_diagonal_layout(const Field& f, const std::vector<std::vector<uint32_t>>& words,
                                      const LrcProfile& profile) {
  const size_t n = profile.length(), nl = profile.group_size(), mu = profile.group_count();
  if (words.size() != n) throw std::invalid_argument("need exactly n words");
  Matrix out(f, n, n);
  for (size_t i = 0; i < mu; ++i) {
    for (size_t j = 0; j < mu; ++j) {
      std::vector<std::vector<uint32_t>> restricted(nl, std::vector<uint32_t>(nl));
      for (size_t u = 0; u < nl; ++u) {
        const auto& word = words[i * nl + u];
        if (word.size() != n) throw std::invalid_argument("word length mismatch");
        for (size_t v = 0; v < nl; ++v) restricted[u][v] = word[profile.group(j)[v]];
      }
      const Matrix block = diagonal_layout(f, restricted, nl);
      const size_t block_row = (i + j) % mu;
      for (size_t r = 0; r < nl; ++r)
        for (size_t c = 0; c < nl; ++c) out(block_row * nl + r, j * nl + c) = block(r, c);
    }
  }
  return out;
}

/// Bijection between (word s, coordinate p) pairs and array cells induced by
/// the blocked diagonal layout. Every array row and every array column holds
/// exactly one coordinate of each word; both decoders rely on that.
class CellMap {
 public:
  struct Cell {
    size_t row, col;
  };
  struct Symbol {
    size_t word, coord;
  };

  explicit CellMap(const LrcProfile& profile) : n_(profile.length()) {
    const size_t nl = profile.group_size(), mu = profile.group_count();
    cells_.resize(n_ * n_);
    symbols_.assign(n_ * n_, Symbol{n_, n_});
    for (size_t s = 0; s < n_; ++s) {
      const size_t i = s / nl, u = s % nl;
      for (size_t p = 0; p < n_; ++p) {
        const size_t j = profile.group_of(p), v = profile.rank_in_group(p);
        const size_t row = ((i + j) % mu) * nl + (u + v) % nl;
        const size_t col = j * nl + v;
        cells_[s * n_ + p] = {row, col};
        Symbol& slot = symbols_[row * n_ + col];
        if (slot.word != n_) throw std::logic_error("cell map is not a bijection");
        slot = {s, p};
      }
    }
  }

  size_t side() const { return n_; }
  Cell cell_of(size_t word, size_t coord) const { return cells_.at(word * n_ + coord); }
  Symbol symbol_at(size_t row, size_t col) const { return symbols_.at(row * n_ + col); }

 private:
  size_t n_;
  std::vector<Cell> cells_;
  std::vector<Symbol> symbols_;
};

/// d_C <= n - k/n + 1 - (ceil(k/(n r)) - 1)(rho - 1) for an [n x n, k] array
/// code with (r, rho) cover-locality.
inline long cover_lrc_singleton_bound(long n, long k, long r, long rho) {
  if (n < 1 || k < 1 || k % n != 0) throw std::invalid_argument("array dimension must be a multiple of n");
  return lrc_singleton_bound(n, k / n, r, rho);
}

struct LocalRepairResult {
  Matrix repaired;
  std::vector<std::pair<size_t, size_t>> failed_blocks;  // (block row, block col)
  bool fully_repaired() const { return failed_blocks.empty(); }
};

struct ArrayDecodeResult {
  DecodeStatus status = DecodeStatus::unrecoverable;
  Matrix codeword;
  Matrix message;                    // k' x n, column s = message of word s
  std::vector<size_t> failed_words;  // constituent indices that failed to decode
  bool ok() const { return status == DecodeStatus::ok; }
};

/// Verifies the block structure behind (r, rho) block-locality for an
/// arbitrary cell layout: within every n_l x n_l block, the cells of each
/// word must form a complete local group whose restricted code has Hamming
/// distance >= rho, and every set of at most rho - 1 erased block lines must
/// leave each such local word uniquely completable. Exhaustive over the
/// block line subsets, so desk-scale parameters only.
template <typename SymbolAt>
bool block_locality_holds(const LinearCode& constituent, const LrcProfile& profile, SymbolAt&& symbol_at) {
  const size_t n = profile.length(), nl = profile.group_size(), mu = profile.group_count();
  const size_t rho = profile.rho();
  if (constituent.length() != n) throw std::invalid_argument("profile does not match the constituent code");

  std::vector<Matrix> bases;
  for (size_t j = 0; j < mu; ++j) {
    Matrix basis = restriction_basis(constituent, profile.group(j));
    if (basis.rows() == 0) return false;
    if (min_hamming_distance(LinearCode(constituent.field(), basis)) < rho) return false;
    bases.push_back(std::move(basis));
  }

  for (size_t a = 0; a < mu; ++a) {
    for (size_t b = 0; b < mu; ++b) {
      // cells of each word inside block (a, b), as (local row, local col, coord)
      std::vector<std::vector<std::array<size_t, 3>>> by_word(n);
      for (size_t lr = 0; lr < nl; ++lr) {
        for (size_t lc = 0; lc < nl; ++lc) {
          const auto sym = symbol_at(a * nl + lr, b * nl + lc);
          by_word[sym.word].push_back({lr, lc, sym.coord});
        }
      }
      std::vector<size_t> words_here;
      std::vector<size_t> word_group(n, mu);
      for (size_t s = 0; s < n; ++s) {
        if (by_word[s].empty()) continue;
        words_here.push_back(s);
        // the word's coords must be exactly one local group
        std::vector<size_t> coords;
        for (const auto& cell : by_word[s]) coords.push_back(cell[2]);
        std::sort(coords.begin(), coords.end());
        const size_t j = profile.group_of(coords.front());
        if (coords != profile.group(j)) return false;
        word_group[s] = j;
      }

      // every erased-line subset of size <= rho - 1 must be repairable
      const size_t lines = 2 * nl;
      auto check_subset = [&](const std::vector<size_t>& erased) {
        std::vector<bool> row_gone(nl, false), col_gone(nl, false);
        for (size_t line : erased) {
          if (line < nl)
            row_gone[line] = true;
          else
            col_gone[line - nl] = true;
        }
        for (size_t s : words_here) {
          const Matrix& basis = bases[word_group[s]];
          std::vector<size_t> known;
          bool any_lost = false;
          for (const auto& [lr, lc, p] : by_word[s]) {
            if (row_gone[lr] || col_gone[lc])
              any_lost = true;
            else
              known.push_back(profile.rank_in_group(p));
          }
          if (!any_lost) continue;
          if (rank_of(basis.select_columns(known)) != basis.rows()) return false;
        }
        return true;
      };
      // subsets of size 1..rho-1 via a simple combination walk
      for (size_t e = 1; e + 1 <= rho; ++e) {
        std::vector<size_t> idx(e);
        for (size_t i = 0; i < e; ++i) idx[i] = i;
        while (true) {
          if (!check_subset(idx)) return false;
          size_t i = e;
          while (i > 0 && idx[i - 1] == lines - e + i - 1) --i;
          if (i == 0) break;
          ++idx[i - 1];
          for (size_t t = i; t < e; ++t) idx[t] = idx[t - 1] + 1;
        }
      }
    }
  }
  return true;
}

/// Cover-metric locally repairable array code: the n words of a constituent
/// block LRC arranged by the blocked diagonal layout. Minimum cover distance
/// equals the constituent's Hamming distance, and each n_l x n_l block is a
/// local array code of cover distance >= rho.
class ArrayLrc {
 public:
  ArrayLrc(LinearCode constituent, LrcProfile profile, std::optional<RsCode> supercode = std::nullopt)
      : constituent_(std::move(constituent)),
        profile_(std::move(profile)),
        supercode_(std::move(supercode)),
        map_(profile_) {
    if (profile_.length() != constituent_.length())
      throw std::invalid_argument("profile does not match the constituent code");
    for (size_t j = 0; j < profile_.group_count(); ++j)
      local_bases_.push_back(restriction_basis(constituent_, profile_.group(j)));
  }

  static ArrayLrc from(const TamoBargLrc& tb) { return ArrayLrc(tb.code, tb.profile, tb.supercode); }

  size_t side() const { return constituent_.length(); }
  size_t dimension() const { return side() * constituent_.dimension(); }
  const LinearCode& constituent() const { return constituent_; }
  const LrcProfile& profile() const { return profile_; }
  const CellMap& cell_map() const { return map_; }

  /// Encode a k' x n message matrix (column s = message of word s).
  Matrix encode(const Matrix& message) const {
    const size_t n = side(), kp = constituent_.dimension();
    if (message.rows() != kp || message.cols() != n) throw std::invalid_argument("message must be k' x n");
    if (!message.field().same(constituent_.field())) throw std::invalid_argument("message field mismatch");
    Matrix out(constituent_.field(), n, n);
    std::vector<uint32_t> msg(kp);
    for (size_t s = 0; s < n; ++s) {
      for (size_t i = 0; i < kp; ++i) msg[i] = message(i, s);
      const auto word = constituent_.encode(msg);
      for (size_t p = 0; p < n; ++p) {
        const auto cell = map_.cell_of(s, p);
        out(cell.row, cell.col) = word[p];
      }
    }
    return out;
  }

  /// Repair full-line erasures block by block. Block (a, b) sees
  /// e = (erased rows hitting block row a) + (erased columns hitting block
  /// column b) erased lines; each of its diagonals is a local codeword with
  /// at most e erasures and is re-solved in the local restriction code.
  /// Blocks whose diagonals are not uniquely completable are reported; their
  /// erased cells are left zero.
  LocalRepairResult local_repair(const Matrix& word, const LineSet& erased) const {
    const size_t n = side(), nl = profile_.group_size(), mu = profile_.group_count();
    check_word(word, erased);
    auto [rows, cols] = erased.split(n);
    std::vector<bool> row_gone(n, false), col_gone(n, false);
    for (size_t r : rows) row_gone[r] = true;
    for (size_t c : cols) col_gone[c] = true;

    Matrix repaired = word;
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c)
        if (row_gone[r] || col_gone[c]) repaired(r, c) = 0;

    LocalRepairResult result{std::move(repaired), {}};
    for (size_t a = 0; a < mu; ++a) {
      for (size_t b = 0; b < mu; ++b) {
        bool touched = false;
        for (size_t t = 0; t < nl && !touched; ++t) touched = row_gone[a * nl + t] || col_gone[b * nl + t];
        if (!touched) continue;

        const Matrix& basis = local_bases_[b];
        std::vector<std::pair<CellMap::Cell, uint32_t>> fills;
        bool block_ok = true;
        for (size_t u = 0; u < nl && block_ok; ++u) {
          std::vector<size_t> known_v;
          std::vector<uint32_t> known_val;
          std::vector<size_t> lost_v;
          for (size_t v = 0; v < nl; ++v) {
            const size_t row = a * nl + (u + v) % nl, col = b * nl + v;
            if (row_gone[row] || col_gone[col])
              lost_v.push_back(v);
            else {
              known_v.push_back(v);
              known_val.push_back(word(row, col));
            }
          }
          if (lost_v.empty()) continue;
          Matrix system(constituent_.field(), known_v.size(), basis.rows());
          for (size_t e = 0; e < known_v.size(); ++e)
            for (size_t d = 0; d < basis.rows(); ++d) system(e, d) = basis(d, known_v[e]);
          const LinearSolve solved = solve_linear(system, known_val);
          if (solved.outcome != SolveOutcome::unique) {
            block_ok = false;
            break;
          }
          for (size_t v : lost_v) {
            uint32_t val = 0;
            for (size_t d = 0; d < basis.rows(); ++d)
              val = constituent_.field().add(val, constituent_.field().mul(solved.solution[d], basis(d, v)));
            fills.push_back({CellMap::Cell{a * nl + (u + v) % nl, b * nl + v}, val});
          }
        }
        if (block_ok) {
          for (const auto& [cell, val] : fills) result.repaired(cell.row, cell.col) = val;
        } else {
          result.failed_blocks.emplace_back(a, b);
        }
      }
    }
    return result;
  }

  /// Decode full-line erasures globally: every line meets every word in
  /// exactly one coordinate, so t erased lines leave at most t erasures per
  /// word. Guaranteed for t <= d - 1.
  ArrayDecodeResult decode_erasures(const Matrix& word, const LineSet& erased) const {
    const size_t n = side();
    check_word(word, erased);
    auto [rows, cols] = erased.split(n);
    std::vector<bool> row_gone(n, false), col_gone(n, false);
    for (size_t r : rows) row_gone[r] = true;
    for (size_t c : cols) col_gone[c] = true;

    ArrayDecodeResult out{DecodeStatus::ok, Matrix(constituent_.field(), n, n),
                          Matrix(constituent_.field(), constituent_.dimension(), n), {}};
    for (size_t s = 0; s < n; ++s) {
      ReceivedWord rw;
      rw.symbols.resize(n);
      for (size_t p = 0; p < n; ++p) {
        const auto cell = map_.cell_of(s, p);
        if (!row_gone[cell.row] && !col_gone[cell.col]) rw.symbols[p] = word(cell.row, cell.col);
      }
      const ErasureDecodeResult dec = constituent_.erasure_decode(rw);
      if (!dec.ok()) {
        if (out.ok()) out.status = dec.status;
        out.failed_words.push_back(s);
        continue;
      }
      place_word(out, s, dec.codeword, dec.message);
    }
    return out;
  }

  /// De-interleave into the n constituent words, BMD-decode each in the RS
  /// supercode, and check the result against the constituent code. Corrects
  /// every error matrix of cover weight <= floor((d - 1)/2).
  ArrayDecodeResult decode_errors(const Matrix& word) const {
    if (!supercode_) throw std::invalid_argument("error decoding requires an RS supercode");
    const size_t n = side();
    if (word.rows() != n || word.cols() != n) throw std::invalid_argument("array word must be n x n");

    ArrayDecodeResult out{DecodeStatus::ok, Matrix(constituent_.field(), n, n),
                          Matrix(constituent_.field(), constituent_.dimension(), n), {}};
    std::vector<uint32_t> received(n);
    for (size_t s = 0; s < n; ++s) {
      for (size_t p = 0; p < n; ++p) {
        const auto cell = map_.cell_of(s, p);
        received[p] = word(cell.row, cell.col);
      }
      const RsDecodeResult rs = rs_bmd_decode(*supercode_, received);
      if (!rs.ok) {
        if (out.ok()) out.status = DecodeStatus::unrecoverable;
        out.failed_words.push_back(s);
        continue;
      }
      const ErasureDecodeResult member = constituent_.erasure_decode(ReceivedWord::from_codeword(rs.codeword));
      if (!member.ok()) {
        if (out.ok()) out.status = DecodeStatus::not_a_codeword;
        out.failed_words.push_back(s);
        continue;
      }
      place_word(out, s, member.codeword, member.message);
    }
    return out;
  }

  bool has_block_locality() const {
    return block_locality_holds(constituent_, profile_,
                                [this](size_t r, size_t c) { return map_.symbol_at(r, c); });
  }

 private:
  void check_word(const Matrix& word, const LineSet& erased) const {
    const size_t n = side();
    if (word.rows() != n || word.cols() != n) throw std::invalid_argument("array word must be n x n");
    if (!word.field().same(constituent_.field())) throw std::invalid_argument("array word field mismatch");
    if (erased.max_line() > 2 * n) throw std::invalid_argument("line index out of range");
  }

  void place_word(ArrayDecodeResult& out, size_t s, const std::vector<uint32_t>& codeword,
                  const std::vector<uint32_t>& message) const {
    for (size_t p = 0; p < side(); ++p) {
      const auto cell = map_.cell_of(s, p);
      out.codeword(cell.row, cell.col) = codeword[p];
    }
    for (size_t i = 0; i < constituent_.dimension(); ++i) out.message(i, s) = message[i];
  }

  LinearCode constituent_;
  LrcProfile profile_;
  std::optional<RsCode> supercode_;
  CellMap map_;
  std::vector<Matrix> local_bases_;
};

}  // namespace coverlrc

#endif  // COVERLRC_COVER_LRC_HPP
