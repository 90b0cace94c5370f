#ifndef COVERLRC_TAMO_BARG_HPP
#define COVERLRC_TAMO_BARG_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "coverlrc/reed_solomon.hpp"

namespace coverlrc {

/// Optimal (r, rho) locally repairable block code built from a multiplicative
/// subgroup coset structure (Tamo-Barg). Codewords are evaluations of
///   f(x) = sum_{i < r} sum_{j < k/r} a_{ij} x^(i + j*n_l)
/// at n points forming mu cosets of the order-n_l subgroup H; x^(n_l) is
/// constant on each coset, so the restriction to a coset is an [n_l, r, rho]
/// MDS code. The global distance meets the locality Singleton bound with
/// equality.
struct TamoBargLrc {
  LinearCode code;
  LrcProfile profile;
  std::vector<uint32_t> points;
  size_t design_distance;  // = lrc_singleton_bound(n, k, r, rho)
  /// RS code on the same points of dimension k + k/r - 1; it contains the
  /// LRC and has the same minimum distance, so BMD error decoding of the
  /// LRC runs in this supercode.
  RsCode supercode;
};

inline TamoBargLrc make_tamo_barg_lrc(const Field& f, size_t n, size_t k, size_t r, size_t rho) {
  if (r < 1 || rho < 1 || k < 1) throw std::invalid_argument("locality parameters must be >= 1");
  if (k % r != 0) throw std::invalid_argument("r must divide the dimension");
  const size_t nl = r + rho - 1;
  if (n % nl != 0) throw std::invalid_argument("r + rho - 1 must divide the length");
  const size_t mu = n / nl;
  const size_t max_deg = (k / r - 1) * nl + (r - 1);
  if (max_deg >= n) throw std::invalid_argument("dimension too large for this (n, r, rho)");
  const uint32_t q = f.order();
  if ((q - 1) % nl != 0 || n > q - 1)
    throw std::invalid_argument("no admissible subgroup/coset structure for (q, n, r, rho)");

  // H = the unique subgroup of order n_l; cosets ordered by their smallest
  // element index, elements within a coset sorted ascending.
  const uint32_t g = f.primitive_element().index();
  const uint32_t h = f.pow(g, (q - 1) / nl);
  std::vector<uint32_t> points;
  points.reserve(n);
  std::vector<bool> used(q, false);
  size_t cosets = 0;
  for (uint32_t x = 1; x < q && cosets < mu; ++x) {
    if (used[x]) continue;
    std::vector<uint32_t> coset;
    uint32_t cur = x;
    for (size_t i = 0; i < nl; ++i) {
      coset.push_back(cur);
      used[cur] = true;
      cur = f.mul(cur, h);
    }
    std::sort(coset.begin(), coset.end());
    points.insert(points.end(), coset.begin(), coset.end());
    ++cosets;
  }

  // message symbol t = j*r + i  <->  monomial x^(j*n_l + i)
  Matrix gen(f, k, n);
  for (size_t t = 0; t < k; ++t) {
    const size_t e = (t / r) * nl + (t % r);
    for (size_t c = 0; c < n; ++c) gen(t, c) = f.pow(points[c], static_cast<int64_t>(e));
  }

  const size_t super_dim = max_deg + 1;
  RsCode super = make_rs_code(f, n, super_dim, points);
  return TamoBargLrc{LinearCode(f, std::move(gen)),
                     LrcProfile::contiguous(n, r, rho),
                     std::move(points),
                     static_cast<size_t>(lrc_singleton_bound(n, k, r, rho)),
                     std::move(super)};
}

/// Smallest field GF(p^m) <= 2^20 admitting the coset structure for (n, n_l).
inline Field default_field_for(size_t n, size_t nl) {
  for (uint32_t q = static_cast<uint32_t>(n) + 1; q <= Field::kMaxOrder; ++q) {
    if ((q - 1) % nl != 0) continue;
    // prime-power test: q = p^m for a single prime p
    uint32_t base = q;
    uint32_t p = 0;
    for (uint32_t d = 2; d * d <= base; ++d) {
      if (base % d == 0) {
        p = d;
        while (base % d == 0) base /= d;
        break;
      }
    }
    if (p == 0) {
      p = q;  // q itself prime
      base = 1;
    }
    if (base != 1) continue;
    uint32_t m = 0, acc = 1;
    while (acc < q) {
      acc *= p;
      ++m;
    }
    if (acc == q) return Field(p, m);
  }
  throw std::invalid_argument("no admissible field within the size cap");
}

}  // namespace coverlrc

#endif  // COVERLRC_TAMO_BARG_HPP
