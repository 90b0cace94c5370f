#ifndef COVERLRC_REED_SOLOMON_HPP
#define COVERLRC_REED_SOLOMON_HPP

#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "coverlrc/linear_code.hpp"
#include "coverlrc/polynomial.hpp"

namespace coverlrc {

/// Reed-Solomon evaluation code: codewords are (f(x_1), ..., f(x_n)) for
/// polynomials f of degree < k. d_H = n - k + 1.
struct RsCode {
  LinearCode code;
  std::vector<uint32_t> points;

  size_t length() const { return code.length(); }
  size_t dimension() const { return code.dimension(); }
  size_t min_distance() const { return code.length() - code.dimension() + 1; }
};

inline RsCode make_rs_code(const Field& f, size_t n, size_t k, std::vector<uint32_t> points) {
  if (k > n) throw std::invalid_argument("RS dimension exceeds length");
  if (n > f.order()) throw std::invalid_argument("RS length exceeds field order");
  if (points.size() != n) throw std::invalid_argument("need one evaluation point per coordinate");
  std::unordered_set<uint32_t> seen(points.begin(), points.end());
  if (seen.size() != n) throw std::invalid_argument("evaluation points must be distinct");
  Matrix gen(f, k, n);
  for (size_t c = 0; c < n; ++c) {
    uint32_t acc = 1;
    for (size_t e = 0; e < k; ++e) {
      gen(e, c) = acc;
      acc = f.mul(acc, points[c]);
    }
  }
  return RsCode{LinearCode(f, std::move(gen)), std::move(points)};
}

/// Consecutive powers 1, g, g^2, ... of the primitive element.
inline std::vector<uint32_t> default_eval_points(const Field& f, size_t n) {
  if (n > f.order() - 1) throw std::invalid_argument("not enough nonzero points");
  std::vector<uint32_t> out(n);
  const uint32_t g = f.primitive_element().index();
  uint32_t acc = 1;
  for (size_t i = 0; i < n; ++i) {
    out[i] = acc;
    acc = f.mul(acc, g);
  }
  return out;
}

struct RsDecodeResult {
  bool ok = false;
  std::vector<uint32_t> codeword;
  std::vector<uint32_t> message;  // coefficients of f, length k
};

/// Bounded-minimum-distance decoding up to floor((d-1)/2) symbol errors,
/// via the extended-Euclidean key equation on the interpolation of the
/// received word (Gao-style). Returns the unique codeword within the BMD
/// radius if one exists, otherwise reports failure. The distance of the
/// result against the received word is re-checked, so an output is never
/// outside the radius.
inline RsDecodeResult rs_bmd_decode(const RsCode& rs, std::span<const uint32_t> received) {
  const size_t n = rs.length(), k = rs.dimension();
  if (received.size() != n) throw std::invalid_argument("received word length mismatch");
  const Field& f = rs.code.field();
  const size_t radius = (n - k) / 2;

  Poly r0 = Poly::from_roots(f, rs.points);
  Poly r1 = interpolate(f, rs.points, received);
  Poly v0 = Poly::zero(f);
  Poly v1 = Poly::constant(f, 1);
  // stop at the first remainder of degree < (n + k) / 2
  while (!r1.is_zero() && 2 * r1.degree() >= static_cast<long>(n + k)) {
    auto [q, rem] = r0.divmod(r1);
    Poly vn = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    v0 = std::move(v1);
    v1 = std::move(vn);
  }
  if (v1.is_zero()) return {};
  auto [cand, rem] = r1.divmod(v1);
  if (!rem.is_zero() || cand.degree() >= static_cast<long>(k)) return {};

  RsDecodeResult out;
  out.codeword.resize(n);
  size_t dist = 0;
  for (size_t i = 0; i < n; ++i) {
    out.codeword[i] = cand.eval(rs.points[i]);
    dist += (out.codeword[i] != received[i]);
  }
  if (dist > radius) return {};
  out.message.resize(k, 0);
  for (size_t i = 0; i < k; ++i) out.message[i] = cand.coeff(i);
  out.ok = true;
  return out;
}

}  // namespace coverlrc

#endif  // COVERLRC_REED_SOLOMON_HPP
