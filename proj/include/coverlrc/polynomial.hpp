#ifndef COVERLRC_POLYNOMIAL_HPP
#define COVERLRC_POLYNOMIAL_HPP

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coverlrc/gf.hpp"

namespace coverlrc {

/// Dense univariate polynomial over a Field, coefficients ascending.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  explicit Poly(const Field& f) : field_(f) {}
  Poly(const Field& f, std::vector<uint32_t> coeffs) : field_(f), c_(std::move(coeffs)) { trim(); }

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly constant(const Field& f, uint32_t v) { return Poly(f, {v}); }
  /// x - root
  static Poly linear_root(const Field& f, uint32_t root) { return Poly(f, {f.neg(root), 1}); }

  static Poly from_roots(const Field& f, std::span<const uint32_t> roots) {
    Poly out = constant(f, 1);
    for (uint32_t r : roots) out = out * linear_root(f, r);
    return out;
  }

  const Field& field() const { return field_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }

  uint32_t eval(uint32_t x) const {
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
  }

  Poly operator+(const Poly& o) const {
    std::vector<uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(out));
  }

  Poly operator-(const Poly& o) const {
    std::vector<uint32_t> out(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(out));
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<uint32_t> out(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (size_t j = 0; j < o.c_.size(); ++j)
        out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(out));
  }

  Poly scaled(uint32_t s) const {
    std::vector<uint32_t> out(c_);
    for (auto& v : out) v = field_.mul(v, s);
    return Poly(field_, std::move(out));
  }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly rem = *this;
    if (rem.degree() < divisor.degree()) return {Poly(field_), rem};
    std::vector<uint32_t> q(rem.degree() - divisor.degree() + 1, 0);
    const uint32_t lead_inv = field_.inv(divisor.c_.back());
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
      const size_t shift = rem.degree() - divisor.degree();
      const uint32_t factor = field_.mul(rem.c_.back(), lead_inv);
      q[shift] = factor;
      for (size_t i = 0; i < divisor.c_.size(); ++i) {
        rem.c_[shift + i] = field_.sub(rem.c_[shift + i], field_.mul(factor, divisor.c_[i]));
      }
      rem.trim();
    }
    return {Poly(field_, std::move(q)), rem};
  }

  bool operator==(const Poly& o) const { return field_.same(o.field_) && c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Field field_;
  std::vector<uint32_t> c_;
};

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
inline Poly interpolate(const Field& f, std::span<const uint32_t> xs, std::span<const uint32_t> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolation point count mismatch");
  const Poly full = Poly::from_roots(f, xs);
  Poly acc(f);
  for (size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) continue;
    auto [qi, rem] = full.divmod(Poly::linear_root(f, xs[i]));
    // rem is zero by construction
    const uint32_t denom = qi.eval(xs[i]);
    acc = acc + qi.scaled(f.div(ys[i], denom));
  }
  return acc;
}

}  // namespace coverlrc

#endif  // COVERLRC_POLYNOMIAL_HPP
