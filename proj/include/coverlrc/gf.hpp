#ifndef COVERLRC_GF_HPP
#define COVERLRC_GF_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coverlrc {

namespace detail {

inline bool is_prime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Dense polynomials over GF(p), coefficients ascending. Only used for modulus
// selection/validation at field construction time, so clarity over speed.
inline void poly_trim(std::vector<uint32_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a by a monic divisor, both over GF(p).
inline std::vector<uint32_t> poly_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& divisor, uint32_t p) {
  const size_t dd = divisor.size() - 1;
  while (a.size() > dd) {
    const uint32_t lead = a.back();
    const size_t shift = a.size() - 1 - dd;
    if (lead != 0) {
      for (size_t i = 0; i < dd; ++i) {
        const uint32_t sub = static_cast<uint32_t>(static_cast<uint64_t>(lead) * divisor[i] % p);
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
    }
    a.pop_back();
  }
  poly_trim(a);
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool poly_is_irreducible(const std::vector<uint32_t>& poly, uint32_t p) {
  const size_t m = poly.size() - 1;
  if (m == 1) return true;
  for (size_t d = 1; 2 * d <= m; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t c = 0; c < count; ++c) {
      std::vector<uint32_t> div(d + 1, 0);
      uint64_t v = c;
      for (size_t i = 0; i < d; ++i) {
        div[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      div[d] = 1;
      if (poly_mod(poly, div, p).empty()) return false;
    }
  }
  return true;
}

inline std::vector<uint64_t> prime_factors(uint64_t v) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace detail

class FieldElement;

/// Exact arithmetic in GF(p^m), p prime, m >= 1, p^m <= 2^20.
///
/// Elements are addressed by their canonical index in [0, q): the coefficient
/// vector (c_0, ..., c_{m-1}) of the polynomial representative read as the
/// base-p integer sum_i c_i p^i (lowest degree least significant). Index 0 is
/// zero, index 1 is one. Two elements are equal iff their indices are.
///
/// A Field is immutable after construction; copies share state and are cheap.
/// For p = 2 and m <= 16 multiplication runs on log/antilog tables, otherwise
/// on generic polynomial arithmetic.
class Field {
 public:
  static constexpr uint32_t kMaxOrder = 1u << 20;

  /// Field with the default modulus: the monic irreducible polynomial of
  /// degree m whose coefficient index (base-p value of c_0..c_{m-1}) is
  /// smallest. Deterministic, so serialized data is stable across runs.
  Field(uint32_t p, uint32_t m) : impl_(build(p, m, {})) {}

  /// Field with a caller-supplied monic modulus (coefficients ascending,
  /// length m+1). Throws if the polynomial is not monic irreducible.
  Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) : impl_(build(p, m, std::move(modulus))) {}

  uint32_t characteristic() const { return impl_->p; }
  uint32_t extension_degree() const { return impl_->m; }
  uint32_t order() const { return impl_->q; }
  const std::vector<uint32_t>& modulus() const { return impl_->modulus; }

  bool same(const Field& o) const {
    return impl_ == o.impl_ ||
           (impl_->p == o.impl_->p && impl_->m == o.impl_->m && impl_->modulus == o.impl_->modulus);
  }
  bool operator==(const Field& o) const { return same(o); }
  bool operator!=(const Field& o) const { return !same(o); }

  std::string label() const {
    if (impl_->m == 1) return "GF(" + std::to_string(impl_->p) + ")";
    return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->m) + ")";
  }

  // ---- index-level arithmetic ------------------------------------------

  uint32_t add(uint32_t a, uint32_t b) const {
    const auto& im = *impl_;
    if (im.p == 2) return a ^ b;
    if (im.m == 1) return (a + b) % im.p;
    uint32_t out = 0;
    for (uint32_t i = 0; i < im.m; ++i) {
      out += (a % im.p + b % im.p) % im.p * im.ppow[i];
      a /= im.p;
      b /= im.p;
    }
    return out;
  }

  uint32_t neg(uint32_t a) const {
    const auto& im = *impl_;
    if (im.p == 2) return a;
    if (im.m == 1) return a == 0 ? 0 : im.p - a;
    uint32_t out = 0;
    for (uint32_t i = 0; i < im.m; ++i) {
      const uint32_t d = a % im.p;
      out += (d == 0 ? 0 : im.p - d) * im.ppow[i];
      a /= im.p;
    }
    return out;
  }

  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

  uint32_t mul(uint32_t a, uint32_t b) const {
    const auto& im = *impl_;
    if (a == 0 || b == 0) return 0;
    if (im.tables) return im.exp[im.log[a] + im.log[b]];
    return mul_no_tables(im, a, b);
  }

  uint32_t inv(uint32_t a) const {
    const auto& im = *impl_;
    if (a == 0) throw std::invalid_argument("division by zero in " + label());
    if (im.tables) return im.exp[(im.q - 1) - im.log[a]];
    // Fermat: a^(q-2)
    return pow(a, static_cast<int64_t>(im.q) - 2);
  }

  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  uint32_t pow(uint32_t a, int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    if (a == 0) return e == 0 ? 1u : 0u;
    uint32_t base = a, out = 1;
    while (e > 0) {
      if (e & 1) out = mul(out, base);
      base = mul(base, base);
      e >>= 1;
    }
    return out;
  }

  // ---- elements ---------------------------------------------------------

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(uint32_t index) const;

  /// Smallest-index generator of the multiplicative group. Requires q >= 3.
  FieldElement primitive_element() const;

  std::vector<uint32_t> coefficients(uint32_t index) const {
    const auto& im = *impl_;
    std::vector<uint32_t> out(im.m);
    for (uint32_t i = 0; i < im.m; ++i) {
      out[i] = index % im.p;
      index /= im.p;
    }
    return out;
  }

  uint32_t from_coefficients(const std::vector<uint32_t>& coeffs) const {
    const auto& im = *impl_;
    if (coeffs.size() > im.m) throw std::invalid_argument("coefficient vector longer than extension degree");
    uint32_t out = 0;
    for (size_t i = coeffs.size(); i-- > 0;) out = out * im.p + coeffs[i] % im.p;
    return out;
  }

 private:
  struct Impl {
    uint32_t p = 0, m = 0, q = 0;
    std::vector<uint32_t> modulus;  // monic, coefficients ascending, size m+1
    std::vector<uint32_t> ppow;     // p^0 .. p^(m-1)
    bool tables = false;
    uint32_t primitive = 0;  // 0 when q < 3
    std::vector<uint32_t> exp;  // exp[i] = g^i for i in [0, 2(q-1))
    std::vector<uint32_t> log;  // log[exp[i]] = i, log[0] unused
  };

  std::shared_ptr<const Impl> impl_;

  // Generic polynomial multiply-and-reduce; needs only p, m, modulus of `im`.
  static uint32_t mul_generic(const Impl& im, uint32_t a, uint32_t b) {
    const uint32_t m = im.m, p = im.p;
    uint64_t prod[2 * 32 - 1] = {0};
    uint32_t da[32], db[32];
    for (uint32_t i = 0; i < m; ++i) {
      da[i] = a % p;
      a /= p;
      db[i] = b % p;
      b /= p;
    }
    for (uint32_t i = 0; i < m; ++i) {
      if (da[i] == 0) continue;
      for (uint32_t j = 0; j < m; ++j) prod[i + j] += static_cast<uint64_t>(da[i]) * db[j];
    }
    for (uint32_t i = 0; i < 2 * m - 1; ++i) prod[i] %= p;
    // reduce x^i for i >= m via x^m = -modulus[0..m-1]
    for (uint32_t i = 2 * m - 2; i >= m; --i) {
      const uint64_t c = prod[i];
      if (c != 0) {
        prod[i] = 0;
        for (uint32_t t = 0; t < m; ++t) {
          prod[i - m + t] = (prod[i - m + t] + c * (p - im.modulus[t])) % p;
        }
      }
      if (i == m) break;
    }
    uint32_t out = 0;
    for (uint32_t i = m; i-- > 0;) out = out * p + static_cast<uint32_t>(prod[i]);
    return out;
  }

  static std::shared_ptr<const Impl> build(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
    if (!detail::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
      q *= p;
      if (q > kMaxOrder) throw std::invalid_argument("field order exceeds the 2^20 cap");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = static_cast<uint32_t>(q);
    impl->ppow.resize(m);
    impl->ppow[0] = 1;
    for (uint32_t i = 1; i < m; ++i) impl->ppow[i] = impl->ppow[i - 1] * p;

    if (modulus.empty()) {
      impl->modulus = default_modulus(p, m);
    } else {
      if (modulus.size() != static_cast<size_t>(m) + 1 || modulus.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree m");
      for (auto& c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
      if (!detail::poly_is_irreducible(modulus, p)) throw std::invalid_argument("supplied modulus is reducible");
      impl->modulus = std::move(modulus);
    }

    if (impl->q >= 3) {
      impl->primitive = find_primitive(*impl);
      if (p == 2 && m >= 2 && m <= 16) {
        build_tables(*impl);
        impl->tables = true;
      }
    }
    return impl;
  }

  static std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m) {
    if (m == 1) return {0, 1};  // x; GF(p)[x]/(x) == GF(p)
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t c = 0; c < count; ++c) {
      std::vector<uint32_t> cand(m + 1, 0);
      uint64_t v = c;
      for (uint32_t i = 0; i < m; ++i) {
        cand[i] = static_cast<uint32_t>(v % p);
        v /= p;
      }
      cand[m] = 1;
      if (detail::poly_is_irreducible(cand, p)) return cand;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
  }

  static uint32_t mul_no_tables(const Impl& im, uint32_t a, uint32_t b) {
    if (a == 0 || b == 0) return 0;
    if (im.m == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % im.p);
    return mul_generic(im, a, b);
  }

  static uint32_t pow_no_tables(const Impl& im, uint32_t a, uint64_t e) {
    uint32_t base = a, out = 1;
    while (e > 0) {
      if (e & 1) out = mul_no_tables(im, out, base);
      base = mul_no_tables(im, base, base);
      e >>= 1;
    }
    return out;
  }

  static uint32_t find_primitive(const Impl& im) {
    const uint64_t group = im.q - 1;
    const auto primes = detail::prime_factors(group);
    for (uint32_t cand = 2; cand < im.q; ++cand) {
      bool ok = true;
      for (uint64_t ell : primes) {
        if (pow_no_tables(im, cand, group / ell) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return cand;
    }
    throw std::logic_error("no generator found");  // unreachable for valid fields
  }

  static void build_tables(Impl& im) {
    const uint32_t n = im.q - 1;
    im.exp.resize(2 * n);
    im.log.assign(im.q, 0);
    uint32_t acc = 1;
    for (uint32_t i = 0; i < n; ++i) {
      im.exp[i] = acc;
      im.log[acc] = i;
      acc = mul_no_tables(im, acc, im.primitive);
    }
    for (uint32_t i = n; i < 2 * n; ++i) im.exp[i] = im.exp[i - n];
  }
};

/// Immutable element of a Field; value semantics, canonical representation.
class FieldElement {
 public:
  FieldElement(const Field& f, uint32_t index) : field_(f), idx_(index) {
    if (index >= f.order()) throw std::invalid_argument("element index out of range for " + f.label());
  }

  uint32_t index() const { return idx_; }
  const Field& field() const { return field_; }
  bool is_zero() const { return idx_ == 0; }

  FieldElement operator+(const FieldElement& o) const { return bin(o, field_.add(idx_, o.idx_)); }
  FieldElement operator-(const FieldElement& o) const { return bin(o, field_.sub(idx_, o.idx_)); }
  FieldElement operator*(const FieldElement& o) const { return bin(o, field_.mul(idx_, o.idx_)); }
  FieldElement operator/(const FieldElement& o) const { return bin(o, field_.div(idx_, o.idx_)); }
  FieldElement operator-() const { return FieldElement(field_, field_.neg(idx_)); }

  FieldElement inverse() const { return FieldElement(field_, field_.inv(idx_)); }
  FieldElement pow(int64_t e) const { return FieldElement(field_, field_.pow(idx_, e)); }

  bool operator==(const FieldElement& o) const { return field_.same(o.field_) && idx_ == o.idx_; }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  FieldElement bin(const FieldElement& o, uint32_t result) const {
    if (!field_.same(o.field())) throw std::invalid_argument("elements belong to different fields");
    return FieldElement(field_, result);
  }

  Field field_;
  uint32_t idx_;
};

inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }
inline FieldElement Field::element(uint32_t index) const { return FieldElement(*this, index); }

inline FieldElement Field::primitive_element() const {
  if (order() < 3) throw std::invalid_argument("multiplicative group of " + label() + " is trivial");
  return FieldElement(*this, impl_->primitive);
}

}  // namespace coverlrc

#endif  // COVERLRC_GF_HPP
