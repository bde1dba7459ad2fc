#pragma once

// Exact arithmetic in F_p and F_{p^k} for odd p with q = p^k <= 2^16.
//
// Elements are encoded as integers ("codes") 0 <= code < q: the element
// c_0 + c_1 x + ... + c_{k-1} x^{k-1} of F_p[x]/(f) has code sum c_i p^i.
// Code order is the fixed enumeration order of the field used everywhere
// (vector enumeration, "least element" searches, canonical outputs).

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ucsiac/error.hpp"

namespace ucs {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factors of n in increasing order, without multiplicity.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over F_p, coefficients low-first.
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    std::int64_t tmp = t - quotient * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quotient * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

/// Remainder of a modulo b (b nonzero) over F_p.
inline Poly poly_mod(Poly a, Poly b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    poly_trim(a);
  }
  return a;
}

/// Monic polynomial of the given degree whose lower coefficients encode idx in base p.
inline Poly monic_from_index(std::uint64_t idx, std::uint32_t degree, std::uint32_t p) {
  Poly f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  f[degree] = 1;
  return f;
}

/// Trial division by every monic polynomial of degree 1..deg(f)/2.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
    }
  }
  return true;
}

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  Poly modulus;                      // monic, low-first, size k+1; empty when k == 1
  std::vector<Scalar> inv_table;     // inv_table[a] = a^{-1}, inv_table[0] = 0
  std::vector<Scalar> neg_table;
  std::vector<Scalar> exp_table;     // k > 1: powers of a primitive element, size q-1
  std::vector<std::uint32_t> log_table;
  std::vector<std::uint32_t> pow_p;  // p^i for i <= k

  Scalar add(Scalar a, Scalar b) const {
    if (k == 1) {
      const Scalar s = a + b;
      return s >= p ? s - p : s;
    }
    Scalar out = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
      const std::uint32_t da = a % p, db = b % p;
      const std::uint32_t s = da + db;
      out += (s >= p ? s - p : s) * pow_p[i];
      a /= p;
      b /= p;
    }
    return out;
  }

  Scalar neg(Scalar a) const { return neg_table[a]; }

  Scalar sub(Scalar a, Scalar b) const { return add(a, neg_table[b]); }

  Scalar mul(Scalar a, Scalar b) const {
    if (k == 1) return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p);
    if (a == 0 || b == 0) return 0;
    std::uint32_t e = log_table[a] + log_table[b];
    if (e >= q - 1) e -= q - 1;
    return exp_table[e];
  }

  // Schoolbook multiplication modulo the defining polynomial; used only to
  // build the log tables.
  Scalar mul_slow(Scalar a, Scalar b) const {
    Poly pa(k), pb(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      pa[i] = a % p;
      a /= p;
      pb[i] = b % p;
      b /= p;
    }
    Poly prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p);
    const Poly rem = poly_mod(prod, modulus, p);
    Scalar out = 0;
    for (std::size_t i = 0; i < rem.size(); ++i) out += rem[i] * pow_p[i];
    return out;
  }
};

/// Builds a field; odd_only = false admits characteristic 2 for internal
/// permutation-group bookkeeping (AGL(1,t) point labels).
inline std::shared_ptr<const FieldData> make_field_data(std::uint32_t p, std::uint32_t k,
                                                        const std::optional<Poly>& modulus,
                                                        bool odd_only) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (odd_only && p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw Error(ErrorCode::FieldTooLarge, "field order exceeds 2^16");
  }
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->k = k;
  d->q = static_cast<std::uint32_t>(q);
  d->pow_p.resize(k + 1);
  d->pow_p[0] = 1;
  for (std::uint32_t i = 1; i <= k; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;

  if (k > 1) {
    if (modulus) {
      Poly f = *modulus;
      if (f.size() != k + 1 || f.back() != 1)
        throw Error(ErrorCode::InvalidModulus, "modulus must be monic of degree " + std::to_string(k));
      for (auto c : f)
        if (c >= p) throw Error(ErrorCode::InvalidModulus, "modulus coefficient out of range");
      if (!is_irreducible(f, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
      d->modulus = f;
    } else {
      const std::uint64_t count = q;  // p^k candidates for the lower coefficients
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(idx, k, p);
        if (is_irreducible(f, p)) {
          d->modulus = std::move(f);
          break;
        }
      }
    }
  } else if (modulus) {
    const Poly& f = *modulus;
    if (f.size() != 2 || f.back() != 1 || f[0] >= p)
      throw Error(ErrorCode::InvalidModulus, "modulus for a prime field must be monic linear");
  }

  d->neg_table.resize(q);
  for (Scalar a = 0; a < q; ++a) {
    Scalar out = 0, t = a;
    for (std::uint32_t i = 0; i < k; ++i) {
      const std::uint32_t c = t % p;
      out += ((p - c) % p) * d->pow_p[i];
      t /= p;
    }
    d->neg_table[a] = out;
  }

  d->inv_table.assign(q, 0);
  if (k == 1) {
    for (Scalar a = 1; a < q; ++a) d->inv_table[a] = inv_mod(a, p);
  } else {
    // Smallest code of multiplicative order q-1 becomes the log base.
    const std::uint32_t n = static_cast<std::uint32_t>(q - 1);
    for (Scalar g = 2; g < q; ++g) {
      std::vector<Scalar> powers;
      powers.reserve(n);
      Scalar x = 1;
      bool primitive = true;
      for (std::uint32_t e = 0; e < n; ++e) {
        if (e > 0 && x == 1) {
          primitive = false;
          break;
        }
        powers.push_back(x);
        x = d->mul_slow(x, g);
      }
      if (!primitive || x != 1) continue;
      d->exp_table = std::move(powers);
      d->log_table.assign(q, 0);
      for (std::uint32_t e = 0; e < n; ++e) d->log_table[d->exp_table[e]] = e;
      break;
    }
    for (Scalar a = 1; a < q; ++a) d->inv_table[a] = d->exp_table[(n - d->log_table[a]) % n];
  }
  return d;
}

}  // namespace detail

class FieldElem;

/// A finite field of odd characteristic. Cheap to copy; immutable.
class Field {
 public:
  Field() = default;

  /// F_{p^k}. Without an explicit modulus the least monic irreducible of
  /// degree k (ordered by the code of its lower coefficients) is used.
  static Field make(std::uint32_t p, std::uint32_t k = 1,
                    const std::optional<std::vector<std::uint32_t>>& modulus = std::nullopt) {
    return Field(detail::make_field_data(p, k, modulus, true));
  }

  /// Also admits characteristic 2; only for labelling points of F_t.
  static Field any_characteristic(std::uint32_t p, std::uint32_t k = 1) {
    return Field(detail::make_field_data(p, k, std::nullopt, false));
  }

  /// The field with q elements, q an odd prime power.
  static Field of_order(std::uint64_t q) {
    if (q < 3) throw Error(ErrorCode::NotPrime, "field order must be an odd prime power");
    const auto primes = detail::prime_factors(q);
    if (primes.size() != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    std::uint32_t k = 0;
    for (std::uint64_t t = q; t > 1; t /= primes[0]) ++k;
    return make(static_cast<std::uint32_t>(primes[0]), k);
  }

  bool valid() const { return d_ != nullptr; }
  std::uint32_t characteristic() const { return d_->p; }
  std::uint32_t degree() const { return d_->k; }
  std::uint32_t order() const { return d_->q; }
  bool is_prime_field() const { return d_->k == 1; }
  /// Monic modulus, low-first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar add(Scalar a, Scalar b) const { return d_->add(a, b); }
  Scalar sub(Scalar a, Scalar b) const { return d_->sub(a, b); }
  Scalar neg(Scalar a) const { return d_->neg(a); }
  Scalar mul(Scalar a, Scalar b) const { return d_->mul(a, b); }

  Scalar inv(Scalar a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return d_->inv_table[a];
  }

  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  /// a^e; negative exponents go through the inverse.
  Scalar pow(Scalar a, std::int64_t e) const {
    if (e < 0) {
      a = inv(a);
      e = -e;
    }
    Scalar result = 1;
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  /// Image of an integer in the prime subfield.
  Scalar from_int(std::int64_t n) const {
    const std::int64_t p = d_->p;
    return static_cast<Scalar>(((n % p) + p) % p);
  }

  /// Element from its coefficient vector (low-first, length <= k).
  Scalar from_coeffs(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() > d_->k)
      throw Error(ErrorCode::InvalidArgument, "too many coefficients for field element");
    Scalar out = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += from_int(coeffs[i]) * d_->pow_p[i];
    return out;
  }

  std::vector<std::uint32_t> coeffs(Scalar a) const {
    std::vector<std::uint32_t> out(d_->k);
    for (std::uint32_t i = 0; i < d_->k; ++i) {
      out[i] = a % d_->p;
      a /= d_->p;
    }
    return out;
  }

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Scalar a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "zero has no multiplicative order");
    std::uint64_t n = d_->q - 1;
    for (auto ell : detail::prime_factors(d_->q - 1)) {
      while (n % ell == 0 && pow(a, static_cast<std::int64_t>(n / ell)) == 1) n /= ell;
    }
    return n;
  }

  FieldElem elem(std::int64_t n) const;
  FieldElem elem_from_code(Scalar code) const;

  friend bool operator==(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->p == b.d_->p && a.d_->k == b.d_->k && a.d_->modulus == b.d_->modulus;
  }

  std::string name() const {
    if (d_->k == 1) return "F_" + std::to_string(d_->p);
    return "F_" + std::to_string(d_->p) + "^" + std::to_string(d_->k);
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

inline void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

/// A field element bound to its field. Mixed-field arithmetic throws.
class FieldElem {
 public:
  FieldElem(Field field, Scalar code) : field_(std::move(field)), code_(code) {}

  const Field& field() const { return field_; }
  Scalar code() const { return code_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(code_); }
  bool is_zero() const { return code_ == 0; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.add(a.code_, b.code_)};
  }
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.sub(a.code_, b.code_)};
  }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.mul(a.code_, b.code_)};
  }
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    require_same_field(a.field_, b.field_);
    return {a.field_, a.field_.div(a.code_, b.code_)};
  }
  FieldElem operator-() const { return {field_, field_.neg(code_)}; }
  FieldElem inv() const { return {field_, field_.inv(code_)}; }
  FieldElem pow(std::int64_t e) const { return {field_, field_.pow(code_, e)}; }

  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }

 private:
  Field field_;
  Scalar code_;
};

inline FieldElem Field::elem(std::int64_t n) const { return {*this, from_int(n)}; }

inline FieldElem Field::elem_from_code(Scalar code) const {
  if (code >= order()) throw Error(ErrorCode::IndexOutOfRange, "element code out of range");
  return {*this, code};
}

/// Least element (in code order) of multiplicative order exactly n.
inline FieldElem element_of_order(const Field& field, std::uint64_t n) {
  const std::uint64_t group = field.order() - 1;
  if (n == 0 || group % n != 0)
    throw Error(ErrorCode::OrderDoesNotDivide,
                std::to_string(n) + " does not divide " + std::to_string(group));
  for (Scalar a = 1; a < field.order(); ++a) {
    if (field.multiplicative_order(a) == n) return {field, a};
  }
  throw Error(ErrorCode::OrderDoesNotDivide, "no element of the requested order");
}

}  // namespace ucs
