#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace colorlie {

/// An element of F_{p^k}. The raw value is the base-p number whose digits are
/// the coefficients of the polynomial representative (little-endian), so the
/// prime subfield is {0, ..., p-1}.
struct Scalar {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Scalar, Scalar) = default;
  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  static constexpr std::uint32_t kMaxSize = 1u << 20;

  /// Builds F_{p^k}. Without a modulus the first monic irreducible polynomial
  /// of degree k is used, scanning x^k + c_{k-1}x^{k-1} + ... + c_0 with the
  /// coefficient vector read as a base-p number (c_{k-1} most significant).
  static FieldPtr make(int p, int k = 1,
                       std::optional<std::vector<int>> modulus = std::nullopt);

  int p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t size() const { return q_; }
  /// Monic modulus, little-endian, length k+1.
  const std::vector<int>& modulus() const { return modulus_; }

  Scalar zero() const { return {0}; }
  Scalar one() const { return {1}; }
  Scalar from_int(long long n) const;
  Scalar from_coeffs(const std::vector<int>& c) const;
  std::vector<int> coeffs(Scalar a) const;
  bool in_prime_field(Scalar a) const { return a.v < static_cast<std::uint32_t>(p_); }
  /// Integer value of a prime-field element.
  int to_int(Scalar a) const { return static_cast<int>(a.v); }

  Scalar add(Scalar a, Scalar b) const {
    if (k_ == 1) {
      std::uint32_t s = a.v + b.v;
      return {s >= static_cast<std::uint32_t>(p_) ? s - p_ : s};
    }
    if (!add_.empty()) return {add_[a.v * q_ + b.v]};
    return add_slow(a, b);
  }
  Scalar neg(Scalar a) const {
    if (k_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
    return {neg_[a.v]};
  }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const {
    if (a.v == 0 || b.v == 0) return {0};
    if (k_ == 1) return {static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.v) * b.v % static_cast<std::uint32_t>(p_))};
    std::uint32_t s = log_[a.v] + log_[b.v];
    if (s >= q_ - 1) s -= q_ - 1;
    return {exp_[s]};
  }
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, long long e) const;
  /// Multiplicative order of a nonzero element.
  std::uint64_t order(Scalar a) const;
  /// Unique b with b^p = a (Frobenius is bijective on a finite field).
  Scalar pth_root(Scalar a) const;

  /// All elements in raw order.
  std::vector<Scalar> elements() const;
  /// A fixed primitive element.
  Scalar generator() const { return {exp_.size() > 1 ? exp_[1] : 1u}; }

  /// Wire format: coefficient list [c_0, ..., c_{k-1}].
  std::string to_string(Scalar a) const;

  bool same_as(const Field& o) const {
    return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
  }

 private:
  Field() = default;
  Scalar add_slow(Scalar a, Scalar b) const;
  Scalar mul_poly(Scalar a, Scalar b) const;

  int p_ = 0;
  int k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> add_;
};

bool is_prime(long long n);

/// Irreducibility of a polynomial over F_p (little-endian integer coefficients).
bool is_irreducible_mod_p(const std::vector<int>& poly, int p);

}  // namespace colorlie
