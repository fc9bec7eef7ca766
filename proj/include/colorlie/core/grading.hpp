#pragma once

#include <memory>
#include <string>
#include <vector>

#include "colorlie/core/field.hpp"

namespace colorlie {

/// Finite abelian group Z/n_1 x ... x Z/n_r. Elements are addressed by a
/// mixed-radix index with the first coordinate least significant; index 0 is
/// the identity.
class GradedGroup {
 public:
  GradedGroup() = default;
  explicit GradedGroup(std::vector<int> cyclic_orders);

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  int size() const { return size_; }

  int index(const std::vector<int>& element) const;
  std::vector<int> element(int index) const;
  int add(int a, int b) const;
  int neg(int a) const;
  int mul(long long n, int a) const;
  int order(int a) const;

 private:
  std::vector<int> orders_;
  int size_ = 1;
};

using BicharTable = std::vector<std::vector<Scalar>>;

struct BicharReport {
  std::vector<std::string> violations;
  std::vector<int> even;  // indices of Gamma^+
  std::vector<int> odd;   // indices of Gamma^-
  bool ok() const { return violations.empty(); }
};

/// Checks skew-symmetry and additivity on generators. Throws ZeroEntry.
BicharReport bichar_validate(const Field& F, const GradedGroup& G, const BicharTable& table);

/// Biadditive extension of a generator table; does not require validity.
Scalar color_sign(const Field& F, const GradedGroup& G, const BicharTable& table,
                  const std::vector<int>& a, const std::vector<int>& b);

class Grading;
using GradingPtr = std::shared_ptr<const Grading>;

/// A validated bicharacter with the full sign table cached.
class Grading {
 public:
  /// Throws InvalidInput listing violations if the table is not a bicharacter.
  static GradingPtr make(FieldPtr F, GradedGroup G, BicharTable table);
  /// Trivial group, sign 1.
  static GradingPtr trivial(FieldPtr F);
  /// Z/2 with the super sign.
  static GradingPtr super(FieldPtr F);

  const Field& field() const { return *F_; }
  const FieldPtr& field_ptr() const { return F_; }
  const GradedGroup& group() const { return G_; }
  const BicharTable& table() const { return table_; }

  Scalar sign(int a, int b) const { return sign_[static_cast<std::size_t>(a) * G_.size() + b]; }
  bool is_odd(int a) const { return odd_[a]; }
  int add(int a, int b) const { return G_.add(a, b); }
  int neg(int a) const { return G_.neg(a); }

 private:
  FieldPtr F_;
  GradedGroup G_;
  BicharTable table_;
  std::vector<Scalar> sign_;
  std::vector<bool> odd_;
};

}  // namespace colorlie
