#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "colorlie/algebra/color_algebra.hpp"
#include "colorlie/envelope/reduced_spec.hpp"

namespace colorlie {

/// PBW exponent vector, one byte per ordered basis index.
using Monomial = std::string;

Monomial make_monomial(const std::vector<int>& exps);
std::vector<int> exponents(const Monomial& m);
int total_degree(const Monomial& m);

/// Linear combination of PBW monomials, sorted by monomial, no zero
/// coefficients. owner is the id of the Envelope that produced it.
struct NormalElement {
  std::uint64_t owner = 0;
  std::vector<std::pair<Monomial, Scalar>> terms;

  bool is_zero() const { return terms.empty(); }
  Scalar coeff(const Monomial& m) const;
  friend bool operator==(const NormalElement& a, const NormalElement& b) { return a.terms == b.terms; }
};

/// Normal-form engine for U(g) (universal) or u_chi(g) (reduced).
///
/// Products are computed by right multiplication with one generator at a
/// time; a . x_j with a out of order past j is rewritten through the last
/// factor x_i of a. Results of monomial-times-generator steps are memoized,
/// so an Envelope must not be shared across threads; build one per thread
/// from a shared spec instead.
class Envelope {
 public:
  static Envelope universal(AlgebraPtr A);
  static Envelope reduced(ReducedSpecPtr spec);

  const ColorAlgebra& algebra() const { return *A_; }
  const AlgebraPtr& algebra_ptr() const { return A_; }
  const Field& field() const { return A_->field(); }
  bool is_reduced() const { return spec_ != nullptr; }
  const ReducedSpecPtr& spec() const { return spec_; }
  /// Per index exponent bound; 0 means unbounded.
  const std::vector<int>& caps() const { return caps_; }
  std::uint64_t id() const { return id_; }
  std::size_t dim() const { return A_->dim(); }

  NormalElement zero() const;
  NormalElement one() const;
  NormalElement scalar(Scalar c) const;
  NormalElement generator(int i) const;
  NormalElement from_vec(const Vec& x) const;
  /// The ordered product prod_i x_i^{e_i}, normalized (e may exceed caps).
  NormalElement monomial(const std::vector<int>& e) const;
  /// Wraps a monomial already within caps.
  NormalElement term(const Monomial& m, Scalar c) const;

  NormalElement add(const NormalElement& a, const NormalElement& b) const;
  NormalElement sub(const NormalElement& a, const NormalElement& b) const;
  NormalElement scale(Scalar c, const NormalElement& a) const;
  /// Throws MixedSpecs if an operand belongs to another envelope.
  NormalElement product(const NormalElement& u, const NormalElement& v) const;
  NormalElement power(const NormalElement& u, int n) const;
  NormalElement times_generator(const NormalElement& u, int j) const;

  /// Gamma-degree of a monomial.
  int degree(const Monomial& m) const;
  /// The monomial as an ordered word of basis indices.
  std::vector<int> word(const Monomial& m) const;
  std::string format(const NormalElement& u) const;

  /// Number of memoized monomial-times-generator results.
  std::size_t cache_size() const;

 private:
  Envelope(AlgebraPtr A, ReducedSpecPtr spec, bool free_J);
  void check_owner(const NormalElement& u) const;
  const NormalElement& mul_gen(const Monomial& a, int j) const;
  const NormalElement& replacement(int j) const;
  NormalElement build_replacement(int j) const;

  AlgebraPtr A_;
  ReducedSpecPtr spec_;
  std::vector<int> caps_;
  std::uint64_t id_;
  mutable std::vector<std::unordered_map<Monomial, NormalElement>> memo_;
  mutable std::vector<std::unique_ptr<NormalElement>> repl_;
};

/// Accumulates scaled terms; zero coefficients are dropped on finish.
class TermAccumulator {
 public:
  explicit TermAccumulator(const Field& F) : F_(F) {}
  void add(const Monomial& m, Scalar c);
  void add(const NormalElement& u, Scalar c);
  NormalElement finish(std::uint64_t owner);

 private:
  const Field& F_;
  std::unordered_map<Monomial, Scalar> acc_;
};

}  // namespace colorlie
