#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colorlie/envelope/envelope.hpp"

namespace colorlie {

struct CentralCheck {
  NormalElement z;                  // x^p - x^[p]
  std::vector<std::string> report;  // basis elements y where z fails to color-commute
};

/// Forms z = x^p - x^[p] for an even basis element x in a universal envelope
/// and checks z y = eps(p deg x, deg y) y z for every basis y.
CentralCheck central_check(const Envelope& U, int x);

/// prod over even indices outside J of p, over J of p*s, over odd of 2.
std::uint64_t uchi_count(const ReducedAlgebraSpec& spec);

/// All capped exponent vectors in increasing monomial order. Throws TooLarge
/// above limit.
std::vector<Monomial> uchi_basis(const Envelope& E, std::uint64_t limit = 1u << 20);

/// Products of basis pairs whose normal form leaves the caps. All pairs when
/// N^2 <= budget, otherwise budget random pairs.
std::vector<std::string> basis_closure_violations(const Envelope& E, const std::vector<Monomial>& basis,
                                                  std::uint64_t budget, unsigned seed);

struct FrobeniusGram {
  std::vector<Monomial> basis;
  Matrix gram;  // gram(u, v) = coefficient of the top monomial in u v
  std::size_t rank = 0;
  bool nondegenerate = false;
  bool symmetric = false;  // gram(x, y) = eps(deg x, deg y) gram(y, x)
};

inline constexpr std::size_t kDefaultGramCutoff = 2000;

/// Gram matrix of the top-coefficient form on u_chi(g). Throws TooLarge if
/// dim u_chi exceeds cutoff, InvalidInput on a universal envelope.
FrobeniusGram frobenius_gram(const Envelope& E, std::size_t cutoff = kDefaultGramCutoff);

/// Root-lattice weight of a monomial (sum of exponent * epsilon coordinates).
std::vector<int> monomial_weight(const TriangularData& T, const Monomial& m);

struct HarishChandra {
  NormalElement gamma;
  bool discarded_in_L = true;  // every dropped monomial has a positive and a negative factor
};

/// Projection of a weight-0 element onto its Cartan-only terms. Throws
/// NotWeightZero, NoMatrixRealization without root data, NotStandard if a
/// reduced envelope's character is not supported on the Cartan.
HarishChandra harish_chandra(const Envelope& E, const NormalElement& u);

/// Evaluates a Cartan-only element at lambda (indexed by algebra basis).
Scalar evaluate_on_cartan(const Envelope& E, const NormalElement& gamma, const Vec& lambda);

}  // namespace colorlie
