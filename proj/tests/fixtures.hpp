#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/algebra/gl.hpp"
#include "colorlie/core/error.hpp"
#include "colorlie/core/field.hpp"
#include "colorlie/core/grading.hpp"

namespace fixtures {

using namespace colorlie;

/// Z/2 x Z/2 with eps(g1,g2) = eps(g2,g1) = -1, eps(gi,gi) = 1.
inline GradingPtr klein(FieldPtr F) {
  Scalar m1 = F->neg(F->one());
  return Grading::make(F, GradedGroup({2, 2}), {{F->one(), m1}, {m1, F->one()}});
}

inline AlgebraPtr gl_trivial(FieldPtr F, int m) { return make_gl(Grading::trivial(F), {{0, m}}); }

inline AlgebraPtr gl_super(FieldPtr F, int m, int n) {
  std::vector<std::pair<int, int>> dims;
  if (m) dims.emplace_back(0, m);
  if (n) dims.emplace_back(1, n);
  return make_gl(Grading::super(F), dims);
}

/// Every composition of total dimension 1..max_total into the listed degrees.
inline std::vector<std::vector<std::pair<int, int>>> compositions(int parts, int max_total) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<int> c(parts, 0);
  while (true) {
    int total = 0;
    for (int x : c) total += x;
    if (total >= 1 && total <= max_total) {
      std::vector<std::pair<int, int>> d;
      for (int i = 0; i < parts; ++i)
        if (c[i]) d.emplace_back(i, c[i]);
      out.push_back(d);
    }
    int i = 0;
    while (i < parts && ++c[i] > max_total) c[i++] = 0;
    if (i == parts) break;
  }
  return out;
}

inline Vec unit(const ColorAlgebra& A, const std::string& name) {
  return A.basis_vec(A.index_of(name));
}

/// Error code thrown by fn; InvalidInput stands in for "nothing thrown" only
/// in tests that compare against a different code.
inline Errc error_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidInput;
}

/// Abelian algebra with one basis vector per listed degree and zero p-map.
inline AlgebraPtr abelian(GradingPtr G, const std::vector<int>& degrees) {
  ColorAlgebra::Data d;
  d.grading = G;
  d.degrees = degrees;
  for (std::size_t i = 0; i < degrees.size(); ++i) d.names.push_back("x" + std::to_string(i + 1));
  std::map<int, SparseVec> pm;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    if (!G->is_odd(degrees[i])) pm[static_cast<int>(i)] = {};
  d.pmap = pm;
  return ColorAlgebra::make(d);
}

}  // namespace fixtures
