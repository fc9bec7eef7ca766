#include "colorlie/core/qbinomial.hpp"

#include "colorlie/core/error.hpp"

namespace colorlie {

Scalar quantum_integer(const Field& F, int n, Scalar q) {
  Scalar s = F.zero(), t = F.one();
  for (int i = 0; i < n; ++i) {
    s = F.add(s, t);
    t = F.mul(t, q);
  }
  return s;
}

Poly cyclotomic(const Field& F, int d) {
  Poly num(d + 1);
  num[0] = F.neg(F.one());
  num[d] = F.add(num[d], F.one());
  poly::trim(num);
  for (int e = 1; e < d; ++e)
    if (d % e == 0) num = poly::divmod(F, num, cyclotomic(F, e)).first;
  return num;
}

Scalar quantum_binomial(const Field& F, int n, int i, Scalar q) {
  if (n < 0 || i < 0 || i > n)
    throw Error(Errc::InvalidInput, "quantum binomial needs 0 <= i <= n");
  Scalar r = F.one();
  for (int d = 1; d <= n; ++d) {
    int e = n / d - i / d - (n - i) / d;
    if (e == 0) continue;
    r = F.mul(r, F.pow(poly::eval(F, cyclotomic(F, d), q), e));
  }
  return r;
}

}  // namespace colorlie
