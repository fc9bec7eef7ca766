// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "identities.hpp"

#include "colorlie/algebra/gl.hpp"
#include "colorlie/algebra/validate.hpp"
#include "colorlie/core/qbinomial.hpp"
#include "colorlie/envelope/envelope.hpp"
#include "colorlie/envelope/ops.hpp"
#include "colorlie/repmod/module.hpp"
#include "colorlie/repmod/roots.hpp"
#include "colorlie/repmod/sweep.hpp"
#include "colorlie/repmod/unipotent.hpp"
#include "colorlie/repmod/verma.hpp"

using namespace colorlie;

namespace {

// Pinned limits, seconds.
constexpr double kAxiomLimit = 10;
constexpr double kFrobeniusLimit = 60;
constexpr double kSweepLimit = 600;
constexpr double kIdentityLimit = 30;
constexpr double kSocleLimit = 60;
constexpr double kTruncationLimit = 120;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << "first failure: " << why << "; ";
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit) o.fail("over the time limit");
  if (!o.ok) ++failures;
  std::printf("criterion %d %s: %s [%.2fs / limit %.0fs] %s\n", id, o.ok ? "PASS" : "FAIL", name, secs, limit,
              o.detail.str().c_str());
  std::fflush(stdout);
}

std::vector<AlgebraPtr> axiom_suite(FieldPtr F) {
  std::vector<AlgebraPtr> out;
  for (const auto& d : fixtures::compositions(1, 4)) out.push_back(make_gl(Grading::trivial(F), d));
  for (const auto& d : fixtures::compositions(2, 4)) out.push_back(make_gl(Grading::super(F), d));
  for (const auto& d : fixtures::compositions(4, 4)) out.push_back(make_gl(fixtures::klein(F), d));
  return out;
}

Scalar order_eight(const Field& F) {
  for (Scalar c : F.elements())
    if (F.pow(c, 4) == F.neg(F.one())) return c;
  return F.zero();
}

PCharacter diagonal_character(const ColorAlgebra& A, const std::vector<Scalar>& diag) {
  PCharacter chi;
  for (std::size_t k = 0; k < diag.size(); ++k)
    if (diag[k].v) chi.linear[A.index_of("e" + std::to_string(k + 1) + std::to_string(k + 1))] = diag[k];
  return chi;
}

Scalar lam_at(const ColorAlgebra& A, const Vec& lam, const char* name) { return lam[A.index_of(name)]; }

struct SweepCase {
  const char* label;
  AlgebraPtr A;
  PCharacter chi;
  bool regular;
  std::function<bool(const ColorAlgebra&, const Vec&)> expected_simple;  // empty: no closed fixture
  int expect_rows;
  int expect_simple;
};

}  // namespace

int main() {
  auto F5 = Field::make(5);
  auto F25 = Field::make(5, 2);
  const Scalar c = order_eight(*F25);

  criterion(1, "gl(m|n) axiom suite over three gradings, total dim <= 4, p = 5, 7", kAxiomLimit, [&](Outcome& o) {
    int n = 0;
    for (int p : {5, 7}) {
      auto F = Field::make(p);
      for (const auto& A : axiom_suite(F)) {
        auto r = validate_algebra(*A);
        o.expect(r.ok(), "p=" + std::to_string(p) + " dim " + std::to_string(A->dim()) + ": " + format_report(*A, r));
        ++n;
      }
    }
    o.detail << n << " algebras validated";
  });

  criterion(2, "PBW basis counts", 10, [&](Outcome& o) {
    auto count = [&](AlgebraPtr A, PCharacter chi, std::size_t want, const char* label) {
      auto spec = make_reduced_spec(A, chi);
      auto E = Envelope::reduced(spec);
      std::size_t got = uchi_basis(E).size();
      o.expect(got == want, std::string(label) + " enumerated " + std::to_string(got));
      o.expect(uchi_count(*spec) == want, std::string(label) + " formula");
      o.detail << label << "=" << got << " ";
    };
    count(fixtures::gl_trivial(F5, 2), {}, 625, "gl(2)");
    count(fixtures::gl_super(F5, 1, 1), {}, 100, "gl(1|1)");
    auto G = Grading::make(F5, GradedGroup({25}), {{F5->one()}});
    PCharacter fc;
    fc.fclasses.push_back({1, 0, {F5->one()}, 0});
    count(fixtures::abelian(G, {1}), fc, 25, "Z/25");
  });

  criterion(3, "Frobenius form nondegenerate, color-symmetric on unipotent algebras", kFrobeniusLimit,
            [&](Outcome& o) {
              int n = 0;
              for (int p : {5, 7}) {
                auto F = Field::make(p);
                for (const auto& A : axiom_suite(F)) {
                  auto spec = make_reduced_spec(A, {});
                  if (uchi_count(*spec) > 625) continue;
                  auto G = frobenius_gram(Envelope::reduced(spec));
                  o.expect(G.rank == G.basis.size(), "rank deficit at p=" + std::to_string(p) + " dim " +
                                                         std::to_string(A->dim()));
                  ++n;
                }
              }
              auto gl3 = fixtures::gl_trivial(F5, 3);
              auto N = restrict_algebra(*gl3, root_datum(*gl3).pos);
              auto GN = frobenius_gram(Envelope::reduced(make_reduced_spec(N, {})));
              o.expect(GN.nondegenerate && GN.symmetric, "N+ of gl(3)");
              auto x = fixtures::abelian(Grading::trivial(F5), {0});
              auto GX = frobenius_gram(Envelope::reduced(make_reduced_spec(x, {})));
              o.expect(GX.nondegenerate && GX.symmetric, "one-dimensional nilpotent");
              o.detail << n << " full-rank checks, N+ gl(3) rank " << GN.rank;
            });

  std::vector<SweepReport> regular_reports;
  criterion(4, "simplicity: oracle <=> f_closed != 0 <=> f_via_hc != 0", kSweepLimit, [&](Outcome& o) {
    auto gl2 = fixtures::gl_trivial(F5, 2), gl3 = fixtures::gl_trivial(F5, 3);
    auto gl11 = fixtures::gl_super(F5, 1, 1), gl21 = fixtures::gl_super(F5, 2, 1);
    auto gl2q = fixtures::gl_trivial(F25, 2), gl3q = fixtures::gl_trivial(F25, 3);
    auto gl11q = fixtures::gl_super(F25, 1, 1), gl21q = fixtures::gl_super(F25, 2, 1);
    const Scalar c2 = F25->add(c, c);
    std::vector<SweepCase> cases = {
        {"gl(2) chi=0", gl2, {}, false,
         [](const ColorAlgebra& A, const Vec& l) {
           return A.field().sub(lam_at(A, l, "e11"), lam_at(A, l, "e22")) == A.field().from_int(4);
         },
         25, 5},
        {"gl(3) chi=0", gl3, {}, false, {}, 125, -1},
        {"gl(1|1) chi=0", gl11, {}, false,
         [](const ColorAlgebra& A, const Vec& l) {
           return A.field().add(lam_at(A, l, "e11"), lam_at(A, l, "e22")).v != 0;
         },
         25, 20},
        {"gl(2|1) chi=0", gl21, {}, false, {}, 125, -1},
        {"gl(2) regular", gl2q, diagonal_character(*gl2q, {c, F25->zero()}), true, {}, 25, 25},
        {"gl(3) regular", gl3q, diagonal_character(*gl3q, {c, c2, F25->zero()}), true, {}, 125, 125},
        {"gl(1|1) regular", gl11q, diagonal_character(*gl11q, {c, F25->zero()}), true, {}, 25, 25},
        {"gl(2|1) regular", gl21q, diagonal_character(*gl21q, {c, c2, F25->zero()}), true, {}, 125, 125},
    };
    for (const auto& sc : cases) {
      SweepOptions opt;
      auto rep = run_sweep(make_reduced_spec(sc.A, sc.chi), fp_order(*sc.A, {}), opt);
      int agree = 0, randomized = 0;
      for (const auto& r : rep.rows) {
        agree += r.agree;
        randomized += r.oracle && r.oracle->randomized;
        o.expect(r.f_closed.has_value(), std::string(sc.label) + " f_closed undefined");
        if (sc.expected_simple)
          o.expect(r.oracle->simple == sc.expected_simple(*sc.A, r.lambda), std::string(sc.label) + " fixture rule");
      }
      o.expect(rep.all_agree(), std::string(sc.label) + " disagreement");
      o.expect(static_cast<int>(rep.rows.size()) == sc.expect_rows, std::string(sc.label) + " row count");
      if (sc.expect_simple >= 0) o.expect(rep.simple == sc.expect_simple, std::string(sc.label) + " simple count");
      o.detail << sc.label << " " << agree << "/" << rep.rows.size() << " agree, " << rep.simple << " simple";
      if (randomized) o.detail << " (" << randomized << " sampled)";
      o.detail << "; ";
      if (sc.regular) regular_reports.push_back(std::move(rep));
    }
  });

  criterion(5, "regular semisimple characters: every baby Verma module simple", 1, [&](Outcome& o) {
    o.expect(regular_reports.size() == 4, "regular sweeps missing");
    std::size_t rows = 0, simple = 0;
    for (const auto& r : regular_reports) {
      rows += r.rows.size();
      simple += r.simple;
    }
    o.expect(rows > 0 && rows == simple, "a non-simple module");
    o.detail << simple << "/" << rows << " simple";
  });

  criterion(6, "identity regressions", kIdentityLimit, [&](Outcome& o) {
    int checks = 0;
    for (int p : {5, 7}) {
      auto F = Field::make(p);
      std::vector<AlgebraPtr> algs = {fixtures::gl_trivial(F, 2), fixtures::gl_super(F, 1, 1),
                                      make_gl(fixtures::klein(F), {{0, 1}, {1, 1}, {3, 1}})};
      for (const auto& A : algs) {
        auto U = Envelope::universal(A);
        const Grading& Gr = A->grading();
        const int n = static_cast<int>(A->dim());
        for (int x = 0; x < n; ++x) {
          NormalElement X = U.generator(x);
          // (ad x)^k y against the Gaussian binomial expansion.
          for (int y = 0; y < n; ++y) {
            Scalar cc = Gr.sign(A->degree(x), A->degree(y)), q = Gr.sign(A->degree(x), A->degree(x));
            NormalElement Y = U.generator(y);
            Vec adk = A->basis_vec(y);
            for (int k = 1; k <= 4; ++k) {
              adk = linalg::apply(*F, A->ad(A->basis_vec(x)), adk);
              NormalElement rhs = U.zero();
              for (int i = 0; i <= k; ++i) {
                Scalar coef = F->mul(F->pow(F->neg(cc), i), F->pow(q, i * (i - 1) / 2));
                coef = F->mul(coef, quantum_binomial(*F, k, i, q));
                rhs = U.add(rhs, U.scale(coef, U.product(U.product(U.power(X, k - i), Y), U.power(X, i))));
              }
              o.expect(U.from_vec(adk) == rhs, "ad-power expansion");
              ++checks;
            }
          }
          if (A->is_odd(x)) continue;
          // x^p - x^[p] color-central, and the binomial formula for it plus a generator.
          auto cen = central_check(U, x);
          o.expect(cen.report.empty(), "centrality of x^p - x^[p]");
          int alpha = Gr.group().mul(p, A->degree(x));
          for (int y = 0; y < n; ++y) {
            NormalElement b = U.generator(y), sum = U.add(cen.z, b);
            Scalar q = Gr.sign(A->degree(y), alpha);
            for (int m = 1; m <= 3; ++m) {
              NormalElement rhs = U.zero();
              for (int i = 0; i <= m; ++i)
                rhs = U.add(rhs, U.scale(quantum_binomial(*F, m, i, q),
                                         U.product(U.power(cen.z, i), U.power(b, m - i))));
              o.expect(U.power(sum, m) == rhs, "central binomial");
              ++checks;
            }
          }
        }
      }
    }
    // Annihilation, layer and root-pair identities on induced modules.
    std::mt19937 rng(11);
    for (const auto& A : {fixtures::gl_trivial(F5, 2), fixtures::gl_trivial(F5, 3), fixtures::gl_super(F5, 1, 1),
                          fixtures::gl_super(F5, 2, 1)}) {
      auto spec = make_reduced_spec(A, {});
      auto tr = fp_order(*A, {});
      auto top = identities::top_annihilation(A, tr);
      o.expect(top.empty(), top.empty() ? "" : top.front());
      VermaBuilder vb(spec, tr);
      auto ws = admissible_weights(*spec);
      for (int s = 0; s < 4; ++s) {
        GradedModule Z = vb.build(ws[rng() % ws.size()]);
        auto lay = identities::layer_annihilation(*A, tr, Z);
        auto pair = identities::root_pair_identities(*A, Z);
        o.expect(lay.empty(), lay.empty() ? "" : lay.front());
        o.expect(pair.empty(), pair.empty() ? "" : pair.front());
        checks += 2;
      }
    }
    // gamma(e^2 f^2) = 2h(h-1), h = e11 - e22.
    auto A = fixtures::gl_trivial(F5, 2);
    auto E = Envelope::reduced(make_reduced_spec(A, {}));
    auto e = E.generator(A->index_of("e12")), f = E.generator(A->index_of("e21"));
    auto g = harish_chandra(E, E.product(E.power(e, 2), E.power(f, 2)));
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        Vec lam(A->dim());
        lam[A->index_of("e11")] = F5->from_int(a);
        lam[A->index_of("e22")] = F5->from_int(b);
        o.expect(evaluate_on_cartan(E, g.gamma, lam) == F5->from_int(2 * (a - b) * (a - b - 1)), "gamma(e^2 f^2)");
        ++checks;
      }
    o.detail << checks << " exact checks";
  });

  criterion(7, "unipotent socle and uniqueness of the simple module", kSocleLimit, [&](Outcome& o) {
    for (int p : {5, 7}) {
      auto F = Field::make(p);
      auto x = fixtures::abelian(Grading::trivial(F), {0});
      auto S = unipotent_socle(x);
      o.expect(S.left_dim == 1 && S.right_dim == 1, "joint kernel dimension");
      o.expect(S.proportional, "left and right socles differ");
      for (unsigned seed = 1; seed <= 10; ++seed) {
        auto q1 = random_simple_quotient(*F, S.regular.left, seed);
        auto q2 = random_simple_quotient(*F, S.regular.left, seed + 1000);
        auto T = quotient_intertwiner(*F, q1, q2);
        o.expect(T && T->v != 0, "no isomorphism between simple quotients");
      }
    }
    auto gl3 = fixtures::gl_trivial(F5, 3);
    auto SN = unipotent_socle(restrict_algebra(*gl3, root_datum(*gl3).pos));
    o.expect(SN.left_dim == 1 && SN.right_dim == 1 && SN.proportional, "N+ of gl(3) socle");
    auto odd = unipotent_socle(fixtures::abelian(Grading::super(F5), {1}));
    o.expect(odd.left_dim == 1 && odd.proportional, "odd line socle");
    o.detail << "socle dim 1 on x (p=5,7), N+ gl(3), odd line; 20 quotient pairs isomorphic";
  });

  criterion(8, "truncation gl(2) in gl(3): f_2 = 0 forces f_3 = 0", kTruncationLimit, [&](Outcome& o) {
    auto run = [&](FieldPtr F, const std::vector<Scalar>& diag, const char* label) {
      auto gl2 = fixtures::gl_trivial(F, 2), gl3 = fixtures::gl_trivial(F, 3);
      auto spec2 = make_reduced_spec(gl2, diagonal_character(*gl2, {diag[0], diag[1]}));
      auto spec3 = make_reduced_spec(gl3, diagonal_character(*gl3, diag));
      auto t2 = fp_order(*gl2, {}), t3 = fp_order(*gl3, {});
      Envelope E2 = Envelope::reduced(spec2), E3 = Envelope::reduced(spec3);
      auto hc2 = hc_polynomial(E2, t2), hc3 = hc_polynomial(E3, t3);
      VermaBuilder vb3(spec3, t3);
      int zeros = 0, rows = 0;
      for (const Vec& lam : admissible_weights(*spec3)) {
        Vec lam2(gl2->dim());
        for (const char* h : {"e11", "e22"}) lam2[gl2->index_of(h)] = lam[gl3->index_of(h)];
        Scalar f2 = f_closed(*gl2, t2, lam2), f3 = f_closed(*gl3, t3, lam);
        o.expect((f2.v == 0) == (f_via_hc(E2, hc2, lam2).v == 0), std::string(label) + " gl(2) routes differ");
        o.expect((f3.v == 0) == (f_via_hc(E3, hc3, lam).v == 0), std::string(label) + " gl(3) routes differ");
        ++rows;
        if (f2.v) continue;
        ++zeros;
        o.expect(f3.v == 0, std::string(label) + " f_2 = 0 but f_3 != 0");
        o.expect(!is_simple(*gl3, vb3.build(lam)).simple, std::string(label) + " oracle finds a simple module");
      }
      o.detail << label << ": " << zeros << " of " << rows << " weights in the f_2 zero locus; ";
    };
    run(F5, {F5->zero(), F5->zero(), F5->zero()}, "F_5 chi=0");
    run(F25, {c, c, F25->zero()}, "F_25 chi=(c,c,0)");
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
