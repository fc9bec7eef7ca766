#include "colorlie/repmod/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "colorlie/core/error.hpp"
#include "colorlie/envelope/ops.hpp"

namespace colorlie {

SweepReport run_sweep(ReducedSpecPtr spec, const FPTriple& triple, const SweepOptions& opt) {
  const ColorAlgebra& A = *spec->algebra;
  const Field& F = A.field();
  const TriangularData& T = root_datum(A);
  std::vector<int> coords = opt.coords.empty() ? T.cartan : opt.coords;
  for (int h : coords)
    if (std::find(T.cartan.begin(), T.cartan.end(), h) == T.cartan.end())
      throw Error(Errc::InvalidInput, A.name(h) + " is not a Cartan basis element");
  Vec base = opt.base.empty() ? Vec(A.dim()) : opt.base;
  if (base.size() != A.dim()) throw Error(Errc::DimensionMismatch, "lambda has the wrong length");

  std::vector<std::vector<Scalar>> choices;
  for (int h : coords) choices.push_back(artin_schreier_roots(F, spec->chi.value(h)));
  std::vector<Vec> lambdas;
  if (std::all_of(choices.begin(), choices.end(), [](const auto& c) { return !c.empty(); })) {
    std::vector<std::size_t> idx(coords.size(), 0);
    while (true) {
      Vec lam = base;
      for (std::size_t k = 0; k < coords.size(); ++k) lam[coords[k]] = choices[k][idx[k]];
      lambdas.push_back(std::move(lam));
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  std::sort(lambdas.begin(), lambdas.end());

  VermaBuilder builder(spec, triple);
  if (builder.induced_dim() > opt.max_dim)
    throw Error(Errc::TooLarge, "induced module of dimension " + std::to_string(builder.induced_dim()), builder.induced_dim());
  // gamma is taken in u_chi' with chi' the Cartan part of chi, which agrees
  // with chi on every root pair of the FP roots.
  PCharacter chi_s;
  for (int h : T.cartan)
    if (spec->chi.value(h).v) chi_s.linear[h] = spec->chi.value(h);
  Envelope E = Envelope::reduced(make_reduced_spec(spec->algebra, chi_s));
  HcPolynomial hc = hc_polynomial(E, triple);
  bool closed_ok = true;
  try {
    f_closed(A, triple, Vec(A.dim()));
  } catch (const Error& e) {
    if (e.code() != Errc::DoubledRoot) throw;
    closed_ok = false;
  }
  // Only weights admitting the 1-dimensional P_0-module are swept; with a
  // Levi part this forces lambda(H) = 0 on its roots. Validation happens up
  // front so that worker threads never throw.
  if (!lambdas.empty()) {
    std::vector<Vec> ok;
    std::optional<Error> first;
    for (Vec& lam : lambdas) {
      try {
        builder.one_dimensional(lam);
        ok.push_back(std::move(lam));
      } catch (const Error& e) {
        if (e.code() != Errc::BadWeight) throw;
        if (!first) first = e;
      }
    }
    if (ok.empty()) throw *first;
    lambdas = std::move(ok);
  }

  SweepReport rep;
  rep.rows.resize(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    rep.rows[i].lambda = lambdas[i];
    if (closed_ok) rep.rows[i].f_closed = f_closed(A, triple, lambdas[i]);
    rep.rows[i].f_hc = f_via_hc(E, hc, lambdas[i]);
  }
  if (opt.oracle) {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex fail_mu;
    auto work = [&] {
      while (true) {
        std::size_t i = next++;
        if (i >= lambdas.size()) return;
        try {
          auto t0 = std::chrono::steady_clock::now();
          GradedModule Z = builder.build(lambdas[i]);
          rep.rows[i].oracle = is_simple(A, Z, opt.simplicity);
          rep.rows[i].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        } catch (...) {
          std::lock_guard<std::mutex> lk(fail_mu);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    unsigned nt = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    nt = static_cast<unsigned>(std::min<std::size_t>(nt, std::max<std::size_t>(1, lambdas.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  for (SweepRow& r : rep.rows) {
    bool hc_nonzero = r.f_hc.v != 0;
    r.agree = true;
    if (r.f_closed) r.agree = r.agree && ((r.f_closed->v != 0) == hc_nonzero);
    if (r.oracle) r.agree = r.agree && (r.oracle->simple == hc_nonzero);
    if (r.oracle ? r.oracle->simple : hc_nonzero) ++rep.simple;
    if (r.agree) ++rep.agreeing;
  }
  return rep;
}

}  // namespace colorlie
