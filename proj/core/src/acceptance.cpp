#include "hq/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "hq/cohen.hpp"
#include "hq/dirichlet.hpp"
#include "hq/restrict.hpp"
#include "hq/shintani.hpp"

namespace hq {

namespace {

const IdealCharacter kTrivial = IdealCharacter::trivial();

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << (detail.tellp() > 0 ? "; " : "") << "failed: " << what;
    if (!ok) pass = false;
  }
  void note(const std::string& what) { detail << (detail.tellp() > 0 ? "; " : "") << what; }
};

void absorb_report(Outcome& out, const RelationReport& rep, const std::string& tag) {
  if (rep.ok()) return;
  for (const auto& row : rep.rows)
    if (!row.equal) {
      out.require(false, tag + " " + row.label + " n=" + std::to_string(row.n) + " lhs=" + to_string(row.lhs) +
                             " rhs=" + to_string(row.rhs));
      return;
    }
  out.require(false, tag + " produced no rows");
}

Rational L_at(const RealQuadField& F, FieldElt x, int k) {
  return hecke_L_neg(relative_discriminant(F, x), kTrivial, 1 - k).value;
}

Outcome theta_restriction() {
  Outcome out;
  Int rows = 0;
  for (Int D : {5, 8, 13}) {
    auto rep = verify_theta_identity(RealQuadField::make(D), 500);
    absorb_report(out, rep, "D=" + std::to_string(D));
    rows += static_cast<Int>(rep.rows.size());
  }
  out.note(std::to_string(rows) + " coefficients");
  return out;
}

Outcome sum_of_squares() {
  Outcome out;
  Int rows = 0;
  for (Int D : {5, 8, 13}) {
    auto rep = verify_sum_of_squares(RealQuadField::make(D), 3, 100);
    absorb_report(out, rep, "D=" + std::to_string(D));
    rows += static_cast<Int>(rep.rows.size());
  }
  out.note(std::to_string(rows) + " rows");
  return out;
}

Outcome zeta_oracles(LValueCache* cache) {
  Outcome out;
  for (Int D : {5, 8, 13, 17, 24, 29}) {
    auto F = RealQuadField::make(D);
    for (int s : {-1, -3}) {
      Rational v;
      try {
        v = zeta_F_neg(F, s, cache);
      } catch (const Error& e) {
        out.require(false, "D=" + std::to_string(D) + " s=" + std::to_string(s) + ": " + e.what());
        continue;
      }
      out.require(v == zeta_F_siegel(F, s), "D=" + std::to_string(D) + " s=" + std::to_string(s));
    }
  }
  out.require(zeta_F_neg(RealQuadField::make(5), -1, cache) == frac(1, 30), "zeta_Q(sqrt5)(-1) = 1/30");
  out.require(zeta_F_neg(RealQuadField::make(5), -3, cache) == frac(1, 60), "zeta_Q(sqrt5)(-3) = 1/60");
  out.require(zeta_F_neg(RealQuadField::make(8), -1, cache) == frac(1, 12), "zeta_Q(sqrt2)(-1) = 1/12");
  out.note("6 fields, s = -1, -3");
  return out;
}

Outcome corollary(LValueCache* cache) {
  Outcome out;
  Int rows = 0;
  for (Int D : {5, 8, 13}) {
    auto rep = verify_corollary_k1(RealQuadField::make(D), 50, cache);
    absorb_report(out, rep, "D=" + std::to_string(D));
    rows += static_cast<Int>(rep.rows.size());
  }
  out.note(std::to_string(rows) + " rows, 1 <= n <= 50");
  return out;
}

Outcome example_kappa1(LValueCache* cache) {
  Outcome out;
  auto F = RealQuadField::make(5);
  auto d = decompose(restrict(g_table(F, 1, kTrivial, find_restriction_unit(F), 50, cache)), 1);
  out.require(d.c_E == frac(-2, 15), "c_E = -2/15 (got " + to_string(d.c_E) + ")");
  out.require(d.c_F == frac(2, 15), "c_F = 2/15 (got " + to_string(d.c_F) + ")");
  out.require(d.residual.is_zero(), "residual = 0 through n = 50");
  out.note("c_E = " + to_string(d.c_E) + ", c_F = " + to_string(d.c_F));
  return out;
}

Outcome example_kappa2(LValueCache* cache) {
  Outcome out;
  auto F = RealQuadField::make(5);
  auto d = decompose(restrict(g_table(F, 2, kTrivial, find_restriction_unit(F), 30, cache)), 2);
  out.require(d.c_E == frac(1, 75), "c_E = 1/75 (got " + to_string(d.c_E) + ")");
  out.require(d.c_F == frac(1, 75), "c_F = 1/75 (got " + to_string(d.c_F) + ")");
  out.require(d.residual == frac(1, 25) * s5_series(30), "residual = S_5 / 25 through n = 30");
  const Rational first = 2 * zeta_F_siegel(F, -3) / L_neg(-4, -4);
  out.require(first == frac(1, 75), "2 zeta_F(-3) / L(-4, chi_-4) = 1/75 (got " + to_string(first) + ")");
  out.note("c_E = c_F = " + to_string(d.c_E) + ", residual = (1/25) S_5");
  return out;
}

Outcome example_rows(LValueCache* cache) {
  Outcome out;
  auto F = RealQuadField::make(5);
  auto u = find_restriction_unit(F);
  auto t1 = g_table(F, 1, kTrivial, u, 4, cache);
  auto t2 = g_table(F, 2, kTrivial, u, 5, cache);
  const Rational L2 = L_at(F, {-2, -1}, 1), L4 = L_at(F, {-4, 0}, 1), L5 = L_at(F, {5, 1}, 2);
  out.require(t1.line_sum(2) == L2 && L2 == frac(2, 5), "n=2 coefficient = L_F(0, chi_{-2-w}) = 2/5");
  out.require(t1.line_sum(4) == 2 * L4 && L4 == 1, "n=4 coefficient = 2 L_F(0, chi_{-4}) = 2");
  const Rational row5 = frac(1, 75) * (sigma_chi(5, 4, -4) + sigma_chi_prime(5, 4, -4) + 3 * s5_series(5)[5]);
  out.require(t2.line_sum(5) == row5, "n=5 coefficient = " + to_string(row5));
  out.note("n=2: " + to_string(t1.line_sum(2)) + ", n=4: " + to_string(t1.line_sum(4)) +
           ", n=5: " + to_string(t2.line_sum(5)) + " = 244 zeta_F(-1) + 2 L_F(-1, chi_{5+w})");
  out.require(L5 == 8, "L_F(-1, chi_{5+w}) = 8 (computed " + to_string(L5) + ")");
  return out;
}

Outcome classical() {
  Outcome out;
  absorb_report(out, verify_kronecker(300), "kronecker");
  absorb_report(out, verify_eichler(299), "eichler");
  absorb_report(out, verify_cohen_h2(100), "cohen r=2");
  absorb_report(out, verify_cohen_h4(100), "cohen r=4");
  out.note("Kronecker N <= 300, Eichler odd N <= 299, Cohen N <= 100");
  return out;
}

Outcome dimensions() {
  Outcome out;
  auto rep = verify_dimensions(-2, 10);
  absorb_report(out, rep, "dimensions");
  out.note(std::to_string(rep.rows.size()) + " rows, kappa = -2..10");
  return out;
}

Outcome properties() {
  Outcome out;
  // Restriction is a ring map: restricted theta_F^k equals restricted theta_F to the k.
  for (Int D : {5, 8, 13}) {
    auto F = RealQuadField::make(D);
    auto u = find_restriction_unit(F);
    const QSeries base = restrict_theta_F(F, u, 40);
    for (int k = 1; k <= 3; ++k) {
      QSeries lines(40);
      for (const auto& [xi, c] : rep_counts_F(F, u, k, 40)) lines[u.index(xi)] += c;
      out.require(lines == base.pow(static_cast<unsigned>(k)),
                  "ring map D=" + std::to_string(D) + " k=" + std::to_string(k));
    }
  }
  std::mt19937_64 rng(20261016);
  // chi_x depends only on the square class of x.
  {
    std::uniform_int_distribution<Int> d(-9, 9);
    for (Int D : {5, 8, 13}) {
      auto F = RealQuadField::make(D);
      std::vector<OIdeal> probes;
      for (Int n = 2; n <= 60; ++n)
        for (auto& I : ideals_of_norm(F, n)) probes.push_back(I);
      const FieldElt eps = fundamental_unit(F);
      for (int i = 0; i < 40; ++i) {
        FieldElt x{d(rng), d(rng)}, t{d(rng), d(rng)};
        if (x == FieldElt{} || t == FieldElt{}) continue;
        auto c1 = relative_discriminant(F, x);
        auto c2 = relative_discriminant(F, F.mul(x, F.sqr(t)));
        auto c3 = relative_discriminant(F, F.mul(x, F.sqr(eps)));
        bool ok = c1.disc == c2.disc && c1.square_class_flag == c2.square_class_flag && c1.disc == c3.disc &&
                  c1.cond == c3.cond;
        const Int bad = 2 * std::abs(F.norm(x)) * std::abs(F.norm(t));
        for (auto& I : probes)
          if (gcd(I.norm(), bad) == 1) ok = ok && chi_eval(c1, I) == chi_eval(c2, I);
        out.require(ok, "square class D=" + std::to_string(D) + " x=" + to_string(x) + " t=" + to_string(t));
      }
    }
  }
  // f_x^2 D_x = (x) whenever x is a square mod 4.
  {
    std::uniform_int_distribution<Int> d(-60, 60);
    for (Int D : {5, 8, 12, 13, 17, 24, 28, 29}) {
      auto F = RealQuadField::make(D);
      for (int tested = 0; tested < 70;) {
        FieldElt x{d(rng), d(rng)};
        if (x == FieldElt{} || !F.is_square_mod4(x)) continue;
        ++tested;
        auto chi = relative_discriminant(F, x);
        out.require(chi.cond_integral &&
                        ideal_mul(F, ideal_pow(F, chi.cond, 2), chi.disc) == ideal_from_element(F, x),
                    "round trip D=" + std::to_string(D) + " x=" + to_string(x));
      }
    }
  }
  // Degree-one mode reproduces Cohen's H.
  for (int r : {2, 3})
    for (Int N = 0; N <= 200; ++N)
      out.require(h_coeff_q(r, N) == cohen_H(r, N), "Q-mode r=" + std::to_string(r) + " N=" + std::to_string(N));
  // Partial zeta values do not depend on the ray class representative.
  for (Int D : {5, 13, 24}) {
    auto F = RealQuadField::make(D);
    const FieldElt e = totally_positive_unit(F);
    for (Int n : {4, 7, 11})
      for (const OIdeal& m : ideals_of_norm(F, n)) {
        auto ctx = ray_classes(F, m, true);
        const FieldElt beta = FieldElt{1, 0} + m.norm() * F.mul(e, e);
        const OIdeal B = ideal_from_element(F, beta);
        for (Int k = 0; k < ctx.class_count(); ++k) {
          const OIdeal& rep = ctx.representatives[static_cast<size_t>(k)];
          const OIdeal other = ideal_mul(F, rep, B);
          bool ok = ctx.class_of(other) == k;
          for (int s : {-1, -2})
            ok = ok && partial_zeta_from_rep(F, m, rep, s) == partial_zeta_from_rep(F, m, other, s);
          out.require(ok, "representative invariance D=" + std::to_string(D) + " m=" + to_string(m));
        }
      }
  }
  out.note("ring map, square class, round trip, Q-mode, representative invariance");
  return out;
}

}  // namespace

std::string format_result(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s [%2d] ", r.pass ? "PASS" : "FAIL", r.id);
  char tail[32];
  std::snprintf(tail, sizeof tail, " (%.2f s)", r.seconds);
  return head + r.name + tail + (r.detail.empty() ? "" : ": " + r.detail);
}

std::vector<CriterionResult> run_acceptance(LValueCache* cache,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  struct Item {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items = {
      {"theta restriction identity, D in {5,8,13}, n <= 500", theta_restriction},
      {"sums of squares, D in {5,8,13}, kappa <= 3, n <= 100", sum_of_squares},
      {"Shintani zeta values agree with Siegel", [&] { return zeta_oracles(cache); }},
      {"weight 3 relation for trivial chi', n <= 50", [&] { return corollary(cache); }},
      {"D=5, kappa=1 decomposition", [&] { return example_kappa1(cache); }},
      {"D=5, kappa=2 decomposition", [&] { return example_kappa2(cache); }},
      {"D=5 L-value rows", [&] { return example_rows(cache); }},
      {"classical class number relations", classical},
      {"dimension table, kappa = -2..10", dimensions},
      {"property suites", properties},
  };
  std::vector<CriterionResult> results;
  int id = 0;
  for (const auto& item : items) {
    CriterionResult r;
    r.id = ++id;
    r.name = item.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = item.run();
      r.pass = o.pass;
      r.detail = o.detail.str();
    } catch (const Error& e) {
      r.pass = false;
      r.detail = std::string(error_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace hq
