#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "hq/dirichlet.hpp"
#include "hq/shintani.hpp"

using namespace hq;

namespace {

const IdealCharacter kTrivial = IdealCharacter::trivial();

Rational L(Int D, FieldElt x, int k) {
  auto F = RealQuadField::make(D);
  return hecke_L_neg(relative_discriminant(F, x), kTrivial, 1 - k).value;
}

// Brute-force ray equivalence: I J^-1 = (g) with g >> 0, g = 1 mod* m.
bool ray_equivalent(const RealQuadField& F, const OIdeal& m, const OIdeal& I, const OIdeal& J) {
  auto g = totally_positive_generator(F, ideal_mul(F, I, ideal_conj(F, J)));
  if (!g) return false;
  ResidueRing R(F, m);
  const FieldElt eps = totally_positive_unit(F);
  const Int target = R.index({J.norm(), 0});
  FieldElt h = *g;
  for (Int j = 0; j <= R.size(); ++j) {
    if (R.index(h) == target) return true;
    h = F.mul(h, eps);
  }
  return false;
}

std::vector<OIdeal> ideals_up_to(const RealQuadField& F, Int bound, Int coprime_to) {
  std::vector<OIdeal> out;
  for (Int n = 1; n <= bound; ++n)
    if (gcd(n, coprime_to) == 1)
      for (const OIdeal& I : ideals_of_norm(F, n)) out.push_back(I);
  return out;
}

}  // namespace

TEST(Shintani, SiegelOracle) {
  for (Int D : {5, 8, 13, 17, 24, 29}) {
    auto F = RealQuadField::make(D);
    for (int s : {-1, -3}) EXPECT_EQ(zeta_F_neg(F, s), zeta_F_siegel(F, s)) << D << " " << s;
  }
  EXPECT_EQ(zeta_F_neg(RealQuadField::make(5), -1), Rational(1, 30));
  EXPECT_EQ(zeta_F_neg(RealQuadField::make(5), -3), Rational(1, 60));
  EXPECT_EQ(zeta_F_neg(RealQuadField::make(8), -1), Rational(1, 12));
  // Siegel sums computed by hand.
  EXPECT_EQ(zeta_F_siegel(RealQuadField::make(13), -1), Rational(1, 6));
  EXPECT_EQ(zeta_F_siegel(RealQuadField::make(8), -3), Rational(11, 120));
}

TEST(Shintani, ZetaBeyondSiegel) {
  // Tabulated value of zeta_F(-5) for D = 5; no oracle runs inside zeta_F_neg here.
  auto F = RealQuadField::make(5);
  EXPECT_EQ(zeta_F_neg(F, -5), Rational(67, 630));
  EXPECT_EQ(zeta_F_neg(F, 0), Rational(0));
}

TEST(Shintani, PolynomialAtWeightOne) {
  // zeta(0, cone(1, e), x) = B1(x1)B1(x2) + Tr(e)/4 (B2(x1) + B2(x2)) for a unit e.
  auto F = RealQuadField::make(5);
  FieldElt e = totally_positive_unit(F);
  auto P = shintani_polynomial(F, {1, 0}, e, 1);
  Rational tr = F.trace(e);
  for (Rational x1 : {Rational(1, 3), Rational(1), Rational(2, 7)})
    for (Rational x2 : {Rational(0), Rational(1, 2), Rational(5, 11)}) {
      Rational want = bernoulli_poly(1, x1) * bernoulli_poly(1, x2) +
                      tr / 4 * (bernoulli_poly(2, x1) + bernoulli_poly(2, x2));
      Rational got = 0;
      for (size_t i = 0; i < P.size(); ++i)
        for (size_t j = 0; j < P.size(); ++j) {
          Rational t = P[i][j];
          for (size_t a = 0; a < i; ++a) t *= x1;
          for (size_t b = 0; b < j; ++b) t *= x2;
          got += t;
        }
      EXPECT_EQ(got, want);
    }
}

TEST(Shintani, ShiftSetMatchesCovolume) {
  for (Int D : {5, 8, 13, 24}) {
    auto F = RealQuadField::make(D);
    FieldElt eps = totally_positive_unit(F);
    for (const OIdeal& L : {OIdeal{1, 0, 1}, ideals_of_norm(F, 11).empty() ? OIdeal{} : ideals_of_norm(F, 11)[0],
                            OIdeal{3, 0, 3}}) {
      if (!is_valid_ideal(F, L)) continue;
      for (FieldElt v1 : {FieldElt{L.a, 0}, FieldElt{2 * L.a, 0}}) {
        FieldElt v2 = F.mul(v1, eps);
        ShintaniCone cone(F, L, v1, v2);
        Wide cross = static_cast<Wide>(v1.a) * v2.b - static_cast<Wide>(v2.a) * v1.b;
        if (cross < 0) cross = -cross;
        EXPECT_EQ(static_cast<Wide>(cone.index()) * L.norm(), cross);
        auto sh = cone.shifts();
        ASSERT_EQ(static_cast<Int>(sh.size()), cone.index());
        std::set<FieldElt> seen;
        for (const auto& s : sh) {
          EXPECT_TRUE(L.contains(s.rho));
          EXPECT_GT(s.X1, 0);
          EXPECT_LE(s.X1, cone.index());
          EXPECT_GE(s.X2, 0);
          EXPECT_LT(s.X2, cone.index());
          auto [X1, X2] = cone.coords(s.rho);
          EXPECT_EQ(X1, s.X1);
          EXPECT_EQ(X2, s.X2);
          seen.insert(s.rho);
        }
        EXPECT_EQ(seen.size(), sh.size());
      }
    }
  }
}

TEST(Shintani, ShiftsTileTheCone) {
  for (Int D : {5, 12, 13}) {
    auto F = RealQuadField::make(D);
    FieldElt eps = totally_positive_unit(F);
    OIdeal L = ideals_of_norm(F, D == 12 ? 2 : 4).front();
    FieldElt v1{L.a, 0};
    ShintaniCone cone(F, L, v1, F.mul(v1, eps));
    const Int T = 60 * L.a;
    // Direct: every element of L with trace <= T inside the cone.
    Int direct = 0;
    const Int tw = F.omega_trace();
    for (Int b = -T; b <= T; ++b) {
      for (Int a = -T; a <= T; ++a) {
        FieldElt x{a, b};
        if (!F.is_totally_positive(x) || F.trace(x) > T || !L.contains(x)) continue;
        if (cone.in_cone(x)) ++direct;
      }
    }
    (void)tw;
    // Via shifts: rho + n1 v1 + n2 v2.
    Int via = 0;
    const Int t1 = F.trace(v1), t2 = F.trace(cone.v2());
    for (const auto& s : cone.shifts()) {
      Int r = T - F.trace(s.rho);
      for (Int n1 = 0; n1 * t1 <= r; ++n1) via += (r - n1 * t1) / t2 + 1;
    }
    EXPECT_EQ(direct, via) << D;
    EXPECT_GT(direct, 100);
  }
}

TEST(Shintani, OpenConePlusRayAgrees) {
  for (Int D : {5, 8, 13, 24}) {
    auto F = RealQuadField::make(D);
    for (int s : {0, -1, -2, -3}) {
      EXPECT_EQ(partial_zeta_from_rep(F, OIdeal{}, OIdeal{}, s, false),
                partial_zeta_from_rep(F, OIdeal{}, OIdeal{}, s, true));
    }
    for (Int p : {7, 11}) {
      for (const PrimeIdeal& P : primes_above(F, p)) {
        auto ctx = ray_classes(F, P.ideal, true);
        for (Int k = 0; k < std::min<Int>(ctx.class_count(), 4); ++k) {
          const OIdeal& rep = ctx.representatives[static_cast<size_t>(k)];
          EXPECT_EQ(partial_zeta_from_rep(F, P.ideal, rep, -1, false),
                    partial_zeta_from_rep(F, P.ideal, rep, -1, true));
        }
      }
    }
  }
}

TEST(Shintani, RayClassExamples) {
  for (Int D : {5, 8}) {
    auto ctx = ray_classes(RealQuadField::make(D), OIdeal{}, true);
    EXPECT_EQ(ctx.class_count(), 1);
    EXPECT_EQ(ctx.representatives[0], OIdeal{});
    EXPECT_EQ(partial_zeta_neg(ctx, 0, -1), zeta_F_siegel(ctx.field, -1));
  }
  EXPECT_EQ(partial_zeta_neg(ray_classes(RealQuadField::make(5), OIdeal{}, true), 0, -1), Rational(1, 30));
  EXPECT_EQ(partial_zeta_neg(ray_classes(RealQuadField::make(8), OIdeal{}, true), 0, -1), Rational(1, 12));
  // Q(sqrt 3): h = 1, h+ = 2.
  auto F12 = RealQuadField::make(12);
  EXPECT_EQ(ray_classes(F12, OIdeal{}, true).class_count(), 2);
  EXPECT_EQ(ray_classes(F12, OIdeal{}, false).class_count(), 1);
  // Any modulus: the identity class contains (1) and eps_f = 1 mod m.
  auto F = RealQuadField::make(13);
  for (Int n : {3, 4, 9, 17}) {
    for (const OIdeal& m : ideals_of_norm(F, n)) {
      auto ctx = ray_classes(F, m, true);
      EXPECT_EQ(ctx.representatives[0], OIdeal{});
      EXPECT_EQ(ctx.class_of(OIdeal{}), 0);
      ResidueRing R(F, m);
      EXPECT_EQ(R.index(ctx.eps_f), R.index({1, 0}));
    }
  }
}

TEST(Shintani, RayClassesAgainstBruteForce) {
  for (Int D : {5, 12, 13}) {
    auto F = RealQuadField::make(D);
    for (Int n : {4, 5, 7, 9}) {
      for (const OIdeal& m : ideals_of_norm(F, n)) {
        auto ctx = ray_classes(F, m, true);
        // Class number h+ * phi(m) / [U+ : U+ cap (1 + m)].
        ResidueRing R(F, m);
        EXPECT_EQ(ctx.class_count() * ctx.eps_f_exponent,
                  static_cast<Int>(ctx.base_reps.size()) * R.unit_count());
        const auto& reps = ctx.representatives;
        for (size_t i = 0; i < reps.size(); ++i)
          for (size_t j = i + 1; j < reps.size(); ++j)
            EXPECT_FALSE(ray_equivalent(F, m, reps[i], reps[j]));
        for (const OIdeal& I : ideals_up_to(F, 60, m.norm())) {
          Int k = ctx.class_of(I);
          EXPECT_TRUE(ray_equivalent(F, m, I, reps[static_cast<size_t>(k)])) << to_string(I);
        }
      }
    }
  }
}

TEST(Shintani, PartialZetaSumsToEulerFactor) {
  for (Int D : {5, 8, 12}) {
    auto F = RealQuadField::make(D);
    for (Int p : {2, 3, 5, 11}) {
      for (const PrimeIdeal& P : primes_above(F, p)) {
        for (bool inf : {true, false}) {
          auto ctx = ray_classes(F, P.ideal, inf);
          for (int s : {-1, -3}) {
            Rational sum = 0;
            for (Int k = 0; k < ctx.class_count(); ++k) sum += partial_zeta_neg(ctx, k, s);
            Rational euler = 1;
            for (int i = 0; i < -s; ++i) euler *= P.norm();
            euler = 1 - euler;
            EXPECT_EQ(sum, zeta_F_siegel(F, s) * euler) << D << " " << to_string(P.ideal) << " " << inf;
          }
        }
      }
    }
  }
}

TEST(Shintani, RepresentativeInvariance) {
  for (Int D : {5, 13, 24}) {
    auto F = RealQuadField::make(D);
    for (Int n : {4, 7, 11}) {
      for (const OIdeal& m : ideals_of_norm(F, n)) {
        auto ctx = ray_classes(F, m, true);
        const Int N = m.norm();
        // beta >> 0 with beta = 1 mod m.
        FieldElt beta = FieldElt{1, 0} + N * F.mul(totally_positive_unit(F), totally_positive_unit(F));
        ASSERT_TRUE(F.is_totally_positive(beta));
        OIdeal B = ideal_from_element(F, beta);
        for (Int k = 0; k < ctx.class_count(); ++k) {
          const OIdeal& rep = ctx.representatives[static_cast<size_t>(k)];
          OIdeal other = ideal_mul(F, rep, B);
          ASSERT_EQ(ctx.class_of(other), k);
          EXPECT_EQ(partial_zeta_from_rep(F, m, rep, -1), partial_zeta_from_rep(F, m, other, -1));
          EXPECT_EQ(partial_zeta_from_rep(F, m, rep, -2), partial_zeta_from_rep(F, m, other, -2));
        }
      }
    }
  }
}

TEST(Shintani, HeckeExamples) {
  EXPECT_EQ(L(5, {-2, -1}, 1), Rational(2, 5));
  EXPECT_EQ(L(5, {-4, 0}, 1), Rational(1));
  // The conjugate character has the same value.
  EXPECT_EQ(L(5, {5, 1}, 2), L(5, {6, -1}, 2));
  EXPECT_EQ(L(5, {5, 1}, 2), Rational(4));
}

TEST(Shintani, BiquadraticOracle) {
  auto F = RealQuadField::make(5);
  for (Int x : {-3, -4, -7, -8, -11}) {
    Int d1, f1, d2, f2;
    fundamental_decomposition(x, d1, f1);
    fundamental_decomposition(x * 5, d2, f2);
    EXPECT_EQ(L(5, {x, 0}, 1), L_neg(d1, 0) * L_neg(d2, 0)) << x;
  }
  for (Int x : {2, 3, 13}) {
    Int d1, f1, d2, f2;
    fundamental_decomposition(4 * x, d1, f1);
    fundamental_decomposition(20 * x, d2, f2);
    EXPECT_EQ(L(5, {x, 0}, 2), L_neg(d1, -1) * L_neg(d2, -1)) << x;
  }
  auto F8 = RealQuadField::make(8);
  EXPECT_EQ(L(8, {-3, 0}, 1), L_neg(-3, 0) * L_neg(-24, 0));
  EXPECT_EQ(L(8, {5, 0}, 2), L_neg(5, -1) * L_neg(40, -1));
  EXPECT_EQ(L(13, {-1, 0}, 3), L_neg(-4, -2) * L_neg(-52, -2));
  (void)F;
  (void)F8;
}

TEST(Shintani, DirectRouteMatchesClassSum) {
  for (Int D : {5, 8, 13}) {
    auto F = RealQuadField::make(D);
    auto u = find_restriction_unit(F);
    for (Int n = 1; n <= 4; ++n) {
      for (FieldElt xi : enumerate_line(F, u, n)) {
        for (int k : {1, 2}) {
          FieldElt x = k == 1 ? -xi : xi;
          if (!F.is_square_mod4(x)) continue;
          auto chi = relative_discriminant(F, x);
          if (chi.disc.norm() > 150) continue;
          EXPECT_EQ(hecke_L_neg(chi, kTrivial, 1 - k).value, hecke_L_neg_by_classes(chi, kTrivial, 1 - k))
              << D << " " << to_string(x) << " " << k;
        }
      }
    }
  }
}

TEST(Shintani, ParityVanishing) {
  auto F = RealQuadField::make(5);
  auto r = hecke_L_neg(relative_discriminant(F, {-4, 0}), kTrivial, -1);
  EXPECT_TRUE(r.parity_vanishing);
  EXPECT_EQ(r.value, 0);
  auto mixed = relative_discriminant(F, {-1, 2});
  for (int s : {0, -1}) {
    auto m = hecke_L_neg(mixed, kTrivial, s);
    EXPECT_TRUE(m.parity_vanishing);
    EXPECT_EQ(m.value, 0);
  }
  EXPECT_FALSE(hecke_L_neg(relative_discriminant(F, {-2, -1}), kTrivial, 0).parity_vanishing);
}

TEST(Shintani, ClassGroupReps) {
  for (auto [D, h, hp] : std::vector<std::tuple<Int, size_t, size_t>>{
           {5, 1, 1}, {12, 1, 2}, {24, 1, 2}, {40, 2, 2}, {60, 2, 4}, {65, 2, 2}, {229, 3, 3}}) {
    auto F = RealQuadField::make(D);
    EXPECT_EQ(class_group_reps(F, false).size(), h) << D;
    auto reps = class_group_reps(F, true, 7);
    EXPECT_EQ(reps.size(), hp) << D;
    for (const auto& r : reps) EXPECT_EQ(gcd(r.norm(), 7), 1);
  }
}

TEST(Shintani, Cache) {
  auto path = std::filesystem::temp_directory_path() / "hq_cache_test.json";
  std::filesystem::remove(path);
  auto F = RealQuadField::make(13);
  {
    LValueCache cache(path.string());
    cache.load();
    EXPECT_EQ(cache.size(), 0u);
    auto chi = relative_discriminant(F, {-3, -1});
    Rational cold = hecke_L_neg(chi, kTrivial, 0, &cache).value;
    Rational warm = hecke_L_neg(chi, kTrivial, 0, &cache).value;
    EXPECT_EQ(cold, warm);
    EXPECT_EQ(cold, hecke_L_neg(chi, kTrivial, 0).value);
    EXPECT_EQ(cache.hits(), 1);
    EXPECT_EQ(zeta_F_neg(F, -1, &cache), Rational(1, 6));
    cache.save();
  }
  {
    LValueCache cache(path.string());
    cache.load();
    EXPECT_EQ(cache.size(), 2u);
    EXPECT_EQ(zeta_F_neg(F, -1, &cache), Rational(1, 6));
    EXPECT_EQ(cache.hits(), 1);
    EXPECT_THROW(cache.put(LValueCache::key(13, "(1)", "zeta", -1), Rational(1, 7)), Error);
  }
  {
    std::ofstream out(path);
    out << R"({"version": 999, "entries": {"13|(1)|zeta|-1": "5"}})";
  }
  LValueCache stale(path.string());
  stale.load();
  EXPECT_EQ(stale.size(), 0u);
  std::filesystem::remove(path);
}

TEST(Shintani, FunctionalEquationOracle) {
  // For chi totally even of conductor f, Lambda(s) = (D N f)^{s/2} Gamma_R(s)^2 L(s)
  // is symmetric under s -> 1 - s, so L(-1) = (D N f)^{3/2} L(2) / (4 pi^4); L(2) is
  // an absolutely convergent Euler product.
  struct Case {
    Int D;
    FieldElt x;
  };
  for (Case c : {Case{5, {5, 1}}, Case{5, {2, 0}}, Case{13, {3, 1}}}) {
    auto F = RealQuadField::make(c.D);
    auto chi = relative_discriminant(F, c.x);
    ASSERT_TRUE(F.is_totally_positive(c.x));
    const Int P = 20000;
    std::vector<bool> comp(P + 1, false);
    long double logL = 0;
    for (Int p = 2; p <= P; ++p) {
      if (comp[static_cast<size_t>(p)]) continue;
      for (Int q = p * p; q <= P; q += p) comp[static_cast<size_t>(q)] = true;
      for (const auto& Pi : primes_above(F, p)) {
        long double N = static_cast<long double>(Pi.norm());
        logL -= std::log1p(-static_cast<long double>(chi.at_prime(Pi)) / (N * N));
      }
    }
    long double A = static_cast<long double>(c.D) * static_cast<long double>(chi.disc.norm());
    long double approx = std::pow(A, 1.5L) * std::exp(logL) / (4 * std::pow(3.14159265358979323846L, 4));
    Rational exact = hecke_L_neg(chi, kTrivial, -1).value;
    EXPECT_NEAR(static_cast<double>(approx), exact.get_d(), 1e-4 * std::max(1.0, exact.get_d()))
        << c.D << " " << to_string(c.x) << " exact " << exact;
  }
}
