#include <gtest/gtest.h>

#include <set>

#include "hq/dirichlet.hpp"
#include "hq/restrict.hpp"
#include "hq/shintani.hpp"

using namespace hq;

namespace {

const IdealCharacter kTrivial = IdealCharacter::trivial();

Int r_k(int k, Int n) {
  // Brute-force count of (x_1..x_k) in Z^k with sum x_i^2 = n.
  if (k == 0) return n == 0 ? 1 : 0;
  Int total = 0;
  for (Int x = -isqrt(n); x * x <= n; ++x) total += r_k(k - 1, n - x * x);
  return total;
}

}  // namespace

TEST(Restrict, ClassicalSeries) {
  auto t2 = theta_sq(20);
  EXPECT_EQ(t2[0], 1);
  EXPECT_EQ(t2[1], 4);
  EXPECT_EQ(t2[3], 0);
  for (Int n = 0; n <= 20; ++n) EXPECT_EQ(t2[n], r_k(2, n));
  auto t = theta_Q(20);
  for (Int n = 0; n <= 20; ++n) EXPECT_EQ(t[n], r_k(1, n));

  EXPECT_EQ(eisenstein_E(1, 5)[0], Rational(-1, 4));
  EXPECT_EQ(eisenstein_E(2, 5)[5], 626);
  for (int k : {1, 2, 3}) EXPECT_EQ(eisenstein_F(k, 5)[0], 0);

  auto s = s5_series(30);
  EXPECT_EQ(s[0], 0);
  EXPECT_EQ(s[1], 1);
  EXPECT_EQ(s[2], -4);
  EXPECT_EQ(s[5], -14);
  // S_5 is a Hecke eigenform with multiplicative coefficients.
  EXPECT_EQ(s[10], s[2] * s[5]);
  EXPECT_EQ(s[26], s[2] * s[13]);
}

TEST(Restrict, RestrictionExamples) {
  auto F = RealQuadField::make(5);
  auto u = find_restriction_unit(F);
  auto r1 = restrict(g_table(F, 1, kTrivial, u, 6));
  EXPECT_EQ(r1[0], Rational(1, 30));
  EXPECT_EQ(r1[2], Rational(2, 5));
  EXPECT_EQ(r1[4], 2);
  auto r2 = restrict(g_table(F, 2, kTrivial, u, 3));
  EXPECT_EQ(r2[1], Rational(1, 15));
}

TEST(Restrict, FormAndEllipseScan) {
  for (Int D : {5, 8, 13, 29}) {
    auto F = RealQuadField::make(D);
    auto u = find_restriction_unit(F);
    auto f = restriction_form(F, u);
    auto below = elements_below(F, u, 40);
    std::set<FieldElt> found(below.begin(), below.end());
    EXPECT_EQ(found.size(), below.size());
    for (Int x = -40; x <= 40; ++x)
      for (Int y = -40; y <= 40; ++y) {
        FieldElt eta{x, y};
        Int l = u.index(F.sqr(eta));
        EXPECT_EQ(l, f.eval(x, y));
        EXPECT_EQ(l <= 40, found.count(eta) == 1) << D << " " << to_string(eta);
      }
  }
  auto F = RealQuadField::make(5);
  auto u = find_restriction_unit(F);
  auto th = restrict_theta_F(F, u, 5);
  std::vector<Int> want{1, 4, 4, 0, 4, 8};
  for (Int n = 0; n <= 5; ++n) EXPECT_EQ(th[n], want[static_cast<size_t>(n)]);
  RestrictionUnit bad = u;
  bad.beta = -u.beta;
  bad.alpha = -u.alpha;
  EXPECT_THROW(restriction_form(F, bad), Error);
}

TEST(Restrict, ThetaIdentity) {
  for (Int D : {5, 8, 13}) {
    auto F = RealQuadField::make(D);
    auto u = find_restriction_unit(F);
    EXPECT_EQ(restrict_theta_F(F, u, 500), theta_sq(500));
    EXPECT_TRUE(verify_theta_identity(F, 200).ok());
  }
}

TEST(Restrict, RingMapAndSumsOfSquares) {
  for (Int D : {5, 8, 13}) {
    auto F = RealQuadField::make(D);
    auto u = find_restriction_unit(F);
    for (int k = 1; k <= 3; ++k) {
      QSeries lines(30);
      for (const auto& [xi, c] : rep_counts_F(F, u, k, 30)) {
        EXPECT_TRUE(xi == FieldElt{} || F.is_totally_positive(xi));
        lines[u.index(xi)] += c;
      }
      EXPECT_EQ(lines, rep_numbers(F, u, k, 30));
      EXPECT_EQ(rep_numbers(F, u, k, 30), restrict_theta_F(F, u, 30).pow(static_cast<unsigned>(k)));
      for (Int n = 0; n <= 30; ++n) EXPECT_EQ(lines[n], r_k(2 * k, n)) << D << " " << k << " " << n;
    }
  }
  // r_{F,1}(xi) directly: xi = 4 in Q(sqrt 5) is +-2 only.
  auto F = RealQuadField::make(5);
  auto counts = rep_counts_F(F, find_restriction_unit(F), 1, 10);
  EXPECT_EQ(counts[(FieldElt{4, 0})], 2);
}

TEST(Restrict, DecomposeExamples) {
  auto F = RealQuadField::make(5);
  auto u = find_restriction_unit(F);
  auto d1 = decompose(restrict(g_table(F, 1, kTrivial, u, 50)), 1);
  EXPECT_EQ(d1.c_E, Rational(-2, 15));
  EXPECT_EQ(d1.c_F, Rational(2, 15));
  EXPECT_TRUE(d1.residual.is_zero());
  EXPECT_TRUE(*d1.residual_in_cusp_space);

  auto series2 = restrict(g_table(F, 2, kTrivial, u, 30));
  auto d2 = decompose(series2, 2);
  EXPECT_EQ(d2.c_E, Rational(1, 75));
  EXPECT_EQ(d2.c_F, Rational(1, 75));
  ASSERT_TRUE(d2.c_S.has_value());
  EXPECT_EQ(*d2.c_S, Rational(1, 25));
  EXPECT_EQ(d2.residual, Rational(1, 25) * s5_series(30));
  EXPECT_TRUE(*d2.residual_in_cusp_space);
  // Reassembly is exact.
  auto back = d2.c_E * eisenstein_E(2, 30) + d2.c_F * eisenstein_F(2, 30) + d2.residual;
  EXPECT_EQ(back, series2);
  EXPECT_EQ(back.prec(), series2.prec());

  // First-principles constant.
  EXPECT_EQ(2 * zeta_F_siegel(F, -3) / L_neg(-4, -4), Rational(1, 75));

  EXPECT_THROW(decompose(theta_sq(10), 0), Error);
  EXPECT_THROW(decompose(theta_sq(3), 2), Error);
}

TEST(Restrict, DimensionTable) {
  EXPECT_EQ(dim_formulas(2).dim_M, 3);
  EXPECT_EQ(dim_formulas(2).dim_S, 1);
  EXPECT_EQ(dim_formulas(1).dim_S, 0);
  EXPECT_EQ(dim_formulas(-1).dim_M, 0);
  for (int k = -2; k <= 10; ++k) EXPECT_EQ(dim_formulas(k).dim_M, monomial_rank(k, 60)) << k;
  auto rep = verify_dimensions(-2, 10);
  EXPECT_TRUE(rep.ok());
  // S_5 lies in M_5 and has no constant term.
  auto t2 = theta_sq(40), t4 = t2 * t2, G = odd_sigma_series(40);
  std::vector<QSeries> basis{t2 * t4 * t4, t2 * t4 * G, t2 * G * G};
  auto with_s = basis;
  with_s.push_back(s5_series(40));
  EXPECT_EQ(series_rank(with_s), series_rank(basis));
}

TEST(Restrict, Verifiers) {
  auto F = RealQuadField::make(5);
  auto cor = verify_corollary_k1(F, 50);
  EXPECT_TRUE(cor.ok());
  EXPECT_EQ(cor.rows.size(), 50u);
  EXPECT_EQ(cor.rows.front().n, 1);
  auto c2 = verify_theorem_consts(F, 2, 30);
  EXPECT_TRUE(c2.ok());
  EXPECT_EQ(c2.rows[0].lhs, Rational(1, 75));
  EXPECT_TRUE(verify_theorem_consts(F, 3, 12).ok());
  EXPECT_TRUE(verify_sum_of_squares(RealQuadField::make(13), 2, 20).ok());
}
