#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "hq/cohen.hpp"
#include "hq/dirichlet.hpp"
#include "hq/shintani.hpp"

using namespace hq;

namespace {

const IdealCharacter kTrivial = IdealCharacter::trivial();

Rational Lx(const RealQuadField& F, FieldElt x, int k) {
  return hecke_L_neg(relative_discriminant(F, x), kTrivial, 1 - k).value;
}

}  // namespace

TEST(CohenSeries, Examples) {
  auto F = RealQuadField::make(5);
  EXPECT_EQ(h_coeff(F, 1, kTrivial, {2, 1}), Rational(2, 5));
  EXPECT_EQ(h_coeff(F, 2, kTrivial, {1, 0}), Rational(1, 30));
  EXPECT_EQ(h_coeff(F, 2, kTrivial, {1, 1}), Rational(1, 30));
  // kappa = 2 and a square class with f = (2): zeta_F(-1) (sigma_3(2) - 4).
  EXPECT_EQ(h_coeff(F, 2, kTrivial, {4, 0}), Rational(61, 30));
  EXPECT_EQ(Lx(F, {-4, 0}, 1), h_coeff(F, 1, kTrivial, {4, 0}));
}

TEST(CohenSeries, LinesOfTheD5Table) {
  auto F = RealQuadField::make(5);
  auto u = find_restriction_unit(F);
  auto t = g_table(F, 1, kTrivial, u, 6);
  EXPECT_EQ(t.constant, Rational(1, 30));
  std::vector<FieldElt> line2, line3;
  for (const auto& c : t.coeffs) {
    if (c.n == 2) line2.push_back(c.xi);
    if (c.n == 3) line3.push_back(c.xi);
  }
  EXPECT_EQ(line2, (std::vector<FieldElt>{{2, 1}}));
  EXPECT_EQ(t.line_sum(2), Rational(2, 5));
  EXPECT_EQ(line3, (std::vector<FieldElt>{{3, -1}, {3, 0}, {3, 3}, {3, 4}}));
  EXPECT_EQ(t.line_sum(3), 2 * Lx(F, {-3, 0}, 1) + 2 * Lx(F, {-3, 1}, 1));
  EXPECT_EQ(*t.find({3, 3}), *t.find({3, 0}));
  EXPECT_EQ(*t.find({3, 4}), *t.find({3, -1}));
}

TEST(CohenSeries, PaperExampleRows) {
  auto F = RealQuadField::make(5);
  auto u = find_restriction_unit(F);
  auto t1 = g_table(F, 1, kTrivial, u, 6);
  auto rhs1 = [](Int n) -> Rational { return Rational(-2, 15) * (sigma_chi(n, 2, -4) - sigma_chi_prime(n, 2, -4)); };
  EXPECT_EQ(t1.line_sum(2), rhs1(2));
  EXPECT_EQ(t1.line_sum(2), Lx(F, {-2, -1}, 1));
  EXPECT_EQ(t1.line_sum(3), rhs1(3));
  EXPECT_EQ(t1.line_sum(4), rhs1(4));
  EXPECT_EQ(t1.line_sum(4), 2 * Lx(F, {-4, 0}, 1));
  EXPECT_EQ(t1.line_sum(6), rhs1(6));
  EXPECT_EQ(t1.line_sum(6), 2 * Lx(F, {-3, 0}, 1) + 2 * Lx(F, {-6, -1}, 1));

  auto t2 = g_table(F, 2, kTrivial, u, 5);
  Rational z = zeta_F_neg(F, -1);
  auto s5 = [](Int n) -> Rational {
    Rational s = 0;
    for (Int a = -n; a <= n; ++a)
      for (Int b = -n; b <= n; ++b) {
        if (a * a + b * b != n) continue;
        // Re (a + bi)^4.
        s += a * a * a * a - 6 * a * a * b * b + b * b * b * b;
      }
    return s / 4;
  };
  EXPECT_EQ(s5(5), -14);
  auto rhs2 = [&](Int n) -> Rational { return Rational(1, 75) * (sigma_chi(n, 4, -4) + sigma_chi_prime(n, 4, -4) + 3 * s5(n)); };
  EXPECT_EQ(t2.line_sum(1), 2 * z);
  EXPECT_EQ(t2.line_sum(1), rhs2(1));
  EXPECT_EQ(t2.line_sum(5), rhs2(5));
  // The n = 5 line: units w^4, w'^4 (zeta), squares 5 and 5 + 5w (121 zeta each),
  // and 5 + w, 5 + 4w carrying chi_{5+w} and its conjugate.
  EXPECT_EQ(t2.line_sum(5), 244 * z + 2 * Lx(F, {5, 1}, 2));
  EXPECT_EQ(Lx(F, {5, 1}, 2), Rational(4));
}

TEST(CohenSeries, SupportIsExact) {
  std::mt19937_64 rng(7);
  for (Int D : {5, 8, 13}) {
    auto F = RealQuadField::make(D);
    std::uniform_int_distribution<Int> dist(-12, 12);
    int off = 0;
    for (int i = 0; i < 200; ++i) {
      FieldElt xi{dist(rng), dist(rng)};
      if (xi == FieldElt{}) continue;
      for (int k : {1, 2}) {
        FieldElt x = k == 1 ? -xi : xi;
        bool supported = F.is_totally_positive(xi) && F.is_square_mod4(x);
        if (!supported) {
          ++off;
          EXPECT_EQ(h_coeff(F, k, kTrivial, xi), 0) << to_string(xi);
        }
      }
    }
    EXPECT_GT(off, 100);
  }
}

TEST(CohenSeries, UnitSquareTwist) {
  auto F = RealQuadField::make(5);
  auto eps = totally_positive_unit(F);
  FieldElt sq = F.sqr(fundamental_unit(F));
  EXPECT_EQ(sq, eps);
  for (int k : {1, 2}) {
    auto t = g_table(F, k, kTrivial, find_restriction_unit(F), 12);
    for (const auto& c : t.coeffs)
      EXPECT_EQ(h_coeff(F, k, kTrivial, F.mul(sq, c.xi)), c.value) << to_string(c.xi);
  }
}

TEST(CohenSeries, TableInvariants) {
  for (Int D : {5, 8, 13}) {
    auto F = RealQuadField::make(D);
    auto u = find_restriction_unit(F);
    for (int k : {1, 2, 3}) {
      auto t = g_table(F, k, kTrivial, u, 8);
      EXPECT_EQ(t.constant, zeta_F_neg(F, 1 - 2 * k));
      for (const auto& c : t.coeffs) {
        EXPECT_TRUE(F.is_totally_positive(c.xi));
        EXPECT_TRUE(F.is_square_mod4(k % 2 ? -c.xi : c.xi));
        EXPECT_EQ(u.index(c.xi), c.n);
        EXPECT_LE(c.n, 8);
      }
    }
  }
}

TEST(CohenSeries, ParallelFillMatchesSequential) {
  auto F = RealQuadField::make(13);
  auto u = find_restriction_unit(F);
  LValueCache cache;
  auto a = g_table(F, 1, kTrivial, u, 15, nullptr, 1);
  auto b = g_table(F, 1, kTrivial, u, 15, &cache, 4);
  auto c = g_table(F, 1, kTrivial, u, 15, &cache, 3);
  ASSERT_EQ(a.coeffs.size(), b.coeffs.size());
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    EXPECT_EQ(a.coeffs[i].xi, b.coeffs[i].xi);
    EXPECT_EQ(a.coeffs[i].value, b.coeffs[i].value);
    EXPECT_EQ(a.coeffs[i].value, c.coeffs[i].value);
  }
  EXPECT_GT(cache.hits(), 0);
  EXPECT_EQ(a.to_json(), c.to_json());
}

TEST(CohenSeries, JsonRows) {
  auto F = RealQuadField::make(5);
  auto t = g_table(F, 1, kTrivial, find_restriction_unit(F), 3);
  auto j = nlohmann::json::parse(t.to_json());
  EXPECT_EQ(j["constant"], "1/30");
  EXPECT_EQ(j["coeffs"][0]["xi"], "2+1*w");
  EXPECT_EQ(j["coeffs"][0]["n"], 2);
  EXPECT_EQ(j["coeffs"][0]["H"], "2/5");
}

TEST(CohenSeries, QModeMatchesCohenH) {
  for (int r : {2, 3})
    for (Int N = 0; N <= 200; ++N) EXPECT_EQ(h_coeff_q(r, N), cohen_H(r, N)) << r << " " << N;
  EXPECT_THROW(h_coeff_q(1, 3), Error);
  try {
    g_series_q(1, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedQMode);
  }
  EXPECT_EQ(g_series_q(2, 4)[0], Rational(1, 120));
}
