#pragma once

#include <map>
#include <optional>

#include "hq/cohen.hpp"
#include "hq/report.hpp"
#include "hq/series.hpp"

namespace hq {

/// theta = sum_{m in Z} q^{m^2}.
QSeries theta_Q(Int prec);
QSeries theta_sq(Int prec);
/// E_{2k+1,chi_{-4}} = L(-2k, chi_{-4})/2 + sum sigma_{2k,chi_{-4}}(n) q^n.
QSeries eisenstein_E(int kappa, Int prec);
/// F_{2k+1,chi_{-4}} = sum sigma'_{2k,chi_{-4}}(n) q^n.
QSeries eisenstein_F(int kappa, Int prec);
/// s(n) = (1/4) sum_{a^2 + b^2 = n} (a + b i)^4.
QSeries s5_series(Int prec);
/// sum_{n odd} sigma_1(n) q^n, weight 2 on Gamma_0(4).
QSeries odd_sigma_series(Int prec);

/// Coefficient n = sum of the table entries with l(xi) = n; constant term at 0.
QSeries restrict(const HilbertCoeffTable& table);

/// Binary form (x, y) -> l((x + y w)^2) = a x^2 + b x y + c y^2.
struct RestrictionForm {
  Int a = 0, b = 0, c = 0;
  Int eval(Int x, Int y) const;
};
/// Throws NotPositiveDefinite unless the form is positive definite.
RestrictionForm restriction_form(const RealQuadField& F, const RestrictionUnit& u);
/// All eta = x + y w with l(eta^2) <= bound.
std::vector<FieldElt> elements_below(const RealQuadField& F, const RestrictionUnit& u, Int bound);

/// Coefficient n = #{eta in O : l(eta^2) = n}.
QSeries restrict_theta_F(const RealQuadField& F, const RestrictionUnit& u, Int prec);
/// restrict_theta_F to the k-th power.
QSeries rep_numbers(const RealQuadField& F, const RestrictionUnit& u, int k, Int prec);
/// r_{F,k}(xi) = #{(eta_1..eta_k) in O^k : sum eta_i^2 = xi} for all xi with l(xi) <= prec,
/// by direct enumeration of tuples.
std::map<FieldElt, Int> rep_counts_F(const RealQuadField& F, const RestrictionUnit& u, int k, Int prec);

struct Decomposition {
  Rational c_E;
  Rational c_F;
  /// series - c_E E - c_F F.
  QSeries residual;
  /// For kappa = 2: residual = c_S * S_5 is tested (dim S_5 = 1).
  std::optional<Rational> c_S;
  /// True when the residual lies in the known cusp space (zero for kappa = 1,
  /// C * S_5 for kappa = 2); empty when no cusp basis is available.
  std::optional<bool> residual_in_cusp_space;
};

/// Splits a weight 2 kappa + 1 series on the Eisenstein pair E, F; kappa >= 1,
/// series.prec() >= kappa + 2.
Decomposition decompose(const QSeries& series, int kappa);

struct Dimensions {
  Int dim_M = 0;
  Int dim_S = 0;
};
/// dim M_{2k+1}(Gamma_0(4), chi_{-4}) and dim S_{2k+1}(Gamma_0(4), chi_{-4}).
Dimensions dim_formulas(int kappa);
/// Rank of the monomials theta^{2 + 4a} G^b (a + b = kappa, G = odd_sigma_series)
/// over coefficients 0..prec.
Int monomial_rank(int kappa, Int prec);
/// Rank of a list of series over their common coefficients.
Int series_rank(const std::vector<QSeries>& series);

RelationReport verify_theta_identity(const RealQuadField& F, Int prec);
RelationReport verify_sum_of_squares(const RealQuadField& F, int k_max, Int prec);
RelationReport verify_corollary_k1(const RealQuadField& F, Int prec, LValueCache* cache = nullptr);
RelationReport verify_theorem_consts(const RealQuadField& F, int kappa, Int prec,
                                     LValueCache* cache = nullptr);
RelationReport verify_dimensions(int kappa_min, int kappa_max);

}  // namespace hq
