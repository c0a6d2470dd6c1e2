#pragma once

#include <map>
#include <vector>

#include "hq/cache.hpp"
#include "hq/fquad.hpp"
#include "hq/series.hpp"

namespace hq {

/// H_kappa(xi, chi') for the Cohen-Eisenstein series over F; 0 off the
/// support xi >> 0, (-1)^kappa xi = square mod 4.
Rational h_coeff(const RealQuadField& F, int kappa, const IdealCharacter& chiprime, FieldElt xi,
                 LValueCache* cache = nullptr);

struct HilbertCoeff {
  FieldElt xi;
  Int n = 0;  // l(xi)
  Rational value;
};

struct HilbertCoeffTable {
  RealQuadField field = RealQuadField::make(5);
  int kappa = 1;
  IdealCharacter chi_prime;
  RestrictionUnit unit;
  Int prec = 0;
  /// L_F(1 - 2 kappa, chi'^2).
  Rational constant;
  /// Supported xi with l(xi) <= prec, ordered by (n, b).
  std::vector<HilbertCoeff> coeffs;

  const Rational* find(FieldElt xi) const;
  /// Sum of the coefficients on the line l(xi) = n; the constant for n = 0.
  Rational line_sum(Int n) const;
  std::string to_json() const;
};

/// threads = 0 uses the hardware concurrency.
HilbertCoeffTable g_table(const RealQuadField& F, int kappa, const IdealCharacter& chiprime,
                          const RestrictionUnit& unit, Int prec, LValueCache* cache = nullptr,
                          unsigned threads = 0);

/// Degree-one version: Cohen's H(r, N) from the character of Q(sqrt((-1)^r N)).
/// Throws UnsupportedQMode for r = 1.
Rational h_coeff_q(int r, Int N);
QSeries g_series_q(int r, Int prec);

}  // namespace hq
