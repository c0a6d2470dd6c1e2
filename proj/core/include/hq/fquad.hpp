#pragma once

#include <map>

#include "hq/ideal.hpp"

namespace hq {

/// Local data of F(sqrt x)/F at one prime.
struct LocalChar {
  int valuation = 0;   // v_p(x)
  int disc_exp = 0;    // exponent of p in the relative discriminant
  int value = 0;       // chi_x(p): +1 split, -1 inert, 0 ramified
};

/// Quadratic character chi_x of F(sqrt x)/F with discriminant D_x and
/// conductor f_x, f_x^2 D_x = (x).
struct FQuadChar {
  RealQuadField field = RealQuadField::make(5);
  FieldElt x;
  OIdeal disc;
  OIdeal cond;
  bool square_class_flag = false;
  /// False when (x)/D_x is not the square of an integral ideal (x not a
  /// square mod 4 at some dyadic prime); cond is then left as (1).
  bool cond_integral = true;
  /// Local data at every prime dividing 2x.
  std::map<PrimeIdeal, LocalChar> local;

  int at_prime(const PrimeIdeal& P) const;
  IdealCharacter character() const;
};

LocalChar local_char(const RealQuadField& F, FieldElt x, const PrimeIdeal& P);
FQuadChar relative_discriminant(const RealQuadField& F, FieldElt x);
int chi_eval(const FQuadChar& chi, const OIdeal& I);

/// The same construction over Q, used as an independent cross-check.
struct QQuadChar {
  Int x = 1;
  Int disc = 1;
  Int cond = 1;
  bool square_class_flag = false;
  bool cond_integral = true;

  int at_prime(Int p) const;
  int operator()(Int n) const;
};

QQuadChar relative_discriminant_q(Int x);

}  // namespace hq
