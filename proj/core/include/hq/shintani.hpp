#pragma once

#include <functional>
#include <vector>

#include "hq/cache.hpp"
#include "hq/fquad.hpp"
#include "hq/ideal.hpp"

namespace hq {

/// Lattice point rho = (X1*v1 + X2*v2)/M of a cone fundamental domain,
/// with cone coordinates x_i = X_i / M.
struct ConeShift {
  Int X1 = 0;
  Int X2 = 0;
  FieldElt rho;
};

/// Simplicial cone R_{>0} v1 + R_{>=0} v2 over a lattice L (an integral ideal)
/// containing v1 and v2. Shifts are the points of L in the half-open
/// parallelepiped 0 < x1 <= 1, 0 <= x2 < 1.
class ShintaniCone {
 public:
  ShintaniCone(const RealQuadField& F, const OIdeal& lattice, FieldElt v1, FieldElt v2);

  const FieldElt& v1() const { return v1_; }
  const FieldElt& v2() const { return v2_; }
  const OIdeal& lattice() const { return lattice_; }
  /// [L : Z v1 + Z v2], the number of shifts.
  Int index() const { return M_; }

  /// open = true uses 0 < x1, x2 <= 1 (open cone) instead.
  void for_each_shift(const std::function<void(const ConeShift&)>& fn, bool open = false) const;
  std::vector<ConeShift> shifts(bool open = false) const;
  /// Lattice points on the ray R_{>0} v1 with 0 < x1 <= 1.
  std::vector<ConeShift> ray_shifts() const;

  /// Scaled cone coordinates (X1, X2) of an element of L: rho = (X1 v1 + X2 v2)/M.
  std::pair<Wide, Wide> coords(FieldElt rho) const;
  bool in_cone(FieldElt rho) const;

  /// sum over shifts of weight(rho) * zeta(1-m, cone, x), the Shintani
  /// zeta of the shifted cone at s = 1 - m. open_plus_ray evaluates the
  /// open cone and the ray through v1 separately.
  Rational zeta(int m, const std::function<int(const FieldElt&)>& weight,
                bool open_plus_ray = false) const;

 private:
  RealQuadField F_;
  OIdeal lattice_;
  FieldElt v1_, v2_;
  Int p1_, q1_, p2_, q2_;  // coordinates in the HNF basis of L
  Int M_;
  Int sgn_;
  Int h11_, h21_, h22_;
};

/// Polynomial P(x1, x2) = zeta(1-m, cone(v1, v2), x) for x1, x2 > 0 as
/// coefficients p[i][j] of x1^i x2^j.
std::vector<std::vector<Rational>> shintani_polynomial(const RealQuadField& F, FieldElt v1,
                                                       FieldElt v2, int m);

/// Representatives of the narrow (or wide) class group, each of norm coprime
/// to `coprime_to`; the first representative is (1).
std::vector<OIdeal> class_group_reps(const RealQuadField& F, bool narrow, Int coprime_to = 1);
bool narrowly_equivalent(const RealQuadField& F, const OIdeal& I, const OIdeal& J);

struct RayClassContext {
  RealQuadField field = RealQuadField::make(5);
  OIdeal modulus;
  bool with_infinity = true;
  FieldElt eps_plus;
  /// Smallest power of eps_plus that is 1 mod modulus.
  FieldElt eps_f;
  Int eps_f_exponent = 1;
  /// Class group representatives (wide or narrow) with norm prime to the modulus.
  std::vector<OIdeal> base_reps;
  /// Orbit label of each residue mod modulus under the relevant units, -1 off the unit group.
  std::vector<Int> orbit;
  Int orbit_count = 1;
  /// representatives[k] lies in class k; representatives[0] = (1).
  std::vector<OIdeal> representatives;
  Int norm_bound = 0;

  Int class_count() const { return static_cast<Int>(base_reps.size()) * orbit_count; }
  /// Class index of an integral ideal coprime to the modulus.
  Int class_of(const OIdeal& I) const;
};

/// norm_bound = 0 picks a default proportional to the class number.
RayClassContext ray_classes(const RealQuadField& F, const OIdeal& modulus, bool with_infinity,
                            Int norm_bound = 0);

/// Partial zeta of the ray class with the given index at s = 1 - k <= 0.
Rational partial_zeta_neg(const RayClassContext& ctx, Int class_index, int s,
                          LValueCache* cache = nullptr);
/// Partial zeta at s <= 0 of the narrow ray class mod modulus*inf1*inf2 containing rep.
Rational partial_zeta_from_rep(const RealQuadField& F, const OIdeal& modulus, const OIdeal& rep,
                               int s, bool open_plus_ray = false);

/// Dedekind zeta at s = 1 - k <= 0; s in {-1, -3} is checked against the
/// Siegel formula (OracleMismatch on disagreement).
Rational zeta_F_neg(const RealQuadField& F, int s, LValueCache* cache = nullptr);
/// Siegel's formula, s in {-1, -3}.
Rational zeta_F_siegel(const RealQuadField& F, int s);

struct LValueResult {
  Rational value;
  /// The signature of the character and the parity of k force L = 0.
  bool parity_vanishing = false;
};

/// L_F(s, chi) at s = 1 - k <= 0 for a character chi of the narrow ray class
/// group mod modulus*inf1*inf2, computed class by class over the narrow class
/// group with the character table of (O/modulus)^*.
Rational hecke_L_neg(const RealQuadField& F, const OIdeal& modulus, const IdealCharacter& chi,
                     int s);
/// L_F(s, chi_x * chi') with modulus the relative discriminant of chi_x.
LValueResult hecke_L_neg(const FQuadChar& chi_x, const IdealCharacter& chiprime, int s,
                         LValueCache* cache = nullptr);
/// The same value as a sum of partial zetas over ray classes (slow; used as a cross-check).
Rational hecke_L_neg_by_classes(const FQuadChar& chi_x, const IdealCharacter& chiprime, int s);

}  // namespace hq
