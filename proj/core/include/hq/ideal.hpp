#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hq/field.hpp"

namespace hq {

/// Integral ideal Z*a + Z*(b + c*w) in Hermite normal form:
/// c | a, c | b, 0 <= b < a.
struct OIdeal {
  Int a = 1;
  Int b = 0;
  Int c = 1;

  Int norm() const { return checked_mul(a, c); }
  bool is_unit() const { return a == 1 && c == 1; }
  bool contains(FieldElt x) const;
  /// True iff this ideal divides `other` (i.e. other is contained in it).
  bool divides(const OIdeal& other) const;

  friend bool operator==(const OIdeal&, const OIdeal&) = default;
  friend auto operator<=>(const OIdeal&, const OIdeal&) = default;
};

std::string to_string(const OIdeal& I);
OIdeal parse_ideal(std::string_view text);

/// HNF of the O-module generated by the given elements (not all zero).
OIdeal ideal_from_generators(const RealQuadField& F, const std::vector<FieldElt>& gens);
OIdeal ideal_from_element(const RealQuadField& F, FieldElt x);
OIdeal ideal_mul(const RealQuadField& F, const OIdeal& I, const OIdeal& J);
OIdeal ideal_pow(const RealQuadField& F, const OIdeal& I, unsigned e);
OIdeal ideal_conj(const RealQuadField& F, const OIdeal& I);
/// I / J for J | I; throws InexactDivision otherwise.
OIdeal ideal_div(const RealQuadField& F, const OIdeal& I, const OIdeal& J);
/// Validates that (a, b, c) is the HNF of an O-ideal.
bool is_valid_ideal(const RealQuadField& F, const OIdeal& I);
/// All ideals of norm exactly n.
std::vector<OIdeal> ideals_of_norm(const RealQuadField& F, Int n);

enum class Splitting { Split, Inert, Ramified };

struct PrimeIdeal {
  Int p = 0;
  int residue_degree = 1;
  Splitting splitting = Splitting::Split;
  OIdeal ideal;

  Int norm() const { return residue_degree == 1 ? p : p * p; }
  /// Ramification index over Q.
  int e() const { return splitting == Splitting::Ramified ? 2 : 1; }

  friend bool operator==(const PrimeIdeal& x, const PrimeIdeal& y) { return x.ideal == y.ideal; }
  friend auto operator<=>(const PrimeIdeal& x, const PrimeIdeal& y) { return x.ideal <=> y.ideal; }
};

std::vector<PrimeIdeal> primes_above(const RealQuadField& F, Int p);
int valuation(const RealQuadField& F, const PrimeIdeal& P, OIdeal I);
int valuation(const RealQuadField& F, const PrimeIdeal& P, FieldElt x);

struct IdealFactorization {
  std::vector<std::pair<PrimeIdeal, int>> factors;

  bool empty() const { return factors.empty(); }
};

/// Trial-division limit used for rational factoring; a cofactor above
/// limit^2 after trial division raises FactorizationOverflow.
void set_factor_bound(Int bound);
Int factor_bound();

/// Rational prime factorization of n > 0.
std::vector<std::pair<Int, int>> factor_integer(Int n);

IdealFactorization factor_ideal(const RealQuadField& F, const OIdeal& I);
OIdeal expand(const RealQuadField& F, const IdealFactorization& fact);
/// Factorizations of all divisors, in exponent-lexicographic order.
std::vector<IdealFactorization> divisor_factorizations(const IdealFactorization& fact);
std::vector<OIdeal> divisors(const RealQuadField& F, const OIdeal& I);
int moebius(const IdealFactorization& fact);
int moebius(const RealQuadField& F, const OIdeal& I);
Int norm_of(const IdealFactorization& fact);

/// Completely multiplicative character on integral ideals with values in
/// {-1, 0, 1}, given by its values on prime ideals.
class IdealCharacter {
 public:
  IdealCharacter() = default;
  explicit IdealCharacter(std::function<int(const PrimeIdeal&)> on_primes, std::string name = "custom")
      : on_primes_(std::move(on_primes)), name_(std::move(name)) {}

  static IdealCharacter trivial() { return IdealCharacter(); }

  bool is_trivial() const { return !on_primes_; }
  const std::string& name() const { return name_; }
  int at_prime(const PrimeIdeal& P) const { return on_primes_ ? on_primes_(P) : 1; }
  int operator()(const IdealFactorization& fact) const;
  int operator()(const RealQuadField& F, const OIdeal& I) const;
  IdealCharacter squared() const;

 private:
  std::function<int(const PrimeIdeal&)> on_primes_;
  std::string name_ = "trivial";
};

/// sum over r | b of N(r)^k * chi(r).
Rational sigma_F(const RealQuadField& F, const OIdeal& I, int k,
                 const IdealCharacter& chi = IdealCharacter::trivial());
Rational sigma_F(const IdealFactorization& fact, int k,
                 const IdealCharacter& chi = IdealCharacter::trivial());

/// Totally positive generator of I with minimal trace, if I is narrowly principal.
std::optional<FieldElt> totally_positive_generator(const RealQuadField& F, const OIdeal& I);
/// Any generator of I, if I is principal.
std::optional<FieldElt> principal_generator(const RealQuadField& F, const OIdeal& I);

/// The finite ring O / m, residues indexed by 0 .. N(m) - 1.
class ResidueRing {
 public:
  ResidueRing(const RealQuadField& F, const OIdeal& modulus);

  const OIdeal& modulus() const { return m_; }
  Int size() const { return size_; }
  Int index(FieldElt x) const;
  FieldElt element(Int idx) const;
  Int mul(Int i, Int j) const;
  bool is_unit(Int idx) const { return unit_[static_cast<size_t>(idx)]; }
  Int unit_count() const { return unit_count_; }
  const std::vector<PrimeIdeal>& primes() const { return primes_; }

 private:
  RealQuadField F_;
  OIdeal m_;
  Int size_;
  std::vector<bool> unit_;
  Int unit_count_ = 0;
  std::vector<PrimeIdeal> primes_;
};

}  // namespace hq
