#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hq/common.hpp"

namespace hq {

/// Element a + b*w of the maximal order Z + Z*w.
struct FieldElt {
  Int a = 0;
  Int b = 0;

  friend bool operator==(const FieldElt&, const FieldElt&) = default;
  friend auto operator<=>(const FieldElt&, const FieldElt&) = default;
};

FieldElt operator+(FieldElt x, FieldElt y);
FieldElt operator-(FieldElt x, FieldElt y);
FieldElt operator-(FieldElt x);
FieldElt operator*(Int k, FieldElt x);

/// Element a + b*w with rational coordinates, used for quotients.
struct QElt {
  Rational a = 0;
  Rational b = 0;

  QElt() = default;
  QElt(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QElt(const FieldElt& x) : a(x.a), b(x.b) {}

  friend bool operator==(const QElt&, const QElt&) = default;
};

QElt operator+(const QElt& x, const QElt& y);
QElt operator-(const QElt& x, const QElt& y);
QElt operator*(const Rational& k, const QElt& x);

enum class OmegaKind { HalfOnePlusSqrt, HalfSqrt };

/// Q(sqrt(D)) for a fundamental discriminant D > 4, with
/// w = (1 + sqrt D)/2 when D = 1 mod 4 and w = sqrt(D)/2 when D = 0 mod 4.
class RealQuadField {
 public:
  static RealQuadField make(Int D);

  Int disc() const { return disc_; }
  OmegaKind omega_kind() const { return kind_; }
  Int omega_trace() const { return omega_trace_; }
  Int omega_norm() const { return omega_norm_; }

  FieldElt mul(FieldElt x, FieldElt y) const;
  FieldElt sqr(FieldElt x) const { return mul(x, x); }
  FieldElt pow(FieldElt x, unsigned e) const;
  FieldElt conj(FieldElt x) const;
  Int trace(FieldElt x) const;
  Int norm(FieldElt x) const;
  Wide norm_wide(FieldElt x) const;
  /// Exact quotient x / y; throws InexactDivision when y does not divide x in O.
  FieldElt div_exact(FieldElt x, FieldElt y) const;
  bool divides(FieldElt y, FieldElt x) const;

  QElt mulq(const QElt& x, const QElt& y) const;
  QElt conjq(const QElt& x) const;
  Rational traceq(const QElt& x) const;
  Rational normq(const QElt& x) const;
  QElt invq(const QElt& x) const;

  /// sqrt(D) = 2w - Tr(w).
  FieldElt sqrt_disc() const { return {-omega_trace_, 2}; }

  /// Sign of the image under the first (sqrt D > 0) or second real embedding.
  int sign(FieldElt x, int embedding) const;
  int signq(const QElt& x, int embedding) const;
  bool is_totally_positive(FieldElt x) const;
  /// True iff x = lambda^2 mod 4*O for some lambda in O.
  bool is_square_mod4(FieldElt x) const;
  /// True iff x is the square of an element of O.
  bool is_square(FieldElt x, FieldElt* root = nullptr) const;

  /// Real approximations of the two embeddings (diagnostics only).
  double approx(FieldElt x, int embedding) const;

  friend bool operator==(const RealQuadField& a, const RealQuadField& b) {
    return a.disc_ == b.disc_;
  }

 private:
  RealQuadField(Int D, OmegaKind kind, Int t, Int n)
      : disc_(D), kind_(kind), omega_trace_(t), omega_norm_(n) {}

  Int disc_;
  OmegaKind kind_;
  Int omega_trace_;
  Int omega_norm_;
};

bool is_fundamental_discriminant(Int D);

std::string to_string(FieldElt x);
FieldElt parse_elt(std::string_view text);

/// Fundamental unit eps > 1, found from the continued fraction of w.
FieldElt fundamental_unit(const RealQuadField& F);
/// Generator > 1 of the totally positive units.
FieldElt totally_positive_unit(const RealQuadField& F);

/// u = alpha + beta*w with N(u) = -1 and Tr(u) > 0, delta = u*sqrt(D).
struct RestrictionUnit {
  Int alpha = 0;
  Int beta = 0;
  FieldElt delta;

  FieldElt unit() const { return {alpha, beta}; }
  /// l(a + b*w) = a*beta - b*alpha, which equals Tr(x / delta).
  Int index(FieldElt x) const { return checked_sub(checked_mul(x.a, beta), checked_mul(x.b, alpha)); }
};

RestrictionUnit find_restriction_unit(const RealQuadField& F);

/// All totally positive xi with l(xi) = n, sorted by b; xi = 0 is added when
/// n == 0 and include_zero is set.
std::vector<FieldElt> enumerate_line(const RealQuadField& F, const RestrictionUnit& u, Int n,
                                     bool include_zero = false);

}  // namespace hq
