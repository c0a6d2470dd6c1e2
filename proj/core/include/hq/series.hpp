#pragma once

#include <string>
#include <vector>

#include "hq/common.hpp"

namespace hq {

/// Truncated q-expansion sum_{n=0}^{prec} c_n q^n with exact coefficients.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(Int prec);
  QSeries(Int prec, std::vector<Rational> coeffs);

  Int prec() const { return prec_; }
  const Rational& operator[](Int n) const { return c_[static_cast<size_t>(n)]; }
  Rational& operator[](Int n) { return c_[static_cast<size_t>(n)]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  QSeries truncated(Int prec) const;
  bool is_zero() const;

  friend QSeries operator+(const QSeries& f, const QSeries& g);
  friend QSeries operator-(const QSeries& f, const QSeries& g);
  friend QSeries operator*(const QSeries& f, const QSeries& g);
  friend QSeries operator*(const Rational& k, const QSeries& f);
  /// Coefficientwise equality up to the common precision.
  friend bool operator==(const QSeries& f, const QSeries& g);

  QSeries pow(unsigned k) const;

 private:
  Int prec_ = -1;
  std::vector<Rational> c_;
};

std::string to_string(const QSeries& f, Int terms = 8);

}  // namespace hq
