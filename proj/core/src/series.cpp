#include "hq/series.hpp"

#include <algorithm>

namespace hq {

QSeries::QSeries(Int prec) : prec_(prec), c_(static_cast<size_t>(prec + 1)) {
  if (prec < 0) throw Error(ErrorCode::InvalidArgument, "negative series precision");
}

QSeries::QSeries(Int prec, std::vector<Rational> coeffs) : prec_(prec), c_(std::move(coeffs)) {
  if (prec < 0) throw Error(ErrorCode::InvalidArgument, "negative series precision");
  c_.resize(static_cast<size_t>(prec + 1));
}

QSeries QSeries::truncated(Int prec) const {
  if (prec > prec_) throw Error(ErrorCode::InvalidArgument, "cannot extend a truncated series");
  return QSeries(prec, std::vector<Rational>(c_.begin(), c_.begin() + prec + 1));
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

QSeries operator+(const QSeries& f, const QSeries& g) {
  QSeries r(std::min(f.prec_, g.prec_));
  for (Int n = 0; n <= r.prec_; ++n) r[n] = f[n] + g[n];
  return r;
}

QSeries operator-(const QSeries& f, const QSeries& g) {
  QSeries r(std::min(f.prec_, g.prec_));
  for (Int n = 0; n <= r.prec_; ++n) r[n] = f[n] - g[n];
  return r;
}

QSeries operator*(const QSeries& f, const QSeries& g) {
  QSeries r(std::min(f.prec_, g.prec_));
  for (Int i = 0; i <= r.prec_; ++i) {
    if (f[i] == 0) continue;
    for (Int j = 0; i + j <= r.prec_; ++j)
      if (g[j] != 0) r[i + j] += f[i] * g[j];
  }
  return r;
}

QSeries operator*(const Rational& k, const QSeries& f) {
  QSeries r(f.prec_);
  for (Int n = 0; n <= r.prec_; ++n) r[n] = k * f[n];
  return r;
}

bool operator==(const QSeries& f, const QSeries& g) {
  Int p = std::min(f.prec_, g.prec_);
  for (Int n = 0; n <= p; ++n)
    if (f[n] != g[n]) return false;
  return true;
}

QSeries QSeries::pow(unsigned k) const {
  QSeries r(prec_);
  r[0] = 1;
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string to_string(const QSeries& f, Int terms) {
  std::string s;
  Int shown = 0;
  for (Int n = 0; n <= f.prec() && shown < terms; ++n) {
    if (f[n] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(f[n]) + ")q^" + std::to_string(n);
    ++shown;
  }
  if (s.empty()) s = "0";
  return s + " + O(q^" + std::to_string(f.prec() + 1) + ")";
}

}  // namespace hq
