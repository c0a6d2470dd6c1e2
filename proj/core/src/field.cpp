#include "hq/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>

namespace hq {

FieldElt operator+(FieldElt x, FieldElt y) { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }
FieldElt operator-(FieldElt x, FieldElt y) { return {checked_sub(x.a, y.a), checked_sub(x.b, y.b)}; }
FieldElt operator-(FieldElt x) { return {checked_sub(0, x.a), checked_sub(0, x.b)}; }
FieldElt operator*(Int k, FieldElt x) { return {checked_mul(k, x.a), checked_mul(k, x.b)}; }

QElt operator+(const QElt& x, const QElt& y) { return QElt{x.a + y.a, x.b + y.b}; }
QElt operator-(const QElt& x, const QElt& y) { return QElt{x.a - y.a, x.b - y.b}; }
QElt operator*(const Rational& k, const QElt& x) { return QElt{k * x.a, k * x.b}; }

bool is_fundamental_discriminant(Int D) {
  auto squarefree = [](Int m) {
    if (m < 0) m = -m;
    for (Int p = 2; p * p <= m; ++p) {
      if (m % (p * p) == 0) return false;
      if (m % p == 0) m /= p;
    }
    return true;
  };
  Int r = mod_pos(D, 4);
  if (r == 1) return D != 1 && squarefree(D);
  if (r == 0) {
    Int m = D / 4;
    Int mr = mod_pos(m, 4);
    return (mr == 2 || mr == 3) && squarefree(m);
  }
  return false;
}

RealQuadField RealQuadField::make(Int D) {
  if (D <= 4 || !is_fundamental_discriminant(D))
    throw Error(ErrorCode::NotFundamentalDiscriminant, std::to_string(D));
  if (D % 4 == 1) return RealQuadField(D, OmegaKind::HalfOnePlusSqrt, 1, (1 - D) / 4);
  return RealQuadField(D, OmegaKind::HalfSqrt, 0, -D / 4);
}

FieldElt RealQuadField::mul(FieldElt x, FieldElt y) const {
  Wide ac = static_cast<Wide>(x.a) * y.a;
  Wide bd = static_cast<Wide>(x.b) * y.b;
  Wide ad_bc = static_cast<Wide>(x.a) * y.b + static_cast<Wide>(x.b) * y.a;
  return {narrow(ac - bd * omega_norm_), narrow(ad_bc + bd * omega_trace_)};
}

FieldElt RealQuadField::pow(FieldElt x, unsigned e) const {
  FieldElt r{1, 0};
  while (e > 0) {
    if (e & 1U) r = mul(r, x);
    e >>= 1U;
    if (e > 0) x = mul(x, x);
  }
  return r;
}

FieldElt RealQuadField::conj(FieldElt x) const {
  return {checked_add(x.a, checked_mul(x.b, omega_trace_)), checked_sub(0, x.b)};
}

Int RealQuadField::trace(FieldElt x) const {
  return checked_add(checked_mul(2, x.a), checked_mul(x.b, omega_trace_));
}

Wide RealQuadField::norm_wide(FieldElt x) const {
  Wide a = x.a, b = x.b;
  return a * a + a * b * omega_trace_ + b * b * omega_norm_;
}

Int RealQuadField::norm(FieldElt x) const { return narrow(norm_wide(x)); }

FieldElt RealQuadField::div_exact(FieldElt x, FieldElt y) const {
  Wide n = norm_wide(y);
  if (n == 0) throw Error(ErrorCode::ZeroElement, "division by zero");
  FieldElt yc = conj(y);
  Wide ac = static_cast<Wide>(x.a) * yc.a;
  Wide bd = static_cast<Wide>(x.b) * yc.b;
  Wide pa = ac - bd * omega_norm_;
  Wide pb = static_cast<Wide>(x.a) * yc.b + static_cast<Wide>(x.b) * yc.a + bd * omega_trace_;
  if (pa % n != 0 || pb % n != 0)
    throw Error(ErrorCode::InexactDivision, to_string(x) + " / " + to_string(y));
  return {narrow(pa / n), narrow(pb / n)};
}

bool RealQuadField::divides(FieldElt y, FieldElt x) const {
  try {
    div_exact(x, y);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InexactDivision) return false;
    throw;
  }
}

QElt RealQuadField::mulq(const QElt& x, const QElt& y) const {
  Rational bd = x.b * y.b;
  return QElt{x.a * y.a - bd * omega_norm_, x.a * y.b + x.b * y.a + bd * omega_trace_};
}

QElt RealQuadField::conjq(const QElt& x) const { return QElt{x.a + x.b * omega_trace_, -x.b}; }

Rational RealQuadField::traceq(const QElt& x) const { return 2 * x.a + x.b * omega_trace_; }

Rational RealQuadField::normq(const QElt& x) const {
  return x.a * x.a + x.a * x.b * omega_trace_ + x.b * x.b * omega_norm_;
}

QElt RealQuadField::invq(const QElt& x) const {
  Rational n = normq(x);
  if (n == 0) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  QElt c = conjq(x);
  return QElt{c.a / n, c.b / n};
}

namespace {

// Sign of P + Q*sqrt(D) for integers P, Q.
int sign_surd(const BigInt& P, const BigInt& Q, Int D) {
  int sp = sgn(P), sq = sgn(Q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  BigInt lhs = P * P;
  BigInt rhs = Q * Q * D;
  return lhs > rhs ? sp : sq;
}

}  // namespace

int RealQuadField::sign(FieldElt x, int embedding) const {
  // 2x = (2a + b*t) + b*sqrt(D) under the first embedding.
  Wide P = 2 * static_cast<Wide>(x.a) + static_cast<Wide>(x.b) * omega_trace_;
  Wide Q = embedding == 1 ? static_cast<Wide>(x.b) : -static_cast<Wide>(x.b);
  const Wide lim = static_cast<Wide>(1) << 52;
  if (P < lim && P > -lim && Q < lim && Q > -lim) {
    int sp = (P > 0) - (P < 0), sq = (Q > 0) - (Q < 0);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    return P * P > Q * Q * disc_ ? sp : sq;
  }
  return sign_surd(to_big(P), to_big(Q), disc_);
}

int RealQuadField::signq(const QElt& x, int embedding) const {
  Rational P = 2 * x.a + x.b * omega_trace_;
  Rational Q = embedding == 1 ? Rational(x.b) : Rational(-x.b);
  BigInt den = lcm(P.get_den(), Q.get_den());
  Rational Pi = P * den, Qi = Q * den;
  return sign_surd(Pi.get_num(), Qi.get_num(), disc_);
}

bool RealQuadField::is_totally_positive(FieldElt x) const {
  return trace(x) > 0 && norm_wide(x) > 0;
}

bool RealQuadField::is_square_mod4(FieldElt x) const {
  const FieldElt reps[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  Int xa = mod_pos(x.a, 4), xb = mod_pos(x.b, 4);
  for (FieldElt l : reps) {
    FieldElt s = sqr(l);
    if (mod_pos(s.a, 4) == xa && mod_pos(s.b, 4) == xb) return true;
  }
  return false;
}

bool RealQuadField::is_square(FieldElt x, FieldElt* root) const {
  if (x == FieldElt{}) {
    if (root) *root = {};
    return true;
  }
  Wide n = norm_wide(x);
  if (n < 0) return false;
  Wide m = isqrt_wide(n);
  if (m * m != n) return false;
  if (x.b == 0 && x.a > 0) {
    // Trace-free roots: k*sqrt(D) or k*w.
    Int unit_sq = kind_ == OmegaKind::HalfOnePlusSqrt ? disc_ : disc_ / 4;
    Int k;
    if (x.a % unit_sq == 0 && hq::is_square(x.a / unit_sq, &k)) {
      FieldElt r = kind_ == OmegaKind::HalfOnePlusSqrt ? FieldElt{-k, 2 * k} : FieldElt{0, k};
      if (sqr(r) == x) {
        if (root) *root = r;
        return true;
      }
    }
  }
  Int tr = trace(x);
  for (Wide s : {m, -m}) {
    Wide T = static_cast<Wide>(tr) + 2 * s;
    if (T <= 0) continue;
    Wide t = isqrt_wide(T);
    if (t * t != T) continue;
    FieldElt num{narrow(static_cast<Wide>(x.a) + s), x.b};
    if (num.a % static_cast<Int>(t) != 0 || num.b % static_cast<Int>(t) != 0) continue;
    FieldElt r{num.a / static_cast<Int>(t), num.b / static_cast<Int>(t)};
    if (sqr(r) == x) {
      if (root) *root = r;
      return true;
    }
  }
  return false;
}

double RealQuadField::approx(FieldElt x, int embedding) const {
  double s = std::sqrt(static_cast<double>(disc_));
  double w = kind_ == OmegaKind::HalfOnePlusSqrt ? (1.0 + (embedding == 1 ? s : -s)) / 2.0
                                                   : (embedding == 1 ? s : -s) / 2.0;
  return static_cast<double>(x.a) + static_cast<double>(x.b) * w;
}

std::string to_string(FieldElt x) {
  std::string s = std::to_string(x.a);
  s += x.b < 0 ? "-" : "+";
  s += std::to_string(x.b < 0 ? -x.b : x.b);
  s += "*w";
  return s;
}

FieldElt parse_elt(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty field element");
  // Split into signed terms; a term is an integer or [integer*]w.
  FieldElt r;
  bool seen = false;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (seen) {
      throw Error(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
    }
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    Int coef = 1;
    bool has_digits = j > i;
    if (has_digits) coef = std::stoll(s.substr(i, j - i));
    bool is_w = false;
    if (j < s.size() && s[j] == '*') {
      ++j;
      if (j >= s.size() || s[j] != 'w' || !has_digits)
        throw Error(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
      is_w = true;
      ++j;
    } else if (j < s.size() && s[j] == 'w') {
      is_w = true;
      ++j;
    } else if (!has_digits) {
      throw Error(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
    }
    if (is_w)
      r.b = checked_add(r.b, sign * coef);
    else
      r.a = checked_add(r.a, sign * coef);
    seen = true;
    i = j;
  }
  return r;
}

FieldElt fundamental_unit(const RealQuadField& F) {
  const Int D = F.disc();
  const Int s = isqrt(D);
  // Continued fraction of w = (P + sqrt D)/Q.
  Int P = F.omega_kind() == OmegaKind::HalfOnePlusSqrt ? 1 : 0;
  Int Q = 2;
  Int p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (int k = 0; k < 100000; ++k) {
    Int a = floor_div(P + s, Q);
    Int p = checked_add(checked_mul(a, p_prev), p_prev2);
    Int q = checked_add(checked_mul(a, q_prev), q_prev2);
    Wide n = F.norm_wide({p, -q});
    if (n == 1 || n == -1) {
      // p - q*w' = (p - q*Tr w) + q*w.
      return {checked_sub(p, checked_mul(q, F.omega_trace())), q};
    }
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    Int P_next = a * Q - P;
    Int Q_next = (D - P_next * P_next) / Q;
    P = P_next;
    Q = Q_next;
  }
  throw Error(ErrorCode::EnumerationBoundExceeded, "continued fraction did not close");
}

FieldElt totally_positive_unit(const RealQuadField& F) {
  FieldElt e = fundamental_unit(F);
  return F.norm(e) == 1 ? e : F.sqr(e);
}

RestrictionUnit find_restriction_unit(const RealQuadField& F) {
  FieldElt e = fundamental_unit(F);
  if (F.norm(e) != -1)
    throw Error(ErrorCode::NoNegativeNormUnit,
                "fundamental unit " + to_string(e) + " of D=" + std::to_string(F.disc()) +
                    " has norm +1");
  RestrictionUnit u;
  u.alpha = e.a;
  u.beta = e.b;
  u.delta = F.mul(e, F.sqrt_disc());
  if (!F.is_totally_positive(u.delta) || F.trace(e) <= 0)
    throw Error(ErrorCode::OracleMismatch, "restriction unit is not positive at infinity");
  return u;
}

namespace {

// Smallest k with pred(k) true, for pred monotone (false ... false true ... true).
Int first_true(const std::function<bool(Int)>& pred) {
  Int lo, hi;
  if (pred(0)) {
    hi = 0;
    Int step = 1;
    lo = -1;
    while (pred(lo)) {
      hi = lo;
      step *= 2;
      lo = checked_sub(hi, step);
    }
  } else {
    lo = 0;
    Int step = 1;
    hi = 1;
    while (!pred(hi)) {
      lo = hi;
      step *= 2;
      hi = checked_add(lo, step);
    }
  }
  // pred(lo) false, pred(hi) true
  while (hi - lo > 1) {
    Int mid = lo + (hi - lo) / 2;
    if (pred(mid))
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

std::vector<FieldElt> enumerate_line(const RealQuadField& F, const RestrictionUnit& u, Int n,
                                     bool include_zero) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "line index must be non-negative");
  std::vector<FieldElt> out;
  if (n == 0) {
    if (include_zero) out.push_back({0, 0});
    return out;
  }
  Int s, t;
  ext_gcd(u.beta, u.alpha, s, t);
  FieldElt base{checked_mul(s, n), checked_mul(-t, n)};
  FieldElt unit = u.unit();
  auto at = [&](Int k) { return base + k * unit; };
  // First embedding increases with k, second decreases.
  Int k_lo = first_true([&](Int k) { return F.sign(at(k), 1) > 0; });
  Int k_hi = first_true([&](Int k) { return F.sign(at(k), 2) <= 0; }) - 1;
  for (Int k = k_lo; k <= k_hi; ++k) out.push_back(at(k));
  std::sort(out.begin(), out.end(),
            [](FieldElt x, FieldElt y) { return x.b != y.b ? x.b < y.b : x.a < y.a; });
  return out;
}

}  // namespace hq
