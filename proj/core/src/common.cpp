#include "hq/common.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace hq {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFundamentalDiscriminant: return "NotFundamentalDiscriminant";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NoNegativeNormUnit: return "NoNegativeNormUnit";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::FactorizationOverflow: return "FactorizationOverflow";
    case ErrorCode::BadDiscriminant: return "BadDiscriminant";
    case ErrorCode::BadDiscriminantParity: return "BadDiscriminantParity";
    case ErrorCode::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::UnsupportedQMode: return "UnsupportedQMode";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::ArithmeticOverflow, "64-bit add");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::ArithmeticOverflow, "64-bit sub");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::ArithmeticOverflow, "64-bit mul");
  return r;
}

Int narrow(Wide v) {
  if (v > static_cast<Wide>(INT64_MAX) || v < static_cast<Wide>(INT64_MIN))
    throw Error(ErrorCode::ArithmeticOverflow, "value exceeds 64 bits");
  return static_cast<Int>(v);
}

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_pos(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + (m < 0 ? -m : m) : r;
}

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int ext_gcd(Int a, Int b, Int& s, Int& t) {
  Int old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

Wide isqrt_wide(Wide n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative");
  if (n < 2) return n;
  // Newton iteration from an upper bound.
  Wide x = n;
  Wide y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

Int isqrt(Int n) { return static_cast<Int>(isqrt_wide(n)); }

bool is_square(Int n, Int* root) {
  if (n < 0) return false;
  Int r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

Int ipow(Int base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Int mod_pow(Int base, Int exp, Int mod) {
  Wide result = 1 % mod;
  Wide b = mod_pos(base, mod);
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<Int>(result);
}

BigInt to_big(Wide v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

Rational frac(Int num, Int den) {
  if (den == 0) throw Error(ErrorCode::ZeroElement, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational frac(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ZeroElement, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string_wide(Wide v) { return to_big(v).get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

}  // namespace hq
