#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hq {

using Int = std::int64_t;
using Wide = __int128;
using Rational = mpq_class;
using BigInt = mpz_class;

enum class ErrorCode {
  NotFundamentalDiscriminant,
  InexactDivision,
  NoNegativeNormUnit,
  ZeroElement,
  FactorizationOverflow,
  BadDiscriminant,
  BadDiscriminantParity,
  EnumerationBoundExceeded,
  OracleMismatch,
  UnsupportedQMode,
  NotPositiveDefinite,
  ArithmeticOverflow,
  InvalidArgument,
  ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Overflow-checked 64-bit arithmetic.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int narrow(Wide v);

Int floor_div(Int a, Int b);
Int mod_pos(Int a, Int m);
Int gcd(Int a, Int b);
// Returns g = gcd(a, b) and sets s, t with s*a + t*b = g.
Int ext_gcd(Int a, Int b, Int& s, Int& t);
Int isqrt(Int n);
Wide isqrt_wide(Wide n);
bool is_square(Int n, Int* root = nullptr);
Int ipow(Int base, unsigned exp);
Int mod_pow(Int base, Int exp, Int mod);

BigInt to_big(Wide v);

// Canonical fraction num/den.
Rational frac(Int num, Int den);
Rational frac(const BigInt& num, const BigInt& den);

// Exact rationals serialize as "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);
std::string to_string_wide(Wide v);

}  // namespace hq
