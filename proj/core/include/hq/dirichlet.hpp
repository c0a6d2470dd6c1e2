#pragma once

#include <utility>

#include "hq/report.hpp"
#include "hq/series.hpp"

namespace hq {

/// Kronecker symbol (d/n) for d = 0,1 mod 4; throws BadDiscriminant otherwise.
int kronecker(Int d, Int n);

/// Bernoulli numbers with B_1 = -1/2 (memoized, thread safe).
Rational bernoulli(int k);
Rational bernoulli_poly(int k, const Rational& x);
/// B_{k,chi_d} = f^{k-1} sum_{a=1}^{f} chi_d(a) B_k(a/f), f = |d|; d = 1 gives B_k(1).
Rational generalized_bernoulli(int k, Int d);
/// L(s, chi_d) for s = 1 - k <= 0, as -B_{k,chi_d}/k.
Rational L_neg(Int d, int s);
/// zeta(s) for s <= 0.
inline Rational zeta_neg(int s) { return L_neg(1, s); }

/// Writes m != 0 as f^2 * D with D a fundamental discriminant or D = 1.
/// Returns false when m = 2,3 mod 4 (no such decomposition).
bool fundamental_decomposition(Int m, Int& D, Int& f);

std::vector<std::pair<Int, int>> factor_small(Int n);
/// Arithmetic Moebius function on n >= 1.
int moebius_int(Int n);
/// sum_{d | n} d^k, n >= 1.
Rational sigma(Int n, int k);
/// sum_{d | n} d^k chi_d(d).
Rational sigma_chi(Int n, int k, Int d);
/// sum_{d | n} d^k chi_d(n / d).
Rational sigma_chi_prime(Int n, int k, Int d);
/// sigma_r at a rational argument: 0 off the integers and below 0,
/// zeta(-r)/2 at 0.
Rational sigma_ext(const Rational& x, int r);

/// Hurwitz class number.
Rational hurwitz_H(Int N);
/// Cohen's H(r, N).
Rational cohen_H(int r, Int N);
/// Cohen's H(r, x) at a rational argument; 0 unless x is a non-negative integer.
Rational cohen_H_ext(int r, const Rational& x);

/// Half of sum_{d | N} min(d, N/d).
Rational lambda1(Int N);
/// sum_{d | N} min(d, N/d) without the factor 1/2.
Rational lambda1_full(Int N);

RelationReport verify_kronecker(Int N_max);
RelationReport verify_eichler(Int N_max);
RelationReport verify_cohen_h2(Int N_max);
RelationReport verify_cohen_h4(Int N_max);
/// All four classical relations for N <= N_max.
RelationReport verify_classical(Int N_max);

/// sum_N (sum_s H(r, (N - s^2)/|D|)) q^N, or with odd s and 4N - s^2.
QSeries cohen_congruence_series(int r, Int D, Int prec, bool odd_s);

}  // namespace hq
