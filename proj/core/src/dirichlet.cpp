#include "hq/dirichlet.hpp"

#include <map>
#include <mutex>

namespace hq {

int kronecker(Int d, Int n) {
  Int r4 = mod_pos(d, 4);
  if (r4 != 0 && r4 != 1) throw Error(ErrorCode::BadDiscriminant, std::to_string(d) + " is not 0,1 mod 4");
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (d % 2 == 0) return 0;
    Int d8 = mod_pos(d, 8);
    if ((v % 2 == 1) && (d8 == 3 || d8 == 5)) result = -result;
  }
  // Jacobi symbol (d / n) for odd n > 0.
  Int a = mod_pos(d, n), m = n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      Int m8 = m % 8;
      if (m8 == 3 || m8 == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

namespace {

std::mutex g_bern_mu;
std::vector<Rational> g_bern{Rational(1)};

Rational binom(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

std::mutex g_lneg_mu;
std::map<std::pair<Int, int>, Rational> g_lneg;

}  // namespace

Rational bernoulli(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative Bernoulli index");
  std::lock_guard<std::mutex> lock(g_bern_mu);
  while (static_cast<int>(g_bern.size()) <= k) {
    int m = static_cast<int>(g_bern.size());
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += binom(m + 1, j) * g_bern[static_cast<size_t>(j)];
    g_bern.push_back(-s / (m + 1));
  }
  return g_bern[static_cast<size_t>(k)];
}

Rational bernoulli_poly(int k, const Rational& x) {
  Rational r = 0;
  Rational xp = 1;
  for (int j = k; j >= 0; --j) {
    r += binom(k, j) * bernoulli(j) * xp;
    xp *= x;
  }
  return r;
}

Rational generalized_bernoulli(int k, Int d) {
  Int f = d < 0 ? -d : d;
  if (f == 1) return bernoulli_poly(k, Rational(1));
  Rational s = 0;
  for (Int a = 1; a <= f; ++a) {
    int c = kronecker(d, a);
    if (c != 0) s += c * bernoulli_poly(k, frac(a, f));
  }
  BigInt fk;
  mpz_pow_ui(fk.get_mpz_t(), BigInt(static_cast<long>(f)).get_mpz_t(), static_cast<unsigned long>(k - 1));
  return s * fk;
}

Rational L_neg(Int d, int s) {
  if (s > 0) throw Error(ErrorCode::InvalidArgument, "L_neg needs s <= 0");
  int k = 1 - s;
  {
    std::lock_guard<std::mutex> lock(g_lneg_mu);
    auto it = g_lneg.find({d, k});
    if (it != g_lneg.end()) return it->second;
  }
  Rational v = -generalized_bernoulli(k, d) / k;
  std::lock_guard<std::mutex> lock(g_lneg_mu);
  g_lneg.emplace(std::make_pair(d, k), v);
  return v;
}

std::vector<std::pair<Int, int>> factor_small(Int n) {
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int moebius_int(Int n) {
  int mu = 1;
  for (auto [p, e] : factor_small(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

bool fundamental_decomposition(Int m, Int& D, Int& f) {
  if (m == 0) return false;
  Int r4 = mod_pos(m, 4);
  if (r4 == 2 || r4 == 3) return false;
  Int sgn = m < 0 ? -1 : 1;
  Int a = m < 0 ? -m : m;
  // squarefree kernel
  Int core = 1, sq = 1;
  for (auto [p, e] : factor_small(a)) {
    if (e % 2) core *= p;
    sq *= ipow(p, static_cast<unsigned>(e / 2));
  }
  Int d = sgn * core;
  if (mod_pos(d, 4) != 1) {
    d *= 4;
    sq /= 2;
  }
  D = d;
  f = sq;
  return true;
}

namespace {

Rational pow_rat(Int base, int k) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(static_cast<long>(base)).get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(r);
}

template <class Fn>
Rational divisor_sum(Int n, Fn&& fn) {
  Rational s = 0;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += fn(d);
    if (d * d != n) s += fn(n / d);
  }
  return s;
}

}  // namespace

Rational sigma(Int n, int k) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sigma needs n >= 1");
  return divisor_sum(n, [&](Int d) -> Rational { return pow_rat(d, k); });
}

Rational sigma_chi(Int n, int k, Int chi) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sigma_chi needs n >= 1");
  return divisor_sum(n, [&](Int d) -> Rational { return kronecker(chi, d) * pow_rat(d, k); });
}

Rational sigma_chi_prime(Int n, int k, Int chi) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sigma_chi_prime needs n >= 1");
  return divisor_sum(n, [&](Int d) -> Rational { return kronecker(chi, n / d) * pow_rat(d, k); });
}

Rational sigma_ext(const Rational& x, int r) {
  if (x.get_den() != 1 || x < 0) return 0;
  if (x == 0) return zeta_neg(-r) / 2;
  return sigma(x.get_num().get_si(), r);
}

Rational hurwitz_H(Int N) {
  if (N < 0) return 0;
  if (N == 0) return Rational(-1, 12);
  Int D, f;
  if (!fundamental_decomposition(-N, D, f)) return 0;
  Rational s = 0;
  for (Int d = 1; d <= f; ++d) {
    if (f % d) continue;
    int mu = moebius_int(d);
    if (mu == 0) continue;
    s += mu * kronecker(D, d) * sigma(f / d, 1);
  }
  return L_neg(D, 0) * s;
}

Rational cohen_H(int r, Int N) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "cohen_H needs r >= 1");
  if (N < 0) return 0;
  if (N == 0) return zeta_neg(1 - 2 * r);
  Int m = (r % 2 == 0) ? N : -N;
  Int D, f;
  if (!fundamental_decomposition(m, D, f)) return 0;
  Rational s = 0;
  for (Int d = 1; d <= f; ++d) {
    if (f % d) continue;
    int mu = moebius_int(d);
    if (mu == 0) continue;
    s += mu * kronecker(D, d) * pow_rat(d, r - 1) * sigma(f / d, 2 * r - 1);
  }
  return L_neg(D, 1 - r) * s;
}

Rational cohen_H_ext(int r, const Rational& x) {
  if (x.get_den() != 1 || x < 0) return 0;
  return cohen_H(r, x.get_num().get_si());
}

Rational lambda1_full(Int N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "lambda1 needs N >= 1");
  Rational s = 0;
  for (Int d = 1; d <= N; ++d)
    if (N % d == 0) s += std::min(d, N / d);
  return s;
}

Rational lambda1(Int N) { return lambda1_full(N) / 2; }

RelationReport verify_kronecker(Int N_max) {
  RelationReport rep;
  rep.relation = "kronecker";
  rep.params["N_max"] = std::to_string(N_max);
  for (Int N = 1; N <= N_max; ++N) {
    Rational rhs = 2 * lambda1(N);
    for (Int s = -2 * isqrt(N) - 1; s <= 2 * isqrt(N) + 1; ++s) rhs += hurwitz_H(4 * N - s * s);
    rep.add(N, 2 * sigma(N, 1), rhs);
  }
  rep.notes.push_back("lambda1 is the half-sum; the full sum at N=1 gives rhs " +
                      to_string(hurwitz_H(4) + 2 * hurwitz_H(3) + 2 * hurwitz_H(0) + 2 * lambda1_full(1)));
  return rep;
}

RelationReport verify_eichler(Int N_max) {
  RelationReport rep;
  rep.relation = "eichler";
  rep.params["N_max"] = std::to_string(N_max);
  for (Int N = 1; N <= N_max; N += 2) {
    Rational rhs = lambda1(N);
    for (Int s = -isqrt(N) - 1; s <= isqrt(N) + 1; ++s) rhs += hurwitz_H(N - s * s);
    rep.add(N, sigma(N, 1) / 3, rhs);
  }
  return rep;
}

RelationReport verify_cohen_h2(Int N_max) {
  RelationReport rep;
  rep.relation = "cohen-h2";
  rep.params["N_max"] = std::to_string(N_max);
  for (Int N = 0; N <= N_max; ++N) {
    Rational sum = 0;
    for (Int s = -isqrt(N) - 1; s <= isqrt(N) + 1; ++s) sum += sigma_ext(frac(N - s * s, 4), 1);
    Rational rhs = Rational(-1, 5) * sum;
    if (is_square(N)) rhs -= frac(N, 10);
    rep.add(N, cohen_H(2, N), rhs);
  }
  return rep;
}

RelationReport verify_cohen_h4(Int N_max) {
  RelationReport rep;
  rep.relation = "cohen-h4";
  rep.params["N_max"] = std::to_string(N_max);
  for (Int N = 0; N <= N_max; ++N) {
    Rational rhs = 0;
    for (Int s = -isqrt(N) - 1; s <= isqrt(N) + 1; ++s) rhs += sigma_ext(frac(N - s * s, 4), 3);
    rep.add(N, cohen_H(4, N), rhs);
  }
  return rep;
}

RelationReport verify_classical(Int N_max) {
  if (N_max < 1) throw Error(ErrorCode::InvalidArgument, "N_max must be >= 1");
  RelationReport rep;
  rep.relation = "classical";
  rep.params["N_max"] = std::to_string(N_max);
  rep.absorb(verify_kronecker(N_max));
  rep.absorb(verify_eichler(N_max));
  rep.absorb(verify_cohen_h2(N_max));
  rep.absorb(verify_cohen_h4(N_max));
  return rep;
}

QSeries cohen_congruence_series(int r, Int D, Int prec, bool odd_s) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "congruence series need r >= 2");
  Int r4 = mod_pos(D, 4);
  if (r4 != 0 && r4 != 1) throw Error(ErrorCode::BadDiscriminant, std::to_string(D));
  Int absD = D < 0 ? -D : D;
  if ((r % 2 == 1 ? D : -D) != absD)
    throw Error(ErrorCode::BadDiscriminantParity,
                "(-1)^(r+1) D must equal |D| for r=" + std::to_string(r) + ", D=" + std::to_string(D));
  QSeries out(prec);
  for (Int N = 0; N <= prec; ++N) {
    Int top = odd_s ? 4 * N : N;
    Rational s = 0;
    for (Int t = -isqrt(top) - 1; t <= isqrt(top) + 1; ++t) {
      if (odd_s && t % 2 == 0) continue;
      s += cohen_H_ext(r, frac(top - t * t, absD));
    }
    out[N] = s;
  }
  return out;
}

}  // namespace hq
