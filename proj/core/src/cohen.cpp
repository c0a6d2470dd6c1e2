#include "hq/cohen.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <json.hpp>
#include <mutex>
#include <thread>

#include "hq/dirichlet.hpp"
#include "hq/shintani.hpp"

namespace hq {

namespace {

Rational pow_int(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

IdealFactorization quotient(const IdealFactorization& f, const IdealFactorization& a) {
  IdealFactorization out;
  for (const auto& [P, e] : f.factors) {
    int ea = 0;
    for (const auto& [Q, k] : a.factors)
      if (Q == P) ea = k;
    if (e > ea) out.factors.emplace_back(P, e - ea);
  }
  return out;
}

}  // namespace

Rational h_coeff(const RealQuadField& F, int kappa, const IdealCharacter& chiprime, FieldElt xi,
                 LValueCache* cache) {
  if (kappa < 1) throw Error(ErrorCode::InvalidArgument, "kappa must be >= 1");
  if (!F.is_totally_positive(xi)) return 0;
  const FieldElt x = kappa % 2 == 0 ? xi : -xi;
  if (!F.is_square_mod4(x)) return 0;

  const FQuadChar chi = relative_discriminant(F, x);
  if (!chi.cond_integral)
    throw Error(ErrorCode::OracleMismatch, "non-integral conductor for a square mod 4: " + to_string(x));
  const Rational L = hecke_L_neg(chi, chiprime, 1 - kappa, cache).value;
  if (L == 0) return 0;

  const IdealCharacter chix = chi.character();
  const IdealCharacter chi2 = chiprime.squared();
  const IdealFactorization f = factor_ideal(F, chi.cond);
  Rational sum = 0;
  for (const IdealFactorization& a : divisor_factorizations(f)) {
    int mu = moebius(a);
    if (mu == 0) continue;
    int c = chix(a) * chiprime(a);
    if (c == 0) continue;
    sum += mu * c * pow_int(Rational(norm_of(a)), kappa - 1) *
           sigma_F(quotient(f, a), 2 * kappa - 1, chi2);
  }
  return chiprime(F, chi.disc) * L * sum;
}

const Rational* HilbertCoeffTable::find(FieldElt xi) const {
  for (const auto& c : coeffs)
    if (c.xi == xi) return &c.value;
  return nullptr;
}

Rational HilbertCoeffTable::line_sum(Int n) const {
  if (n == 0) return constant;
  Rational s = 0;
  for (const auto& c : coeffs)
    if (c.n == n) s += c.value;
  return s;
}

std::string HilbertCoeffTable::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["disc"] = field.disc();
  j["kappa"] = kappa;
  j["chi_prime"] = chi_prime.name();
  j["unit"] = to_string(unit.unit());
  j["prec"] = prec;
  j["constant"] = to_string(constant);
  auto& rows = j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : coeffs)
    rows.push_back({{"xi", to_string(c.xi)}, {"n", c.n}, {"H", to_string(c.value)}});
  return j.dump(2) + "\n";
}

HilbertCoeffTable g_table(const RealQuadField& F, int kappa, const IdealCharacter& chiprime,
                          const RestrictionUnit& unit, Int prec, LValueCache* cache, unsigned threads) {
  if (kappa < 1) throw Error(ErrorCode::InvalidArgument, "kappa must be >= 1");
  if (prec < 0) throw Error(ErrorCode::InvalidArgument, "prec must be >= 0");
  HilbertCoeffTable t;
  t.field = F;
  t.kappa = kappa;
  t.chi_prime = chiprime;
  t.unit = unit;
  t.prec = prec;
  t.constant = chiprime.is_trivial() ? zeta_F_neg(F, 1 - 2 * kappa, cache)
                                     : hecke_L_neg(F, OIdeal{}, chiprime.squared(), 1 - 2 * kappa);
  for (Int n = 1; n <= prec; ++n)
    for (FieldElt xi : enumerate_line(F, unit, n)) {
      FieldElt x = kappa % 2 == 0 ? xi : -xi;
      if (F.is_square_mod4(x)) t.coeffs.push_back({xi, n, 0});
    }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(1, t.coeffs.size())));
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (size_t i = next++; i < t.coeffs.size(); i = next++) {
      try {
        t.coeffs[i].value = h_coeff(F, kappa, chiprime, t.coeffs[i].xi, cache);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = t.coeffs.size();
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return t;
}

Rational h_coeff_q(int r, Int N) {
  if (r == 1) throw Error(ErrorCode::UnsupportedQMode, "the degree-one series needs r >= 2");
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be >= 2");
  if (N < 0) return 0;
  if (N == 0) return zeta_neg(1 - 2 * r);
  const Int x = r % 2 == 0 ? N : -N;
  if (mod_pos(x, 4) == 2 || mod_pos(x, 4) == 3) return 0;
  const QQuadChar chi = relative_discriminant_q(x);
  // L(1 - r, chi) = |d|^{r-1} sum_a chi(a) zeta(1 - r, a/|d|).
  const Int d = chi.square_class_flag ? 1 : (chi.disc < 0 ? -chi.disc : chi.disc);
  Rational L = 0;
  for (Int a = 1; a <= d; ++a) {
    int c = chi(a);
    if (c != 0) L -= c * bernoulli_poly(r, frac(a, d)) / r;
  }
  L *= pow_int(Rational(d), r - 1);
  if (L == 0) return 0;
  Rational sum = 0;
  const Int f = chi.cond;
  for (Int a = 1; a <= f; ++a) {
    if (f % a) continue;
    int mu = moebius_int(a);
    if (mu == 0) continue;
    int c = chi(a);
    if (c == 0) continue;
    Rational sig = 0;
    for (Int e = 1; e <= f / a; ++e)
      if ((f / a) % e == 0) sig += pow_int(Rational(e), 2 * r - 1);
    sum += mu * c * pow_int(Rational(a), r - 1) * sig;
  }
  return L * sum;
}

QSeries g_series_q(int r, Int prec) {
  QSeries g(prec);
  for (Int n = 0; n <= prec; ++n) g[n] = h_coeff_q(r, n);
  return g;
}

}  // namespace hq
