#include "hq/fquad.hpp"

#include <mutex>
#include <set>

namespace hq {

namespace {

// Index of x in O / J for J in HNF, as in ResidueRing.
Int quot_index(const OIdeal& J, FieldElt x) {
  Int k = floor_div(x.b, J.c);
  Int bb = x.b - k * J.c;
  Wide aa = static_cast<Wide>(x.a) - static_cast<Wide>(k) * J.b;
  Int ar = static_cast<Int>(((aa % J.a) + J.a) % J.a);
  return bb * J.a + ar;
}

struct SquareKey {
  Int D;
  OIdeal J;
  bool operator<(const SquareKey& o) const { return D != o.D ? D < o.D : J < o.J; }
};

std::mutex g_sq_mu;
std::map<SquareKey, std::vector<bool>> g_squares;

const std::vector<bool>& squares_mod(const RealQuadField& F, const OIdeal& J) {
  std::lock_guard<std::mutex> lock(g_sq_mu);
  auto it = g_squares.find({F.disc(), J});
  if (it != g_squares.end()) return it->second;
  Int n = J.norm();
  if (n > 50'000'000) throw Error(ErrorCode::EnumerationBoundExceeded, "residue ring too large");
  std::vector<bool> sq(static_cast<size_t>(n), false);
  for (Int i = 0; i < n; ++i) {
    FieldElt m{i % J.a, i / J.a};
    sq[static_cast<size_t>(quot_index(J, F.sqr(m)))] = true;
  }
  return g_squares.emplace(SquareKey{F.disc(), J}, std::move(sq)).first->second;
}

bool is_square_mod(const RealQuadField& F, FieldElt x, const OIdeal& J) {
  return squares_mod(F, J)[static_cast<size_t>(quot_index(J, x))];
}

Int v_int(Int n, Int p) {
  if (n == 0) return 1 << 20;
  Int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int legendre_big(const BigInt& a, Int p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  return mpz_legendre(r.get_mpz_t(), BigInt(static_cast<long>(p)).get_mpz_t());
}

// Root of w^2 - t w + n modulo p^k lifted from r0 (simple root mod p).
BigInt hensel_root(const RealQuadField& F, Int p, Int r0, int k) {
  BigInt mod = 1;
  for (int i = 0; i < k; ++i) mod *= p;
  BigInt r = r0;
  BigInt t = F.omega_trace(), n = F.omega_norm();
  for (int iter = 0; iter < 64; ++iter) {
    BigInt f = r * r - t * r + n;
    BigInt fm = f % mod;
    if (fm == 0) break;
    BigInt d = 2 * r - t, inv;
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0)
      throw Error(ErrorCode::OracleMismatch, "Hensel lift at a double root");
    r = (r - f * inv) % mod;
    if (r < 0) r += mod;
  }
  return r;
}

// Unit square class data at a degree-1 unramified prime, through Z_p.
LocalChar local_split(const RealQuadField& F, FieldElt x, const PrimeIdeal& P) {
  LocalChar lc;
  lc.valuation = valuation(F, P, x);
  int v = lc.valuation;
  Int r0 = mod_pos(-P.ideal.b, P.p);
  int k = v + (P.p == 2 ? 3 : 1);
  BigInt R = hensel_root(F, P.p, r0, k);
  BigInt mod = 1;
  for (int i = 0; i < k; ++i) mod *= P.p;
  BigInt X = (BigInt(static_cast<long>(x.a)) + BigInt(static_cast<long>(x.b)) * R) % mod;
  if (X < 0) X += mod;
  for (int i = 0; i < v; ++i) X /= P.p;
  if (v % 2 == 1) {
    lc.disc_exp = P.p == 2 ? 3 : 1;
    lc.value = 0;
    return lc;
  }
  if (P.p != 2) {
    lc.value = legendre_big(X, P.p);
    return lc;
  }
  Int u = mpz_get_si(BigInt(X % 8).get_mpz_t());
  if (u == 1) {
    lc.value = 1;
  } else if (u == 5) {
    lc.value = -1;
  } else {
    lc.disc_exp = 2;
    lc.value = 0;
  }
  return lc;
}

// Euler criterion in F_{p^2} = O/(p) for an inert odd prime.
int euler_inert(const RealQuadField& F, FieldElt y, Int p) {
  Int t = F.omega_trace(), n = F.omega_norm();
  auto mulp = [&](FieldElt u, FieldElt w) {
    Wide ac = static_cast<Wide>(u.a) * w.a, bd = static_cast<Wide>(u.b) * w.b;
    Wide ad = static_cast<Wide>(u.a) * w.b + static_cast<Wide>(u.b) * w.a;
    Wide ra = (ac - (bd % p) * n) % p, rb = (ad + (bd % p) * t) % p;
    if (ra < 0) ra += p;
    if (rb < 0) rb += p;
    return FieldElt{static_cast<Int>(ra), static_cast<Int>(rb)};
  };
  FieldElt base{mod_pos(y.a, p), mod_pos(y.b, p)};
  if (base == FieldElt{}) return 0;
  Wide e = (static_cast<Wide>(p) * p - 1) / 2;
  FieldElt r{1, 0};
  while (e > 0) {
    if (e & 1) r = mulp(r, base);
    base = mulp(base, base);
    e >>= 1;
  }
  if (r == FieldElt{1, 0}) return 1;
  if (r == FieldElt{p - 1, 0}) return -1;
  throw Error(ErrorCode::OracleMismatch, "Euler criterion gave a non-sign");
}

// Dyadic or ramified analysis by exhaustive square search in O / P^k.
LocalChar local_search(const RealQuadField& F, FieldElt x, const PrimeIdeal& P, int v) {
  LocalChar lc;
  const int e = P.e() * (P.p == 2 ? 1 : 0);
  if (P.p != 2) {
    if (v % 2 == 1) {
      lc.disc_exp = 1;
      return lc;
    }
    OIdeal J = ideal_pow(F, P.ideal, static_cast<unsigned>(v + 1));
    lc.value = is_square_mod(F, x, J) ? 1 : -1;
    return lc;
  }
  if (v % 2 == 1) {
    lc.disc_exp = 2 * e + 1;
    return lc;
  }
  int t = 0;
  for (int s = 2 * e + 1; s >= 1; --s) {
    OIdeal J = ideal_pow(F, P.ideal, static_cast<unsigned>(v + s));
    if (is_square_mod(F, x, J)) {
      t = s;
      break;
    }
  }
  if (t == 0) throw Error(ErrorCode::OracleMismatch, "dyadic unit is not a square mod p");
  if (t == 2 * e + 1) {
    lc.value = 1;
  } else if (t == 2 * e) {
    lc.value = -1;
  } else {
    lc.disc_exp = 2 * e + 1 - t;
  }
  return lc;
}

}  // namespace

LocalChar local_char(const RealQuadField& F, FieldElt x, const PrimeIdeal& P) {
  if (x == FieldElt{}) throw Error(ErrorCode::ZeroElement, "character of zero");
  const Int p = P.p;
  if (P.splitting == Splitting::Split) return local_split(F, x, P);
  if (P.splitting == Splitting::Inert) {
    int v = static_cast<int>(std::min(v_int(x.a, p), v_int(x.b, p)));
    LocalChar lc;
    lc.valuation = v;
    FieldElt y = x;
    Int pk = ipow(p, static_cast<unsigned>(v - v % 2));
    y = {y.a / pk, y.b / pk};
    if (p != 2) {
      if (v % 2 == 1) {
        lc.disc_exp = 1;
        return lc;
      }
      lc.value = euler_inert(F, y, p);
      return lc;
    }
    LocalChar r = local_search(F, y, P, v % 2);
    r.valuation = v;
    return r;
  }
  // Ramified: (p) = P^2, so dividing by p^2 changes x by a square.
  int v = valuation(F, P, x);
  FieldElt y = x;
  int w = v;
  while (w >= 4) {
    y = {y.a / (p * p), y.b / (p * p)};
    w -= 4;
  }
  LocalChar r = local_search(F, y, P, w);
  r.valuation = v;
  return r;
}

int FQuadChar::at_prime(const PrimeIdeal& P) const {
  if (square_class_flag) return 1;
  auto it = local.find(P);
  if (it != local.end()) return it->second.value;
  // P does not divide 2x: residue symbol of x.
  const Int p = P.p;
  if (P.splitting == Splitting::Split) {
    Int r = mod_pos(-P.ideal.b, p);
    Wide val = (static_cast<Wide>(mod_pos(x.b, p)) * r + mod_pos(x.a, p)) % p;
    return legendre_big(to_big(val), p);
  }
  if (P.splitting == Splitting::Inert) return euler_inert(field, x, p);
  return local_char(field, x, P).value;
}

IdealCharacter FQuadChar::character() const {
  if (square_class_flag) return IdealCharacter::trivial();
  FQuadChar self = *this;
  return IdealCharacter([self](const PrimeIdeal& P) { return self.at_prime(P); },
                        "chi_" + to_string(x));
}

FQuadChar relative_discriminant(const RealQuadField& F, FieldElt x) {
  if (x == FieldElt{}) throw Error(ErrorCode::ZeroElement, "relative discriminant of zero");
  FQuadChar chi;
  chi.field = F;
  chi.x = x;
  FieldElt root;
  if (F.is_square(x, &root)) {
    chi.square_class_flag = true;
    chi.cond = ideal_from_element(F, root);
    return chi;
  }
  Int n = F.norm(x);
  if (n < 0) n = -n;
  std::set<Int> ps{2};
  for (auto [p, e] : factor_integer(n)) ps.insert(p);
  OIdeal disc, cond;
  for (Int p : ps) {
    for (const PrimeIdeal& P : primes_above(F, p)) {
      LocalChar lc = local_char(F, x, P);
      if (lc.valuation == 0 && lc.disc_exp == 0 && p != 2) continue;
      chi.local.emplace(P, lc);
      if (lc.disc_exp > 0) disc = ideal_mul(F, disc, ideal_pow(F, P.ideal, static_cast<unsigned>(lc.disc_exp)));
      int rest = lc.valuation - lc.disc_exp;
      if (rest < 0 || rest % 2 != 0) {
        chi.cond_integral = false;
      } else if (rest > 0) {
        cond = ideal_mul(F, cond, ideal_pow(F, P.ideal, static_cast<unsigned>(rest / 2)));
      }
    }
  }
  chi.disc = disc;
  chi.cond = chi.cond_integral ? cond : OIdeal{};
  return chi;
}

int chi_eval(const FQuadChar& chi, const OIdeal& I) {
  if (chi.square_class_flag) return 1;
  int v = 1;
  for (const auto& [P, e] : factor_ideal(chi.field, I).factors) {
    int c = chi.at_prime(P);
    if (c == 0) return 0;
    if (c == -1 && e % 2 == 1) v = -v;
  }
  return v;
}

int QQuadChar::at_prime(Int p) const {
  if (square_class_flag) return 1;
  if (disc % p == 0) return 0;
  Int v = v_int(x, p);
  Int u = x;
  for (Int i = 0; i < v; ++i) u /= p;
  if (p == 2) {
    Int r = mod_pos(u, 8);
    return r == 1 ? 1 : -1;
  }
  Int r = mod_pow(mod_pos(u, p), (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

int QQuadChar::operator()(Int n) const {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "Q-mode ideals are positive integers");
  int v = 1;
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      m /= p;
      int c = at_prime(p);
      if (c == 0) return 0;
      v *= c;
    }
  }
  if (m > 1) {
    int c = at_prime(m);
    if (c == 0) return 0;
    v *= c;
  }
  return v;
}

QQuadChar relative_discriminant_q(Int x) {
  if (x == 0) throw Error(ErrorCode::ZeroElement, "relative discriminant of zero");
  QQuadChar chi;
  chi.x = x;
  Int root;
  if (x > 0 && is_square(x, &root)) {
    chi.square_class_flag = true;
    chi.cond = root;
    return chi;
  }
  Int ax = x < 0 ? -x : x;
  std::set<Int> ps{2};
  for (Int p = 2, m = ax; m > 1; ++p) {
    if (p * p > m) {
      ps.insert(m);
      break;
    }
    while (m % p == 0) {
      ps.insert(p);
      m /= p;
    }
  }
  for (Int p : ps) {
    Int v = v_int(ax, p);
    Int d;
    if (p != 2) {
      d = v % 2;
    } else if (v % 2 == 1) {
      d = 3;
    } else {
      // Largest t <= 3 with u = square mod 2^t, by search.
      Int u = x;
      for (Int i = 0; i < v; ++i) u /= 2;
      int t = 0;
      for (int s = 3; s >= 1; --s) {
        Int mod = Int{1} << s;
        bool sq = false;
        for (Int m = 0; m < mod && !sq; ++m) sq = mod_pos(m * m - u, mod) == 0;
        if (sq) {
          t = s;
          break;
        }
      }
      d = t >= 2 ? 0 : 3 - t;
    }
    chi.disc *= ipow(p, static_cast<unsigned>(d));
    Int rest = v - d;
    if (rest < 0 || rest % 2) {
      chi.cond_integral = false;
    } else {
      chi.cond *= ipow(p, static_cast<unsigned>(rest / 2));
    }
  }
  if (!chi.cond_integral) chi.cond = 1;
  return chi;
}

}  // namespace hq
