#include "hq/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>

namespace hq {

bool OIdeal::contains(FieldElt x) const {
  if (x.b % c != 0) return false;
  Wide rest = static_cast<Wide>(x.a) - static_cast<Wide>(x.b / c) * b;
  return rest % a == 0;
}

bool OIdeal::divides(const OIdeal& other) const {
  return contains({other.a, 0}) && contains({other.b, other.c});
}

std::string to_string(const OIdeal& I) {
  return "[" + std::to_string(I.a) + ", " + to_string(FieldElt{I.b, I.c}) + "]";
}

OIdeal parse_ideal(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 4 || s.front() != '[' || s.back() != ']')
    throw Error(ErrorCode::ParseError, "ideal must look like [a, b+c*w]: '" + std::string(text) + "'");
  auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "missing comma in ideal");
  OIdeal I;
  try {
    I.a = std::stoll(s.substr(1, comma - 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad ideal norm part in '" + std::string(text) + "'");
  }
  FieldElt g = parse_elt(s.substr(comma + 1, s.size() - comma - 2));
  I.b = g.a;
  I.c = g.b;
  return I;
}

namespace {

struct LatticeHnf {
  Wide A = 0;
  Wide B = 0;
  Wide C = 0;

  void add(Wide x, Wide y) {
    if (y == 0) {
      A = gcd_w(A, x);
      return;
    }
    if (C == 0) {
      if (y < 0) {
        x = -x;
        y = -y;
      }
      B = x;
      C = y;
      return;
    }
    Int s, t;
    Int g = ext_gcd(narrow(C), narrow(y), s, t);
    Wide nb = s * B + t * x;
    Wide other = (y / g) * B - (C / g) * x;
    B = nb;
    C = g;
    A = gcd_w(A, other);
    if (A != 0) B %= A;
  }

  static Wide gcd_w(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

}  // namespace

OIdeal ideal_from_generators(const RealQuadField& F, const std::vector<FieldElt>& gens) {
  LatticeHnf h;
  const FieldElt w{0, 1};
  for (FieldElt g : gens) {
    h.add(g.a, g.b);
    FieldElt gw = F.mul(g, w);
    h.add(gw.a, gw.b);
  }
  if (h.A == 0 || h.C == 0) throw Error(ErrorCode::ZeroElement, "ideal generated by zero");
  OIdeal I;
  I.a = narrow(h.A);
  Wide b = h.B % h.A;
  if (b < 0) b += h.A;
  I.b = narrow(b);
  I.c = narrow(h.C);
  return I;
}

OIdeal ideal_from_element(const RealQuadField& F, FieldElt x) {
  if (x == FieldElt{}) throw Error(ErrorCode::ZeroElement, "principal ideal of zero");
  return ideal_from_generators(F, {x});
}

OIdeal ideal_mul(const RealQuadField& F, const OIdeal& I, const OIdeal& J) {
  const FieldElt i1{I.a, 0}, i2{I.b, I.c}, j1{J.a, 0}, j2{J.b, J.c};
  return ideal_from_generators(F, {F.mul(i1, j1), F.mul(i1, j2), F.mul(i2, j1), F.mul(i2, j2)});
}

OIdeal ideal_pow(const RealQuadField& F, const OIdeal& I, unsigned e) {
  OIdeal r;
  for (unsigned k = 0; k < e; ++k) r = ideal_mul(F, r, I);
  return r;
}

OIdeal ideal_conj(const RealQuadField& F, const OIdeal& I) {
  return ideal_from_generators(F, {{I.a, 0}, F.conj(FieldElt{I.b, I.c})});
}

OIdeal ideal_div(const RealQuadField& F, const OIdeal& I, const OIdeal& J) {
  if (J.is_unit()) return I;
  if (!J.divides(I))
    throw Error(ErrorCode::InexactDivision, to_string(I) + " / " + to_string(J));
  OIdeal P = ideal_mul(F, I, ideal_conj(F, J));
  Int n = J.norm();
  if (P.a % n != 0 || P.b % n != 0 || P.c % n != 0)
    throw Error(ErrorCode::InexactDivision, to_string(I) + " / " + to_string(J));
  return {P.a / n, P.b / n, P.c / n};
}

bool is_valid_ideal(const RealQuadField& F, const OIdeal& I) {
  if (I.a <= 0 || I.c <= 0 || I.a % I.c != 0 || I.b % I.c != 0 || I.b < 0 || I.b >= I.a)
    return false;
  const FieldElt w{0, 1};
  return I.contains(F.mul({I.a, 0}, w)) && I.contains(F.mul({I.b, I.c}, w));
}

std::vector<OIdeal> ideals_of_norm(const RealQuadField& F, Int n) {
  std::vector<OIdeal> out;
  for (Int c = 1; c * c <= n; ++c) {
    if (n % (c * c) != 0) continue;
    Int a = n / c;
    for (Int b = 0; b < a; b += c) {
      OIdeal I{a, b, c};
      if (is_valid_ideal(F, I)) out.push_back(I);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int legendre(Int a, Int p) {
  a = mod_pos(a, p);
  if (a == 0) return 0;
  Int r = mod_pow(a, (p - 1) / 2, p);
  return r == 1 ? 1 : -1;
}

Int sqrt_mod_prime(Int a, Int p) {
  a = mod_pos(a, p);
  if (a == 0 || p == 2) return a;
  if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
  // Tonelli-Shanks.
  Int q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (legendre(z, p) != -1) ++z;
  Int m = s;
  Wide c = mod_pow(z, q, p);
  Wide t = mod_pow(a, q, p);
  Wide r = mod_pow(a, (q + 1) / 2, p);
  while (t != 1) {
    Int i = 0;
    Wide tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    Wide b = c;
    for (Int j = 0; j < m - i - 1; ++j) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return static_cast<Int>(r);
}

}  // namespace

std::vector<PrimeIdeal> primes_above(const RealQuadField& F, Int p) {
  const Int t = F.omega_trace(), n = F.omega_norm();
  std::vector<Int> roots;
  if (p == 2) {
    for (Int r = 0; r < 2; ++r)
      if (mod_pos(r * r - t * r + n, 2) == 0) roots.push_back(r);
    if (roots.size() == 1) {
      // Distinguish a double root (ramified) from a single root: impossible
      // mod 2 for a monic quadratic, so one root means ramified.
    }
  } else {
    int leg = legendre(F.disc(), p);
    if (leg == 0) {
      roots.push_back(mod_pos(t * ((p + 1) / 2), p));
    } else if (leg == 1) {
      Int s = sqrt_mod_prime(F.disc(), p);
      Int inv2 = (p + 1) / 2;
      Int r1 = static_cast<Int>(static_cast<Wide>(mod_pos(t + s, p)) * inv2 % p);
      Int r2 = static_cast<Int>(static_cast<Wide>(mod_pos(t - s, p)) * inv2 % p);
      roots.push_back(r1);
      roots.push_back(r2);
    }
  }
  std::vector<PrimeIdeal> out;
  if (roots.empty()) {
    out.push_back({p, 2, Splitting::Inert, OIdeal{p, 0, p}});
  } else if (roots.size() == 1) {
    out.push_back({p, 1, Splitting::Ramified, OIdeal{p, mod_pos(-roots[0], p), 1}});
  } else {
    for (Int r : roots) out.push_back({p, 1, Splitting::Split, OIdeal{p, mod_pos(-r, p), 1}});
    std::sort(out.begin(), out.end());
  }
  return out;
}

int valuation(const RealQuadField& F, const PrimeIdeal& P, OIdeal I) {
  int v = 0;
  while (P.ideal.divides(I)) {
    I = ideal_div(F, I, P.ideal);
    ++v;
  }
  return v;
}

int valuation(const RealQuadField& F, const PrimeIdeal& P, FieldElt x) {
  return valuation(F, P, ideal_from_element(F, x));
}

namespace {
std::atomic<Int> g_factor_bound{10'000'000};
}

void set_factor_bound(Int bound) {
  if (bound < 2) throw Error(ErrorCode::InvalidArgument, "factor bound must be >= 2");
  g_factor_bound.store(bound);
}

Int factor_bound() { return g_factor_bound.load(); }

std::vector<std::pair<Int, int>> factor_integer(Int n) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "factor_integer needs n > 0");
  const Int bound = factor_bound();
  std::vector<std::pair<Int, int>> out;
  Int m = n;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    if (p > bound)
      throw Error(ErrorCode::FactorizationOverflow,
                  std::to_string(n) + " has a cofactor beyond the trial bound " + std::to_string(bound));
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

IdealFactorization factor_ideal(const RealQuadField& F, const OIdeal& I) {
  IdealFactorization fact;
  OIdeal rest = I;
  for (auto [p, e] : factor_integer(I.norm())) {
    (void)e;
    for (const PrimeIdeal& P : primes_above(F, p)) {
      int v = 0;
      while (P.ideal.divides(rest)) {
        rest = ideal_div(F, rest, P.ideal);
        ++v;
      }
      if (v > 0) fact.factors.emplace_back(P, v);
    }
  }
  if (!rest.is_unit()) throw Error(ErrorCode::OracleMismatch, "factorization left " + to_string(rest));
  return fact;
}

OIdeal expand(const RealQuadField& F, const IdealFactorization& fact) {
  OIdeal r;
  for (const auto& [P, e] : fact.factors) r = ideal_mul(F, r, ideal_pow(F, P.ideal, static_cast<unsigned>(e)));
  return r;
}

std::vector<IdealFactorization> divisor_factorizations(const IdealFactorization& fact) {
  std::vector<IdealFactorization> out{IdealFactorization{}};
  for (const auto& [P, e] : fact.factors) {
    std::vector<IdealFactorization> next;
    for (const auto& d : out) {
      for (int k = 0; k <= e; ++k) {
        IdealFactorization nd = d;
        if (k > 0) nd.factors.emplace_back(P, k);
        next.push_back(std::move(nd));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<OIdeal> divisors(const RealQuadField& F, const OIdeal& I) {
  std::vector<OIdeal> out;
  for (const auto& d : divisor_factorizations(factor_ideal(F, I))) out.push_back(expand(F, d));
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(const IdealFactorization& fact) {
  int mu = 1;
  for (const auto& [P, e] : fact.factors) {
    if (e >= 2) return 0;
    mu = -mu;
  }
  return mu;
}

int moebius(const RealQuadField& F, const OIdeal& I) { return moebius(factor_ideal(F, I)); }

Int norm_of(const IdealFactorization& fact) {
  Int n = 1;
  for (const auto& [P, e] : fact.factors) n = checked_mul(n, ipow(P.norm(), static_cast<unsigned>(e)));
  return n;
}

int IdealCharacter::operator()(const IdealFactorization& fact) const {
  int v = 1;
  for (const auto& [P, e] : fact.factors) {
    int c = at_prime(P);
    if (c == 0) return 0;
    if (c == -1 && (e % 2 == 1)) v = -v;
  }
  return v;
}

int IdealCharacter::operator()(const RealQuadField& F, const OIdeal& I) const {
  if (is_trivial()) return 1;
  return (*this)(factor_ideal(F, I));
}

IdealCharacter IdealCharacter::squared() const {
  if (is_trivial()) return trivial();
  auto base = on_primes_;
  return IdealCharacter([base](const PrimeIdeal& P) { return base(P) == 0 ? 0 : 1; }, name_ + "^2");
}

Rational sigma_F(const IdealFactorization& fact, int k, const IdealCharacter& chi) {
  Rational total = 0;
  for (const auto& d : divisor_factorizations(fact)) {
    int c = chi(d);
    if (c == 0) continue;
    BigInt nk;
    mpz_pow_ui(nk.get_mpz_t(), BigInt(static_cast<long>(norm_of(d))).get_mpz_t(),
               static_cast<unsigned long>(k < 0 ? -k : k));
    Rational term = k < 0 ? Rational(1, 1) / Rational(nk) : Rational(nk);
    total += c * term;
  }
  return total;
}

Rational sigma_F(const RealQuadField& F, const OIdeal& I, int k, const IdealCharacter& chi) {
  return sigma_F(factor_ideal(F, I), k, chi);
}

namespace {

std::optional<FieldElt> search_generator(const RealQuadField& F, const OIdeal& I, bool negative_norm) {
  const Int N = I.norm();
  const FieldElt eps = totally_positive_unit(F);
  const Int T = checked_mul(isqrt(N) + 1, F.trace(eps) + 1);
  const Int D = F.disc(), tw = F.omega_trace();
  for (Int t = negative_norm ? 0 : 1; t <= T; ++t) {
    Wide val = static_cast<Wide>(t) * t + (negative_norm ? 4 : -4) * static_cast<Wide>(N);
    if (val < 0 || val % D != 0) continue;
    Wide b2 = val / D;
    Wide b = isqrt_wide(b2);
    if (b * b != b2) continue;
    for (Wide sb : {b, -b}) {
      Wide a2 = t - sb * tw;
      if (a2 % 2 != 0) continue;
      FieldElt g{narrow(a2 / 2), narrow(sb)};
      if (I.contains(g)) return g;
      if (b == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FieldElt> totally_positive_generator(const RealQuadField& F, const OIdeal& I) {
  return search_generator(F, I, false);
}

std::optional<FieldElt> principal_generator(const RealQuadField& F, const OIdeal& I) {
  if (auto g = search_generator(F, I, false)) return g;
  return search_generator(F, I, true);
}

ResidueRing::ResidueRing(const RealQuadField& F, const OIdeal& modulus)
    : F_(F), m_(modulus), size_(modulus.norm()) {
  if (!modulus.is_unit())
    for (const auto& [P, e] : factor_ideal(F, modulus).factors) primes_.push_back(P);
  unit_.assign(static_cast<size_t>(size_), true);
  for (Int i = 0; i < size_; ++i) {
    FieldElt x = element(i);
    for (const PrimeIdeal& P : primes_)
      if (P.ideal.contains(x)) {
        unit_[static_cast<size_t>(i)] = false;
        break;
      }
    if (unit_[static_cast<size_t>(i)]) ++unit_count_;
  }
}

Int ResidueRing::index(FieldElt x) const {
  Int k = floor_div(x.b, m_.c);
  Int bb = x.b - k * m_.c;
  Wide aa = static_cast<Wide>(x.a) - static_cast<Wide>(k) * m_.b;
  Int ar = static_cast<Int>(((aa % m_.a) + m_.a) % m_.a);
  return bb * m_.a + ar;
}

FieldElt ResidueRing::element(Int idx) const { return {idx % m_.a, idx / m_.a}; }

Int ResidueRing::mul(Int i, Int j) const { return index(F_.mul(element(i), element(j))); }

}  // namespace hq
