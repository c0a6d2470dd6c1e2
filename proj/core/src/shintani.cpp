#include "hq/shintani.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hq/dirichlet.hpp"

namespace hq {

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational pow_q(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

QElt pow_qe(const RealQuadField& F, const QElt& x, int e) {
  QElt r{1, 0};
  for (int i = 0; i < e; ++i) r = F.mulq(r, x);
  return r;
}

// Coefficients of (v + v' y)^e up to y^deg, for e >= -1.
std::vector<QElt> linear_power(const RealQuadField& F, FieldElt v, int e, int deg) {
  QElt a(v), ac(F.conj(v));
  std::vector<QElt> out(static_cast<size_t>(deg + 1), QElt{0, 0});
  if (e >= 0) {
    for (int i = 0; i <= std::min(e, deg); ++i)
      out[static_cast<size_t>(i)] =
          binom(e, i) * F.mulq(pow_qe(F, a, e - i), pow_qe(F, ac, i));
  } else {
    QElt inv = F.invq(a);
    QElt ratio = Rational(-1) * F.mulq(ac, inv);
    QElt cur = inv;
    for (int i = 0; i <= deg; ++i) {
      out[static_cast<size_t>(i)] = cur;
      cur = F.mulq(cur, ratio);
    }
  }
  return out;
}

Wide exact_div(Wide num, Wide den) {
  if (num % den != 0) throw Error(ErrorCode::InexactDivision, "cone coordinate");
  return num / den;
}

std::vector<OIdeal> ideals_with_norm(const RealQuadField& F, Int n) {
  std::vector<OIdeal> acc{OIdeal{}};
  if (n == 1) return acc;
  for (const auto& [p, e] : factor_integer(n)) {
    std::vector<OIdeal> local;
    auto ps = primes_above(F, p);
    if (ps.size() == 2) {
      for (int i = 0; i <= e; ++i)
        local.push_back(ideal_mul(F, ideal_pow(F, ps[0].ideal, static_cast<unsigned>(i)),
                                  ideal_pow(F, ps[1].ideal, static_cast<unsigned>(e - i))));
    } else if (ps[0].splitting == Splitting::Ramified) {
      local.push_back(ideal_pow(F, ps[0].ideal, static_cast<unsigned>(e)));
    } else if (e % 2 == 0) {
      local.push_back(ideal_pow(F, ps[0].ideal, static_cast<unsigned>(e / 2)));
    }
    std::vector<OIdeal> next;
    for (const OIdeal& x : acc)
      for (const OIdeal& y : local) next.push_back(ideal_mul(F, x, y));
    acc = std::move(next);
    if (acc.empty()) break;
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

bool equivalent(const RealQuadField& F, const OIdeal& I, const OIdeal& J, bool narrow) {
  OIdeal K = ideal_mul(F, I, ideal_conj(F, J));
  return narrow ? totally_positive_generator(F, K).has_value()
                : principal_generator(F, K).has_value();
}

// Totally positive element of I: a narrow generator when I has one, else its least positive integer.
FieldElt positive_element(const RealQuadField& F, const OIdeal& I) {
  if (auto g = totally_positive_generator(F, I)) return *g;
  return {I.a, 0};
}

Int inverse_mod(Int x, Int m) {
  if (m == 1) return 0;
  Int s, t;
  if (ext_gcd(mod_pos(x, m), m, s, t) != 1) throw Error(ErrorCode::InvalidArgument, "not invertible");
  return mod_pos(s, m);
}

// Character table of (O/m)^* induced by chi on totally positive principal ideals.
std::vector<int> character_table(const RealQuadField& F, const ResidueRing& R, const IdealCharacter& chi) {
  const Int size = R.size();
  std::vector<int> val(static_cast<size_t>(size), 0);
  std::vector<Int> members;
  const Int one = R.index({1, 0});
  val[static_cast<size_t>(one)] = 1;
  members.push_back(one);
  const Int target = R.unit_count();
  const Int D = F.disc(), tw = F.omega_trace();
  const Int t_limit = 64 * (R.modulus().a + 16);
  for (Int T = 1; static_cast<Int>(members.size()) < target; ++T) {
    if (T > t_limit)
      throw Error(ErrorCode::EnumerationBoundExceeded,
                  "character table generators, trace bound " + std::to_string(t_limit));
    for (Int b = -T; b <= T && static_cast<Int>(members.size()) < target; ++b) {
      Int a2 = T - b * tw;
      if (a2 % 2 != 0) continue;
      FieldElt g{a2 / 2, b};
      if (!F.is_totally_positive(g)) continue;
      Int gi = R.index(g);
      if (!R.is_unit(gi)) continue;
      int vg = chi(F, ideal_from_element(F, g));
      if (vg == 0) throw Error(ErrorCode::OracleMismatch, "character vanishes on a unit residue");
      if (val[static_cast<size_t>(gi)] != 0) {
        if (val[static_cast<size_t>(gi)] != vg)
          throw Error(ErrorCode::OracleMismatch, "character is not defined modulo " + to_string(R.modulus()));
        continue;
      }
      const std::vector<Int> base = members;
      Int x = gi;
      int vx = vg;
      while (val[static_cast<size_t>(x)] == 0) {
        for (Int h : base) {
          Int y = R.mul(h, x);
          val[static_cast<size_t>(y)] = val[static_cast<size_t>(h)] * vx;
          members.push_back(y);
        }
        x = R.mul(x, gi);
        vx *= vg;
      }
      if (val[static_cast<size_t>(x)] != vx)
        throw Error(ErrorCode::OracleMismatch, "character is not defined modulo " + to_string(R.modulus()));
    }
  }
  (void)D;
  return val;
}

Rational siegel_sum(const RealQuadField& F, int r) {
  const Int D = F.disc();
  Rational s = 0;
  for (Int b = -isqrt(D); b * b < D + 1; ++b) {
    if (b * b >= D || mod_pos(b - D, 2) != 0) continue;
    s += sigma((D - b * b) / 4, r);
  }
  return s;
}

}  // namespace

std::vector<std::vector<Rational>> shintani_polynomial(const RealQuadField& F, FieldElt v1,
                                                       FieldElt v2, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "shintani_polynomial needs m >= 1");
  const int n = 2 * m;
  std::vector<std::vector<Rational>> p(static_cast<size_t>(n + 1),
                                       std::vector<Rational>(static_cast<size_t>(n + 1), 0));
  Rational pre = factorial(m - 1) * factorial(m - 1) / 2;
  for (int l1 = 0; l1 <= n; ++l1) {
    int l2 = n - l1;
    auto s1 = linear_power(F, v1, l1 - 1, m - 1);
    auto s2 = linear_power(F, v2, l2 - 1, m - 1);
    QElt c{0, 0};
    for (int i = 0; i <= m - 1; ++i)
      c = c + F.mulq(s1[static_cast<size_t>(i)], s2[static_cast<size_t>(m - 1 - i)]);
    Rational w = pre * F.traceq(c) / (factorial(l1) * factorial(l2));
    if (w == 0) continue;
    for (int i = 0; i <= l1; ++i) {
      Rational ci = binom(l1, i) * bernoulli(l1 - i);
      if (ci == 0) continue;
      for (int j = 0; j <= l2; ++j)
        p[static_cast<size_t>(i)][static_cast<size_t>(j)] += w * ci * binom(l2, j) * bernoulli(l2 - j);
    }
  }
  return p;
}

ShintaniCone::ShintaniCone(const RealQuadField& F, const OIdeal& lattice, FieldElt v1, FieldElt v2)
    : F_(F), lattice_(lattice), v1_(v1), v2_(v2) {
  if (!F.is_totally_positive(v1) || !F.is_totally_positive(v2))
    throw Error(ErrorCode::InvalidArgument, "cone generators must be totally positive");
  if (!lattice.contains(v1) || !lattice.contains(v2))
    throw Error(ErrorCode::InvalidArgument, "cone generators must lie in the lattice");
  auto lat = [&](FieldElt v, Int& p, Int& q) {
    q = v.b / lattice.c;
    p = narrow(exact_div(static_cast<Wide>(v.a) - static_cast<Wide>(q) * lattice.b, lattice.a));
  };
  lat(v1, p1_, q1_);
  lat(v2, p2_, q2_);
  Wide det = static_cast<Wide>(p1_) * q2_ - static_cast<Wide>(p2_) * q1_;
  if (det == 0) throw Error(ErrorCode::InvalidArgument, "cone generators are dependent");
  sgn_ = det > 0 ? 1 : -1;
  M_ = narrow(det > 0 ? det : -det);
  Int s, t;
  h11_ = ext_gcd(p1_, p2_, s, t);
  Wide h21 = static_cast<Wide>(s) * q1_ + static_cast<Wide>(t) * q2_;
  Wide h22 = static_cast<Wide>(p2_ / h11_) * q1_ - static_cast<Wide>(p1_ / h11_) * q2_;
  h22_ = narrow(h22 > 0 ? h22 : -h22);
  h21_ = narrow(((h21 % h22_) + h22_) % h22_);
  if (static_cast<Wide>(h11_) * h22_ != M_) throw Error(ErrorCode::OracleMismatch, "cone HNF index");
}

std::pair<Wide, Wide> ShintaniCone::coords(FieldElt rho) const {
  Int q = rho.b / lattice_.c;
  Wide p = exact_div(static_cast<Wide>(rho.a) - static_cast<Wide>(q) * lattice_.b, lattice_.a);
  Wide X1 = sgn_ * (static_cast<Wide>(q2_) * p - static_cast<Wide>(p2_) * q);
  Wide X2 = sgn_ * (-static_cast<Wide>(q1_) * p + static_cast<Wide>(p1_) * q);
  return {X1, X2};
}

bool ShintaniCone::in_cone(FieldElt rho) const {
  auto [X1, X2] = coords(rho);
  return X1 > 0 && X2 >= 0;
}

void ShintaniCone::for_each_shift(const std::function<void(const ConeShift&)>& fn, bool open) const {
  const Wide M = M_;
  for (Int i = 0; i < h11_; ++i) {
    for (Int j = 0; j < h22_; ++j) {
      Wide X1 = sgn_ * (static_cast<Wide>(q2_) * i - static_cast<Wide>(p2_) * j);
      Wide X2 = sgn_ * (-static_cast<Wide>(q1_) * i + static_cast<Wide>(p1_) * j);
      X1 %= M;
      if (X1 <= 0) X1 += M;
      X2 %= M;
      if (X2 < 0) X2 += M;
      if (open && X2 == 0) X2 = M;
      ConeShift sh;
      sh.X1 = static_cast<Int>(X1);
      sh.X2 = static_cast<Int>(X2);
      sh.rho.a = narrow(exact_div(X1 * v1_.a + X2 * v2_.a, M));
      sh.rho.b = narrow(exact_div(X1 * v1_.b + X2 * v2_.b, M));
      fn(sh);
    }
  }
}

std::vector<ConeShift> ShintaniCone::shifts(bool open) const {
  std::vector<ConeShift> out;
  out.reserve(static_cast<size_t>(M_));
  for_each_shift([&](const ConeShift& s) { out.push_back(s); }, open);
  return out;
}

std::vector<ConeShift> ShintaniCone::ray_shifts() const {
  Int g = gcd(p1_, q1_);
  std::vector<ConeShift> out;
  for (Int j = 1; j <= g; ++j) {
    ConeShift s;
    s.X1 = narrow(static_cast<Wide>(M_) * j / g);
    s.X2 = 0;
    s.rho = {v1_.a / g * j, v1_.b / g * j};
    out.push_back(s);
  }
  return out;
}

Rational ShintaniCone::zeta(int m, const std::function<int(const FieldElt&)>& weight,
                            bool open_plus_ray) const {
  const auto P = shintani_polynomial(F_, v1_, v2_, m);
  const int n = 2 * m;
  const size_t dim = static_cast<size_t>(n + 1);
  const bool fits = std::log2(static_cast<double>(M_) + 1) * (n + 1) < 118.0;

  std::vector<BigInt> moments(dim * dim, 0);
  if (fits) {
    std::vector<Wide> acc(dim * dim, 0);
    std::vector<Wide> pw1(dim), pw2(dim);
    for_each_shift(
        [&](const ConeShift& s) {
          int w = weight(s.rho);
          if (w == 0) return;
          pw1[0] = pw2[0] = 1;
          for (size_t k = 1; k < dim; ++k) {
            pw1[k] = pw1[k - 1] * s.X1;
            pw2[k] = pw2[k - 1] * s.X2;
          }
          for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; i + j < dim; ++j) acc[i * dim + j] += w * pw1[i] * pw2[j];
        },
        open_plus_ray);
    for (size_t k = 0; k < acc.size(); ++k) moments[k] = to_big(acc[k]);
  } else {
    std::vector<BigInt> pw1(dim), pw2(dim);
    for_each_shift(
        [&](const ConeShift& s) {
          int w = weight(s.rho);
          if (w == 0) return;
          pw1[0] = pw2[0] = 1;
          for (size_t k = 1; k < dim; ++k) {
            pw1[k] = pw1[k - 1] * s.X1;
            pw2[k] = pw2[k - 1] * s.X2;
          }
          for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; i + j < dim; ++j) {
              BigInt term = pw1[i] * pw2[j];
              moments[i * dim + j] += w * term;
            }
        },
        open_plus_ray);
  }

  Rational total = 0;
  std::vector<BigInt> Mpow(dim + dim, 1);
  for (size_t k = 1; k < Mpow.size(); ++k) Mpow[k] = Mpow[k - 1] * M_;
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; i + j < dim; ++j) {
      const Rational& c = P[i][j];
      if (c == 0 || moments[i * dim + j] == 0) continue;
      total += c * frac(moments[i * dim + j], Mpow[i + j]);
    }

  if (open_plus_ray) {
    Rational nv = pow_q(Rational(F_.norm(v1_)), m - 1);
    auto ray = ray_shifts();
    Int g = static_cast<Int>(ray.size());
    for (Int j = 1; j <= g; ++j) {
      int w = weight(ray[static_cast<size_t>(j - 1)].rho);
      if (w == 0) continue;
      total -= w * nv * bernoulli_poly(2 * m - 1, frac(j, g)) / (2 * m - 1);
    }
  }
  return total;
}

bool narrowly_equivalent(const RealQuadField& F, const OIdeal& I, const OIdeal& J) {
  return equivalent(F, I, J, true);
}

std::vector<OIdeal> class_group_reps(const RealQuadField& F, bool narrow, Int coprime_to) {
  // Wide class number from the Minkowski bound sqrt(D)/2.
  std::vector<OIdeal> wide;
  const Int mink = isqrt(F.disc()) / 2 + 1;
  for (Int n = 1; n <= mink; ++n)
    for (const OIdeal& I : ideals_with_norm(F, n)) {
      bool fresh = std::none_of(wide.begin(), wide.end(),
                                [&](const OIdeal& J) { return equivalent(F, I, J, false); });
      if (fresh) wide.push_back(I);
    }
  size_t expected = wide.size();
  if (narrow && F.norm(fundamental_unit(F)) == 1) expected *= 2;

  std::vector<OIdeal> reps;
  const Int limit = 1000 * (F.disc() + 10);
  for (Int n = 1; reps.size() < expected; ++n) {
    if (n > limit)
      throw Error(ErrorCode::EnumerationBoundExceeded,
                  "class group representatives, norm bound " + std::to_string(limit));
    if (gcd(n, coprime_to) != 1) continue;
    for (const OIdeal& I : ideals_with_norm(F, n)) {
      bool fresh = std::none_of(reps.begin(), reps.end(),
                                [&](const OIdeal& J) { return equivalent(F, I, J, narrow); });
      if (fresh) reps.push_back(I);
    }
  }
  return reps;
}

Int RayClassContext::class_of(const OIdeal& I) const {
  const RealQuadField& F = field;
  if (gcd(I.norm(), modulus.norm()) != 1 && !modulus.is_unit()) {
    for (const auto& [P, e] : factor_ideal(F, modulus).factors)
      if (valuation(F, P, I) > 0) throw Error(ErrorCode::InvalidArgument, "ideal not coprime to the modulus");
  }
  ResidueRing R(F, modulus.is_unit() ? OIdeal{} : modulus);
  for (size_t i = 0; i < base_reps.size(); ++i) {
    OIdeal K = ideal_mul(F, I, ideal_conj(F, base_reps[i]));
    auto g = with_infinity ? totally_positive_generator(F, K) : principal_generator(F, K);
    if (!g) continue;
    if (modulus.is_unit()) return static_cast<Int>(i);
    Int inv = inverse_mod(base_reps[i].norm(), modulus.a);
    Int r = R.index(F.mul(*g, {inv, 0}));
    return static_cast<Int>(i) * orbit_count + orbit[static_cast<size_t>(r)];
  }
  throw Error(ErrorCode::OracleMismatch, "ideal " + to_string(I) + " matches no class representative");
}

RayClassContext ray_classes(const RealQuadField& F, const OIdeal& modulus, bool with_infinity,
                            Int norm_bound) {
  if (modulus.norm() <= 0 || !is_valid_ideal(F, modulus))
    throw Error(ErrorCode::InvalidArgument, "modulus must be a nonzero integral ideal");
  RayClassContext ctx;
  ctx.field = F;
  ctx.modulus = modulus;
  ctx.with_infinity = with_infinity;
  ctx.eps_plus = totally_positive_unit(F);
  const Int Nm = modulus.norm();
  ctx.base_reps = class_group_reps(F, with_infinity, Nm);

  ResidueRing R(F, modulus);
  ctx.orbit.assign(static_cast<size_t>(R.size()), -1);
  std::vector<Int> gens;
  if (with_infinity) {
    gens.push_back(R.index(ctx.eps_plus));
  } else {
    gens.push_back(R.index({-1, 0}));
    gens.push_back(R.index(fundamental_unit(F)));
  }
  const Int one = R.index({1, 0});
  Int e = 1;
  for (Int x = gens[0]; x != one && !modulus.is_unit(); x = R.mul(x, gens[0])) ++e;
  if (!with_infinity) {
    e = 1;
    Int u = R.index(ctx.eps_plus);
    for (Int x = u; x != one && !modulus.is_unit(); x = R.mul(x, u)) ++e;
  }
  ctx.eps_f_exponent = e;
  ctx.eps_f = F.pow(ctx.eps_plus, static_cast<unsigned>(e));

  Int label = 0;
  std::vector<Int> order{one};
  for (Int i = 0; i < R.size(); ++i)
    if (i != one) order.push_back(i);
  for (Int start : order) {
    if (!R.is_unit(start) || ctx.orbit[static_cast<size_t>(start)] >= 0) continue;
    std::vector<Int> stack{start};
    ctx.orbit[static_cast<size_t>(start)] = label;
    while (!stack.empty()) {
      Int x = stack.back();
      stack.pop_back();
      for (Int g : gens) {
        Int y = R.mul(x, g);
        if (ctx.orbit[static_cast<size_t>(y)] < 0) {
          ctx.orbit[static_cast<size_t>(y)] = label;
          stack.push_back(y);
        }
      }
    }
    ++label;
  }
  ctx.orbit_count = label;

  const Int h = ctx.class_count();
  ctx.norm_bound = norm_bound > 0 ? norm_bound : 100 * h + 1000;
  ctx.representatives.assign(static_cast<size_t>(h), OIdeal{0, 0, 0});
  Int found = 0;
  for (Int n = 1; n <= ctx.norm_bound && found < h; ++n) {
    if (gcd(n, Nm) != 1) continue;
    for (const OIdeal& I : ideals_with_norm(F, n)) {
      Int k = ctx.class_of(I);
      if (ctx.representatives[static_cast<size_t>(k)].a == 0) {
        ctx.representatives[static_cast<size_t>(k)] = I;
        ++found;
      }
    }
  }
  if (found < h)
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "ray class representatives, norm bound " + std::to_string(ctx.norm_bound));
  return ctx;
}

Rational partial_zeta_from_rep(const RealQuadField& F, const OIdeal& modulus, const OIdeal& rep,
                               int s, bool open_plus_ray) {
  if (s > 0) throw Error(ErrorCode::InvalidArgument, "partial zeta needs s <= 0");
  const int m = 1 - s;
  const OIdeal lat = ideal_conj(F, rep);
  const FieldElt v1 = positive_element(F, ideal_mul(F, modulus, lat));
  const FieldElt eps = totally_positive_unit(F);
  ShintaniCone cone(F, lat, v1, F.mul(v1, eps));

  std::function<int(const FieldElt&)> weight = [](const FieldElt&) { return 1; };
  std::vector<char> target;
  std::optional<ResidueRing> R;
  if (!modulus.is_unit()) {
    R.emplace(F, modulus);
    if (gcd(rep.norm(), modulus.norm()) != 1)
      throw Error(ErrorCode::InvalidArgument, "representative not coprime to the modulus");
    target.assign(static_cast<size_t>(R->size()), 0);
    const Int start = R->index({rep.norm(), 0}), e = R->index(eps);
    Int x = start;
    do {
      target[static_cast<size_t>(x)] = 1;
      x = R->mul(x, e);
    } while (x != start);
    weight = [&](const FieldElt& rho) { return static_cast<int>(target[static_cast<size_t>(R->index(rho))]); };
  }
  Rational z = cone.zeta(m, weight, open_plus_ray);
  return z / pow_q(Rational(rep.norm()), m - 1);
}

Rational partial_zeta_neg(const RayClassContext& ctx, Int class_index, int s, LValueCache* cache) {
  if (class_index < 0 || class_index >= ctx.class_count())
    throw Error(ErrorCode::InvalidArgument, "class index out of range");
  const RealQuadField& F = ctx.field;
  std::string key = LValueCache::key(F.disc(), to_string(ctx.modulus) + (ctx.with_infinity ? "inf" : ""),
                                     "class " + to_string(ctx.representatives[static_cast<size_t>(class_index)]), s);
  if (cache)
    if (auto v = cache->get(key)) return *v;
  Rational value;
  if (ctx.with_infinity) {
    value = partial_zeta_from_rep(F, ctx.modulus, ctx.representatives[static_cast<size_t>(class_index)], s);
  } else {
    RayClassContext fine = ray_classes(F, ctx.modulus, true);
    for (Int k = 0; k < fine.class_count(); ++k)
      if (ctx.class_of(fine.representatives[static_cast<size_t>(k)]) == class_index)
        value += partial_zeta_from_rep(F, ctx.modulus, fine.representatives[static_cast<size_t>(k)], s);
  }
  if (cache) cache->put(key, value);
  return value;
}

Rational zeta_F_siegel(const RealQuadField& F, int s) {
  if (s == -1) return siegel_sum(F, 1) / 60;
  if (s == -3) return siegel_sum(F, 3) / 120;
  throw Error(ErrorCode::InvalidArgument, "Siegel formula implemented for s = -1, -3");
}

Rational hecke_L_neg(const RealQuadField& F, const OIdeal& modulus, const IdealCharacter& chi, int s) {
  if (s > 0) throw Error(ErrorCode::InvalidArgument, "L-values need s <= 0");
  const int m = 1 - s;
  const FieldElt eps = totally_positive_unit(F);
  const auto reps = class_group_reps(F, true, modulus.norm());

  std::optional<ResidueRing> R;
  std::vector<int> psi;
  if (!modulus.is_unit()) {
    R.emplace(F, modulus);
    psi = character_table(F, *R, chi);
    if (psi[static_cast<size_t>(R->index(eps))] != 1)
      throw Error(ErrorCode::OracleMismatch, "character is nontrivial on totally positive units");
  }
  auto psi_of = [&](FieldElt x) -> int {
    return R ? psi[static_cast<size_t>(R->index(x))] : 1;
  };

  Rational total = 0;
  for (const OIdeal& b : reps) {
    int cb = chi(F, b) * psi_of({b.norm(), 0});
    if (cb == 0) continue;
    const OIdeal lat = ideal_conj(F, b);
    const FieldElt v1 = positive_element(F, ideal_mul(F, modulus, lat));
    ShintaniCone cone(F, lat, v1, F.mul(v1, eps));
    Rational z = cone.zeta(m, psi_of);
    total += cb * z / pow_q(Rational(b.norm()), m - 1);
  }
  return total;
}

Rational zeta_F_neg(const RealQuadField& F, int s, LValueCache* cache) {
  std::string key = LValueCache::key(F.disc(), "(1)", "zeta", s);
  if (cache)
    if (auto v = cache->get(key)) return *v;
  Rational value = hecke_L_neg(F, OIdeal{}, IdealCharacter::trivial(), s);
  if (s == -1 || s == -3) {
    Rational oracle = zeta_F_siegel(F, s);
    if (oracle != value)
      throw Error(ErrorCode::OracleMismatch, "zeta_F(" + std::to_string(s) + ") for D=" +
                                                 std::to_string(F.disc()) + ": cone sum " +
                                                 to_string(value) + ", Siegel " + to_string(oracle));
  }
  if (cache) cache->put(key, value);
  return value;
}

namespace {

IdealCharacter product_character(const FQuadChar& chi_x, const IdealCharacter& chiprime) {
  if (chiprime.is_trivial()) return chi_x.character();
  FQuadChar copy = chi_x;
  return IdealCharacter(
      [copy, chiprime](const PrimeIdeal& P) { return copy.at_prime(P) * chiprime.at_prime(P); },
      "chi[" + to_string(chi_x.x) + "]*" + chiprime.name());
}

bool parity_forces_zero(const FQuadChar& chi_x, const IdealCharacter& chiprime, int k) {
  const RealQuadField& F = chi_x.field;
  if (k == 1 && chi_x.square_class_flag && chiprime.is_trivial()) return true;
  for (int e = 1; e <= 2; ++e) {
    bool odd_place = F.sign(chi_x.x, e) < 0;
    if (odd_place != (k % 2 == 1)) return true;
  }
  return false;
}

}  // namespace

LValueResult hecke_L_neg(const FQuadChar& chi_x, const IdealCharacter& chiprime, int s, LValueCache* cache) {
  const RealQuadField& F = chi_x.field;
  const int k = 1 - s;
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "L-values need s <= 0");
  LValueResult out;
  out.parity_vanishing = parity_forces_zero(chi_x, chiprime, k);
  std::string key = LValueCache::key(F.disc(), to_string(chi_x.disc) + "inf",
                                     "chi[" + to_string(chi_x.x) + "]*" + chiprime.name(), s);
  if (cache)
    if (auto v = cache->get(key)) {
      out.value = *v;
      return out;
    }
  OIdeal modulus = chi_x.square_class_flag ? OIdeal{} : chi_x.disc;
  out.value = hecke_L_neg(F, modulus, product_character(chi_x, chiprime), s);
  if (out.parity_vanishing && out.value != 0)
    throw Error(ErrorCode::OracleMismatch, "L-value " + to_string(out.value) + " where parity forces 0");
  if (cache) cache->put(key, out.value);
  return out;
}

Rational hecke_L_neg_by_classes(const FQuadChar& chi_x, const IdealCharacter& chiprime, int s) {
  const RealQuadField& F = chi_x.field;
  OIdeal modulus = chi_x.square_class_flag ? OIdeal{} : chi_x.disc;
  RayClassContext ctx = ray_classes(F, modulus, true);
  IdealCharacter chi = product_character(chi_x, chiprime);
  Rational total = 0;
  for (Int k = 0; k < ctx.class_count(); ++k) {
    const OIdeal& rep = ctx.representatives[static_cast<size_t>(k)];
    int c = chi(F, rep);
    if (c != 0) total += c * partial_zeta_neg(ctx, k, s);
  }
  return total;
}

}  // namespace hq
