#include "hq/restrict.hpp"

#include "hq/dirichlet.hpp"
#include "hq/shintani.hpp"

namespace hq {

QSeries theta_Q(Int prec) {
  QSeries t(prec);
  for (Int m = 0; m * m <= prec; ++m) t[m * m] += m == 0 ? 1 : 2;
  return t;
}

QSeries theta_sq(Int prec) {
  QSeries t = theta_Q(prec);
  return t * t;
}

QSeries eisenstein_E(int kappa, Int prec) {
  if (kappa < 0) throw Error(ErrorCode::InvalidArgument, "kappa must be >= 0");
  QSeries e(prec);
  e[0] = L_neg(-4, -2 * kappa) / 2;
  for (Int n = 1; n <= prec; ++n) e[n] = sigma_chi(n, 2 * kappa, -4);
  return e;
}

QSeries eisenstein_F(int kappa, Int prec) {
  if (kappa < 0) throw Error(ErrorCode::InvalidArgument, "kappa must be >= 0");
  QSeries f(prec);
  for (Int n = 1; n <= prec; ++n) f[n] = sigma_chi_prime(n, 2 * kappa, -4);
  return f;
}

QSeries s5_series(Int prec) {
  QSeries s(prec);
  const Int r = isqrt(prec);
  for (Int a = -r; a <= r; ++a)
    for (Int b = -r; b <= r; ++b) {
      if (a * a + b * b > prec) continue;
      // Re (a + b i)^4; the imaginary parts cancel over the symmetric point set.
      Int re = a * a * a * a - 6 * a * a * b * b + b * b * b * b;
      s[a * a + b * b] += re;
    }
  for (Int n = 0; n <= prec; ++n) s[n] /= 4;
  return s;
}

QSeries odd_sigma_series(Int prec) {
  QSeries g(prec);
  for (Int n = 1; n <= prec; n += 2) g[n] = sigma(n, 1);
  return g;
}

QSeries restrict(const HilbertCoeffTable& table) {
  QSeries r(table.prec);
  r[0] = table.constant;
  for (const auto& c : table.coeffs)
    if (c.n >= 0 && c.n <= table.prec) r[c.n] += c.value;
  return r;
}

Int RestrictionForm::eval(Int x, Int y) const {
  Wide v = static_cast<Wide>(a) * x * x + static_cast<Wide>(b) * x * y + static_cast<Wide>(c) * y * y;
  return narrow(v);
}

RestrictionForm restriction_form(const RealQuadField& F, const RestrictionUnit& u) {
  // (x + y w)^2 = (x^2 - n y^2) + (2xy + t y^2) w.
  const Int t = F.omega_trace(), n = F.omega_norm();
  RestrictionForm f;
  f.a = u.beta;
  f.b = -2 * u.alpha;
  f.c = -u.beta * n - u.alpha * t;
  if (f.a <= 0 || 4 * f.a * f.c - f.b * f.b <= 0)
    throw Error(ErrorCode::NotPositiveDefinite,
                "l(eta^2) = " + std::to_string(f.a) + "x^2 + " + std::to_string(f.b) + "xy + " +
                    std::to_string(f.c) + "y^2");
  return f;
}

std::vector<FieldElt> elements_below(const RealQuadField& F, const RestrictionUnit& u, Int bound) {
  const RestrictionForm f = restriction_form(F, u);
  const Wide delta = 4 * static_cast<Wide>(f.a) * f.c - static_cast<Wide>(f.b) * f.b;
  const Int Y = narrow(isqrt_wide(4 * static_cast<Wide>(f.a) * bound / delta)) + 1;
  std::vector<FieldElt> out;
  for (Int y = -Y; y <= Y; ++y) {
    Wide disc = 4 * static_cast<Wide>(f.a) * bound - delta * y * y;
    if (disc < 0) continue;
    Wide root = isqrt_wide(disc);
    Wide lo = (-static_cast<Wide>(f.b) * y - root) / (2 * f.a) - 1;
    Wide hi = (-static_cast<Wide>(f.b) * y + root) / (2 * f.a) + 1;
    for (Wide x = lo; x <= hi; ++x) {
      Int v = f.eval(narrow(x), y);
      if (v <= bound) out.push_back({narrow(x), y});
    }
  }
  return out;
}

QSeries restrict_theta_F(const RealQuadField& F, const RestrictionUnit& u, Int prec) {
  const RestrictionForm f = restriction_form(F, u);
  QSeries r(prec);
  for (FieldElt eta : elements_below(F, u, prec)) r[f.eval(eta.a, eta.b)] += 1;
  return r;
}

QSeries rep_numbers(const RealQuadField& F, const RestrictionUnit& u, int k, Int prec) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  return restrict_theta_F(F, u, prec).pow(static_cast<unsigned>(k));
}

std::map<FieldElt, Int> rep_counts_F(const RealQuadField& F, const RestrictionUnit& u, int k, Int prec) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  std::map<FieldElt, Int> squares;
  for (FieldElt eta : elements_below(F, u, prec)) squares[F.sqr(eta)] += 1;
  std::map<FieldElt, Int> acc = squares;
  for (int i = 1; i < k; ++i) {
    std::map<FieldElt, Int> next;
    for (const auto& [xi, c] : acc) {
      const Int lx = u.index(xi);
      for (const auto& [s, d] : squares)
        if (lx + u.index(s) <= prec) next[xi + s] += c * d;
    }
    acc = std::move(next);
  }
  return acc;
}

Decomposition decompose(const QSeries& series, int kappa) {
  if (kappa < 1) throw Error(ErrorCode::InvalidArgument, "decompose needs kappa >= 1");
  if (series.prec() < kappa + 2)
    throw Error(ErrorCode::InvalidArgument, "decompose needs prec >= kappa + 2");
  const Int prec = series.prec();
  const QSeries E = eisenstein_E(kappa, prec), Fs = eisenstein_F(kappa, prec);
  Decomposition d;
  d.c_E = series[0] / E[0];
  if (kappa == 2) {
    const QSeries S = s5_series(prec);
    Rational r1 = series[1] - d.c_E * E[1], r2 = series[2] - d.c_E * E[2];
    Rational det = Fs[1] * S[2] - Fs[2] * S[1];
    d.c_F = (r1 * S[2] - r2 * S[1]) / det;
    d.c_S = (Fs[1] * r2 - Fs[2] * r1) / det;
    d.residual = series - d.c_E * E - d.c_F * Fs;
    d.residual_in_cusp_space = d.residual == *d.c_S * S;
  } else {
    d.c_F = (series[1] - d.c_E * E[1]) / Fs[1];
    d.residual = series - d.c_E * E - d.c_F * Fs;
    if (kappa == 1) d.residual_in_cusp_space = d.residual.is_zero();
  }
  return d;
}

Dimensions dim_formulas(int kappa) {
  Dimensions d;
  d.dim_M = kappa < 0 ? 0 : 1 + kappa;
  d.dim_S = kappa < 2 ? 0 : kappa - 1;
  return d;
}

Int series_rank(const std::vector<QSeries>& series) {
  if (series.empty()) return 0;
  Int prec = series[0].prec();
  for (const auto& s : series) prec = std::min(prec, s.prec());
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : series) rows.emplace_back(s.coeffs().begin(), s.coeffs().begin() + prec + 1);
  Int rank = 0;
  for (Int col = 0; col <= prec && rank < static_cast<Int>(rows.size()); ++col) {
    size_t piv = static_cast<size_t>(rank);
    while (piv < rows.size() && rows[piv][static_cast<size_t>(col)] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<size_t>(rank)]);
    const auto& p = rows[static_cast<size_t>(rank)];
    for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][static_cast<size_t>(col)] == 0) continue;
      Rational f = rows[r][static_cast<size_t>(col)] / p[static_cast<size_t>(col)];
      for (size_t c = static_cast<size_t>(col); c < p.size(); ++c) rows[r][c] -= f * p[c];
    }
    ++rank;
  }
  return rank;
}

Int monomial_rank(int kappa, Int prec) {
  if (kappa < 0) return 0;
  const QSeries t2 = theta_sq(prec), t4 = t2 * t2, G = odd_sigma_series(prec);
  std::vector<QSeries> mons;
  for (int a = 0; a <= kappa; ++a)
    mons.push_back(t2 * t4.pow(static_cast<unsigned>(a)) * G.pow(static_cast<unsigned>(kappa - a)));
  return series_rank(mons);
}

RelationReport verify_theta_identity(const RealQuadField& F, Int prec) {
  RelationReport rep;
  rep.relation = "theta";
  rep.params["D"] = std::to_string(F.disc());
  rep.params["prec"] = std::to_string(prec);
  const auto u = find_restriction_unit(F);
  const QSeries lhs = restrict_theta_F(F, u, prec), rhs = theta_sq(prec);
  for (Int n = 0; n <= prec; ++n) rep.add(n, lhs[n], rhs[n]);
  return rep;
}

RelationReport verify_sum_of_squares(const RealQuadField& F, int k_max, Int prec) {
  RelationReport rep;
  rep.relation = "sumsq";
  rep.params["D"] = std::to_string(F.disc());
  rep.params["k_max"] = std::to_string(k_max);
  rep.params["prec"] = std::to_string(prec);
  const auto u = find_restriction_unit(F);
  const QSeries theta = theta_Q(prec);
  for (int k = 1; k <= k_max; ++k) {
    QSeries lines(prec);
    for (const auto& [xi, c] : rep_counts_F(F, u, k, prec)) lines[u.index(xi)] += c;
    const QSeries r2k = theta.pow(static_cast<unsigned>(2 * k));
    const QSeries ring = rep_numbers(F, u, k, prec);
    for (Int n = 0; n <= prec; ++n) {
      rep.add(n, lines[n], r2k[n], "k=" + std::to_string(k));
      rep.add(n, lines[n], ring[n], "k=" + std::to_string(k) + " ring-map");
    }
  }
  return rep;
}

RelationReport verify_corollary_k1(const RealQuadField& F, Int prec, LValueCache* cache) {
  RelationReport rep;
  rep.relation = "corollary";
  rep.params["D"] = std::to_string(F.disc());
  rep.params["kappa"] = "1";
  rep.params["prec"] = std::to_string(prec);
  const Int hits0 = cache ? cache->hits() : 0;
  const auto u = find_restriction_unit(F);
  const QSeries lhs = restrict(g_table(F, 1, IdealCharacter::trivial(), u, prec, cache));
  const Rational c = -4 * zeta_F_siegel(F, -1);
  const QSeries rhs = c * (eisenstein_E(1, prec) - eisenstein_F(1, prec));
  for (Int n = 1; n <= prec; ++n) rep.add(n, lhs[n], rhs[n]);
  rep.notes.push_back("constant -4 zeta_F(-1) = " + to_string(c));
  rep.notes.push_back("n = 0: lhs " + to_string(lhs[0]) + ", rhs " + to_string(rhs[0]) +
                      (lhs[0] == rhs[0] ? " (equal)" : " (differ)"));
  if (cache) rep.cache_hits = cache->hits() - hits0;
  return rep;
}

RelationReport verify_theorem_consts(const RealQuadField& F, int kappa, Int prec, LValueCache* cache) {
  RelationReport rep;
  rep.relation = "consts";
  rep.params["D"] = std::to_string(F.disc());
  rep.params["kappa"] = std::to_string(kappa);
  rep.params["prec"] = std::to_string(prec);
  const Int hits0 = cache ? cache->hits() : 0;
  const auto u = find_restriction_unit(F);
  const QSeries R = restrict(g_table(F, kappa, IdealCharacter::trivial(), u, prec, cache));
  const Decomposition d = decompose(R, kappa);
  const int s = 1 - 2 * kappa;
  const Rational zeta = (s == -1 || s == -3) ? zeta_F_siegel(F, s) : zeta_F_neg(F, s, cache);
  const Rational expected = 2 * zeta / L_neg(-4, -2 * kappa);
  rep.add(0, d.c_E, expected, "c_E");
  rep.add(0, d.c_F, (kappa % 2 == 0 ? 1 : -1) * expected, "c_F");
  if (kappa == 1) {
    for (Int n = 0; n <= prec; ++n) rep.add(n, d.residual[n], 0, "residual");
  } else if (kappa == 2) {
    const QSeries S = s5_series(prec);
    for (Int n = 0; n <= prec; ++n) rep.add(n, d.residual[n], *d.c_S * S[n], "residual");
    rep.notes.push_back("residual = (" + to_string(*d.c_S) + ") S_5");
  } else {
    rep.add(0, d.residual[0], 0, "residual");
    rep.notes.push_back("no cusp basis for kappa >= 3; residual reported without a cuspidality verdict");
  }
  if (cache) rep.cache_hits = cache->hits() - hits0;
  return rep;
}

RelationReport verify_dimensions(int kappa_min, int kappa_max) {
  RelationReport rep;
  rep.relation = "dimensions";
  rep.params["kappa"] = std::to_string(kappa_min) + ".." + std::to_string(kappa_max);
  for (int k = kappa_min; k <= kappa_max; ++k) {
    const Dimensions d = dim_formulas(k);
    const Int prec = 4 * std::max(k, 0) + 12;
    const Int rank = monomial_rank(k, prec);
    rep.add(k, d.dim_M, rank, "dim_M");
    Int eis = 0;
    if (k == 0) eis = 1;
    if (k >= 1) {
      const QSeries t2 = theta_sq(prec), t4 = t2 * t2, G = odd_sigma_series(prec);
      std::vector<QSeries> all;
      for (int a = 0; a <= k; ++a)
        all.push_back(t2 * t4.pow(static_cast<unsigned>(a)) * G.pow(static_cast<unsigned>(k - a)));
      all.push_back(eisenstein_E(k, prec));
      all.push_back(eisenstein_F(k, prec));
      rep.add_check(k, series_rank(all) == rank, "E,F in span");
      eis = series_rank({eisenstein_E(k, prec), eisenstein_F(k, prec)});
    }
    rep.add(k, d.dim_S, std::max<Int>(rank - eis, 0), "dim_S");
    if (k >= 2) rep.add(k, d.dim_M - d.dim_S, 2, "dim_M - dim_S");
  }
  return rep;
}

}  // namespace hq
