#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hq/acceptance.hpp"
#include "hq/cohen.hpp"
#include "hq/dirichlet.hpp"
#include "hq/restrict.hpp"
#include "hq/shintani.hpp"
#include "hq/version.hpp"

namespace {

using hq::Int;
using hq::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerifyFailed = 2;

struct RunConfig {
  std::string command;
  std::string relation;
  Int disc = 5;
  int kappa = 1;
  int r = 2;
  Int prec = -1;
  std::string x;
  int k = 1;
  std::string chiprime = "trivial";
  std::string out;
  std::string format;
  std::string cache_path;
  Int factor_bound = 0;
  unsigned threads = 0;
  bool verbose = false;
};

std::string resolve_format(const RunConfig& cfg) {
  if (!cfg.format.empty()) return cfg.format;
  if (cfg.out.size() >= 5 && cfg.out.substr(cfg.out.size() - 5) == ".json") return "json";
  return "csv";
}

void emit(const RunConfig& cfg, const std::string& content) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary | std::ios::trunc);
  if (!f) throw hq::Error(hq::ErrorCode::InvalidArgument, "cannot write '" + cfg.out + "'");
  f << content;
}

Int prec_or(const RunConfig& cfg, Int fallback) { return cfg.prec >= 0 ? cfg.prec : fallback; }

hq::IdealCharacter chi_prime(const RunConfig& cfg) {
  if (cfg.chiprime != "trivial")
    throw hq::Error(hq::ErrorCode::InvalidArgument,
                    "unsupported --chiprime '" + cfg.chiprime + "' (only 'trivial' is available)");
  return hq::IdealCharacter::trivial();
}

std::string series_csv(const hq::QSeries& s, const char* column) {
  std::string out = std::string("n,") + column + "\n";
  for (Int n = 0; n <= s.prec(); ++n) out += std::to_string(n) + "," + hq::to_string(s[n]) + "\n";
  return out;
}

json series_json(const hq::QSeries& s, const char* column) {
  json rows = json::array();
  for (Int n = 0; n <= s.prec(); ++n) rows.push_back({{"n", n}, {column, hq::to_string(s[n])}});
  return rows;
}

int cmd_hurwitz(const RunConfig& cfg) {
  const Int N = prec_or(cfg, 50);
  hq::QSeries H(N);
  for (Int n = 0; n <= N; ++n) H[n] = hq::hurwitz_H(n);
  if (resolve_format(cfg) == "json")
    emit(cfg, json{{"schema", 1}, {"kind", "hurwitz"}, {"rows", series_json(H, "H")}}.dump(2) + "\n");
  else
    emit(cfg, series_csv(H, "H"));
  return kExitOk;
}

int cmd_cohen(const RunConfig& cfg) {
  const Int N = prec_or(cfg, 50);
  hq::QSeries H(N);
  for (Int n = 0; n <= N; ++n) H[n] = hq::cohen_H(cfg.r, n);
  if (resolve_format(cfg) == "json")
    emit(cfg, json{{"schema", 1}, {"kind", "cohen"}, {"r", cfg.r}, {"rows", series_json(H, "H")}}.dump(2) + "\n");
  else
    emit(cfg, series_csv(H, "H"));
  return kExitOk;
}

int cmd_lvalue(const RunConfig& cfg, hq::LValueCache* cache) {
  if (cfg.x.empty()) throw hq::Error(hq::ErrorCode::InvalidArgument, "--x is required");
  auto F = hq::RealQuadField::make(cfg.disc);
  auto chi = hq::relative_discriminant(F, hq::parse_elt(cfg.x));
  auto res = hq::hecke_L_neg(chi, chi_prime(cfg), 1 - cfg.k, cache);
  std::cout << hq::to_string(res.value) << "\n";
  if (cfg.verbose) {
    std::cerr << "D_x = " << hq::to_string(chi.disc) << ", s = " << 1 - cfg.k;
    if (res.parity_vanishing) std::cerr << ", vanishes by parity";
    std::cerr << "\n";
  }
  return kExitOk;
}

int cmd_gtable(const RunConfig& cfg, hq::LValueCache* cache) {
  auto F = hq::RealQuadField::make(cfg.disc);
  auto t = hq::g_table(F, cfg.kappa, chi_prime(cfg), hq::find_restriction_unit(F), prec_or(cfg, 20), cache,
                       cfg.threads);
  if (resolve_format(cfg) == "json") {
    emit(cfg, t.to_json());
  } else {
    std::string out = "xi,n,H\n";
    out += "0,0," + hq::to_string(t.constant) + "\n";
    for (const auto& c : t.coeffs)
      out += hq::to_string(c.xi) + "," + std::to_string(c.n) + "," + hq::to_string(c.value) + "\n";
    emit(cfg, out);
  }
  return kExitOk;
}

int cmd_restrict(const RunConfig& cfg, hq::LValueCache* cache) {
  auto F = hq::RealQuadField::make(cfg.disc);
  auto u = hq::find_restriction_unit(F);
  const Int prec = prec_or(cfg, 20);
  auto R = hq::restrict(hq::g_table(F, cfg.kappa, chi_prime(cfg), u, prec, cache, cfg.threads));
  std::optional<hq::Decomposition> d;
  if (prec >= cfg.kappa + 2) d = hq::decompose(R, cfg.kappa);
  if (resolve_format(cfg) == "json") {
    json j{{"schema", 1}, {"kind", "restrict"}, {"disc", cfg.disc}, {"kappa", cfg.kappa},
           {"unit", hq::to_string(u.unit())}, {"prec", prec}, {"coeffs", series_json(R, "value")}};
    if (d) {
      j["decomposition"] = {{"c_E", hq::to_string(d->c_E)}, {"c_F", hq::to_string(d->c_F)}};
      if (d->c_S) j["decomposition"]["c_S"] = hq::to_string(*d->c_S);
      if (d->residual_in_cusp_space) j["decomposition"]["residual_in_cusp_space"] = *d->residual_in_cusp_space;
    }
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, series_csv(R, "value"));
    if (d && cfg.verbose) std::cerr << "c_E = " << d->c_E << ", c_F = " << d->c_F << "\n";
  }
  return kExitOk;
}

int cmd_fchar(const RunConfig& cfg) {
  if (cfg.x.empty()) throw hq::Error(hq::ErrorCode::InvalidArgument, "--x is required");
  auto F = hq::RealQuadField::make(cfg.disc);
  auto chi = hq::relative_discriminant(F, hq::parse_elt(cfg.x));
  json local = json::array();
  for (const auto& [P, lc] : chi.local)
    local.push_back({{"prime", hq::to_string(P.ideal)},
                     {"p", P.p},
                     {"valuation", lc.valuation},
                     {"disc_exp", lc.disc_exp},
                     {"chi", lc.value}});
  json j{{"schema", 1},
         {"disc", cfg.disc},
         {"x", hq::to_string(chi.x)},
         {"D_x", hq::to_string(chi.disc)},
         {"N(D_x)", chi.disc.norm()},
         {"f_x", chi.cond_integral ? json(hq::to_string(chi.cond)) : json(nullptr)},
         {"square_class", chi.square_class_flag},
         {"local", local}};
  emit(cfg, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, hq::LValueCache* cache) {
  hq::RelationReport rep;
  if (cfg.relation == "classical") {
    rep = hq::verify_classical(prec_or(cfg, 300));
  } else {
    auto F = hq::RealQuadField::make(cfg.disc);
    if (cfg.relation == "theta")
      rep = hq::verify_theta_identity(F, prec_or(cfg, 500));
    else if (cfg.relation == "sumsq")
      rep = hq::verify_sum_of_squares(F, cfg.kappa, prec_or(cfg, 100));
    else if (cfg.relation == "corollary")
      rep = hq::verify_corollary_k1(F, prec_or(cfg, 50), cache);
    else if (cfg.relation == "consts")
      rep = hq::verify_theorem_consts(F, cfg.kappa, prec_or(cfg, 30), cache);
  }
  if (!cfg.out.empty()) emit(cfg, resolve_format(cfg) == "json" ? rep.to_json() : rep.to_csv());
  std::string params;
  for (const auto& [k, v] : rep.params) params += " " + k + "=" + v;
  std::cout << rep.relation << params << ": " << rep.pass_count() << " pass, " << rep.fail_count() << " fail\n";
  for (const auto& row : rep.rows)
    if (!row.equal)
      std::cout << "  mismatch " << row.label << " n=" << row.n << ": " << row.lhs << " != " << row.rhs << "\n";
  if (cfg.verbose) {
    for (const auto& note : rep.notes) std::cerr << "note: " << note << "\n";
    std::cerr << "cache hits: " << rep.cache_hits << "\n";
  }
  return rep.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_selftest(hq::LValueCache* cache) {
  int failed = 0;
  auto results = hq::run_acceptance(cache, [&](const hq::CriterionResult& r) {
    std::cout << hq::format_result(r) << std::endl;
    failed += r.pass ? 0 : 1;
  });
  std::cout << results.size() << " criteria, " << failed << " failed\n";
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.factor_bound > 0) hq::set_factor_bound(cfg.factor_bound);
  hq::LValueCache cache(cfg.cache_path);
  if (!cfg.cache_path.empty()) cache.load();
  int code = kExitOk;
  if (cfg.command == "hurwitz")
    code = cmd_hurwitz(cfg);
  else if (cfg.command == "cohen")
    code = cmd_cohen(cfg);
  else if (cfg.command == "lvalue")
    code = cmd_lvalue(cfg, &cache);
  else if (cfg.command == "gtable")
    code = cmd_gtable(cfg, &cache);
  else if (cfg.command == "restrict")
    code = cmd_restrict(cfg, &cache);
  else if (cfg.command == "fchar")
    code = cmd_fchar(cfg);
  else if (cfg.command == "verify")
    code = cmd_verify(cfg, &cache);
  else if (cfg.command == "selftest")
    code = cmd_selftest(&cache);
  if (!cfg.cache_path.empty() && cache.dirty()) cache.save();
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact Cohen-Eisenstein coefficients, Hecke L-values and restriction identities"};
  app.set_version_flag("--version", std::string(hq::kVersion));
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "Write the artifact to this file ('-' for stdout)");
    sub->add_option("--format", cfg.format, "Artifact format (default: json for *.json, else csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--cache", cfg.cache_path, "L-value cache file (default: $HQ_CACHE, else none)");
    sub->add_option("--factor-bound", cfg.factor_bound, "Trial division limit for factoring")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "Worker threads for table fills (0: all cores)");
    sub->add_flag("-v,--verbose", cfg.verbose, "Print notes and diagnostics to stderr");
  };
  auto add_disc = [&](CLI::App* sub) {
    sub->add_option("--disc", cfg.disc, "Fundamental discriminant D > 4 of the real quadratic field")
        ->capture_default_str();
  };
  auto add_prec = [&](CLI::App* sub, const char* help) { sub->add_option("--prec", cfg.prec, help); };
  auto add_kappa = [&](CLI::App* sub) {
    sub->add_option("--kappa", cfg.kappa, "Weight parameter kappa >= 1")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto add_chiprime = [&](CLI::App* sub) {
    sub->add_option("--chiprime", cfg.chiprime, "Class group character chi'")->capture_default_str();
  };

  auto* hurwitz = app.add_subcommand("hurwitz", "Hurwitz class numbers H(N), 0 <= N <= prec");
  add_prec(hurwitz, "Largest N (default 50)");
  add_common(hurwitz);

  auto* cohen = app.add_subcommand("cohen", "Cohen's H(r, N), 0 <= N <= prec");
  cohen->add_option("--r", cfg.r, "Cohen's r >= 1")->check(CLI::PositiveNumber)->capture_default_str();
  add_prec(cohen, "Largest N (default 50)");
  add_common(cohen);

  auto* lvalue = app.add_subcommand("lvalue", "Exact L_F(1 - k, chi_x chi') for chi_x of F(sqrt x)/F");
  add_disc(lvalue);
  lvalue->add_option("--x", cfg.x, "Element a+b*w of O_F")->required();
  lvalue->add_option("--k", cfg.k, "Evaluate at s = 1 - k")->check(CLI::PositiveNumber)->capture_default_str();
  add_chiprime(lvalue);
  add_common(lvalue);

  auto* gtable = app.add_subcommand("gtable", "Coefficient table of the Cohen-Eisenstein series over F");
  add_disc(gtable);
  add_kappa(gtable);
  add_prec(gtable, "Keep xi with l(xi) <= prec (default 20)");
  add_chiprime(gtable);
  add_common(gtable);

  auto* restr = app.add_subcommand("restrict", "Restricted series and its Eisenstein decomposition");
  add_disc(restr);
  add_kappa(restr);
  add_prec(restr, "Number of coefficients (default 20)");
  add_chiprime(restr);
  add_common(restr);

  auto* fchar = app.add_subcommand("fchar", "Relative discriminant and conductor of F(sqrt x)/F");
  add_disc(fchar);
  fchar->add_option("--x", cfg.x, "Nonzero element a+b*w of O_F")->required();
  add_common(fchar);

  auto* verify = app.add_subcommand("verify", "Check an exact identity and report per-index rows");
  verify->add_option("relation", cfg.relation, "Identity to check")
      ->required()
      ->check(CLI::IsMember({"classical", "theta", "sumsq", "corollary", "consts"}));
  add_disc(verify);
  verify->add_option("--kappa", cfg.kappa, "kappa (consts) or largest kappa (sumsq)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_prec(verify, "Coefficient range (defaults: classical 300, theta 500, sumsq 100, corollary 50, consts 30)");
  add_common(verify);

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.cache_path.empty())
    if (const char* env = std::getenv("HQ_CACHE")) cfg.cache_path = env;

  try {
    return dispatch(cfg);
  } catch (const hq::Error& e) {
    std::cerr << "hq: error: " << e.what() << "\n";
    if (e.code() == hq::ErrorCode::NoNegativeNormUnit)
      std::cerr << "hq: restriction needs a unit of norm -1; choose a discriminant such as 5, 8 or 13\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "hq: error: " << e.what() << "\n";
    return kExitError;
  }
}
