#include "nazeta/cli.hpp"

#include "nazeta/cache.hpp"
#include "nazeta/curve.hpp"
#include "nazeta/errors.hpp"
#include "nazeta/mass.hpp"
#include "nazeta/nonstable.hpp"
#include "nazeta/point_count.hpp"
#include "nazeta/rank_zeta.hpp"
#include "nazeta/restricted.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

namespace nazeta {

namespace {

struct CurveSource {
  std::vector<std::string> weil;
  std::string hyperelliptic;
  std::string plane;
  std::string file;
  long q = 0;
  int genus = -1;
  std::string label;
};

struct Options {
  CurveSource curve;
  int r = 1;
  long d = 0;
  int m_max = 10;
  double tol = 1e-9;
  std::vector<int> unity_orders;
  std::string window_file;
  std::string table_file;
  std::string mode = "squared";
  bool allow_partial = false;
  bool mode_experiment = false;
  bool skip_validation = false;
  std::string s_sample = "2";
  int depth = 60;
  std::string csv_series;
  std::string csv_roots;
  std::string report_file;
  bool no_cache = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InputError(path + " is not valid JSON");
  return j;
}

long parse_long(const std::string& s, const char* what) {
  const Rational v = parse_rational(s);
  if (!is_integer(v) || !v.get_num().fits_slong_p()) throw InputError(std::string(what) + " must be an integer: " + s);
  return v.get_num().get_si();
}

// "c,i,j,k;c,i,j,k;..." for sum of c X^i Y^j Z^k
PlaneCurveSpec parse_plane(const std::string& text, long q, int genus) {
  PlaneCurveSpec spec;
  spec.q = q;
  spec.model = PlaneCurveSpec::Model::plane;
  spec.genus = genus;
  std::stringstream terms(text);
  std::string term;
  int degree = -1;
  while (std::getline(terms, term, ';')) {
    if (term.find_first_not_of(" \t") == std::string::npos) continue;
    std::stringstream fields(term);
    std::string field;
    std::vector<long> v;
    while (std::getline(fields, field, ',')) v.push_back(parse_long(field, "plane monomial field"));
    if (v.size() != 4 || v[1] < 0 || v[2] < 0 || v[3] < 0) {
      throw InputError("plane monomial must read c,i,j,k with i, j, k >= 0: '" + term + "'");
    }
    const int deg = static_cast<int>(v[1] + v[2] + v[3]);
    if (degree >= 0 && deg != degree) throw InputError("plane curve equation must be homogeneous");
    degree = deg;
    spec.monomials[{static_cast<int>(v[1]), static_cast<int>(v[2]), static_cast<int>(v[3])}] += v[0];
  }
  if (spec.monomials.empty()) throw InputError("plane curve equation has no terms");
  return spec;
}

CurveData curve_from_counts(long q, int g, const std::vector<Integer>& counts, std::string label) {
  const std::vector<Integer> first(counts.begin(), counts.begin() + g);
  const Poly P = weil_from_counts(q, g, first);
  std::vector<Integer> coeffs;
  for (const auto& a : P.coefficients()) coeffs.push_back(a.get_num());
  if (coeffs.empty()) coeffs.emplace_back(1);
  return ingest_weil(q, g, coeffs, std::move(label), counts);
}

CurveData load_curve(const CurveSource& src) {
  const int given = !src.weil.empty() + !src.hyperelliptic.empty() + !src.plane.empty() + !src.file.empty();
  if (given != 1) throw InputError("give exactly one of --weil, --hyperelliptic, --plane, --curve");
  if (!src.file.empty()) return curve_from_json(read_json_file(src.file));
  if (!src.weil.empty()) {
    if (src.weil.size() < 3) throw InputError("--weil needs q g a_0 ... a_2g");
    const long q = parse_long(src.weil[0], "q");
    const long g = parse_long(src.weil[1], "g");
    if (g < 0 || g > 1000) throw InputError("genus out of range");
    std::vector<Integer> coeffs;
    for (std::size_t i = 2; i < src.weil.size(); ++i) {
      const Rational a = parse_rational(src.weil[i]);
      if (!is_integer(a)) throw InputError("Weil coefficients must be integers: " + src.weil[i]);
      coeffs.push_back(a.get_num());
    }
    return ingest_weil(q, static_cast<int>(g), coeffs, src.label);
  }
  if (src.q < 2) throw InputError("--q is required with --hyperelliptic and --plane");
  if (!src.hyperelliptic.empty()) {
    const PlaneCurveSpec spec = parse_hyperelliptic(src.hyperelliptic, src.q);
    const int g = spec.hyperelliptic_genus();
    const auto counts = count_points(spec, std::max(g, 1));
    return curve_from_counts(src.q, g, counts, src.label.empty() ? src.hyperelliptic : src.label);
  }
  if (src.genus < 0) throw InputError("--plane needs --genus");
  const PlaneCurveSpec spec = parse_plane(src.plane, src.q, src.genus);
  const auto counts = count_points(spec, std::max(src.genus, 1));
  return curve_from_counts(src.q, src.genus, counts, src.label.empty() ? src.plane : src.label);
}

json roots_json(const std::vector<std::complex<double>>& roots) {
  json out = json::array();
  for (const auto& w : roots) out.push_back({w.real(), w.imag()});
  return out;
}

std::vector<std::complex<double>> roots_from_json(const json& j) {
  std::vector<std::complex<double>> out;
  for (const auto& w : j) out.emplace_back(w.at(0).get<double>(), w.at(1).get<double>());
  return out;
}

void write_series_csv(const std::string& path, const RationalFunction& f, int n_terms) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << "degree,coefficient\n";
  const auto series = series_expand(f, n_terms);
  for (std::size_t d = 0; d < series.size(); ++d) out << d << ',' << to_string(series[d]) << '\n';
}

void write_roots_csv(const std::string& path, const std::vector<std::complex<double>>& roots) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << "re,im,abs\n" << std::setprecision(17);
  for (const auto& w : roots) out << w.real() << ',' << w.imag() << ',' << std::abs(w) << '\n';
}

void add_curve_options(CLI::App* app, CurveSource& src) {
  app->add_option("--weil", src.weil, "q g a_0 ... a_2g");
  app->add_option("--hyperelliptic", src.hyperelliptic, "equation such as \"y^2+y=x^3\"");
  app->add_option("--plane", src.plane, "homogeneous terms \"c,i,j,k;...\" for c X^i Y^j Z^k");
  app->add_option("--curve", src.file, "curve JSON file");
  app->add_option("--q", src.q, "field size for --hyperelliptic / --plane");
  app->add_option("--genus", src.genus, "genus for --plane");
  app->add_option("--label", src.label, "curve label");
}

// Computes (or replays) a payload; the key covers the curve, command and parameters.
std::string cached_payload(const Options& opt, const std::string& curve_json, const std::string& command,
                           const json& params, const std::function<json()>& compute) {
  std::optional<ResultCache> cache;
  if (!opt.no_cache) cache = ResultCache::from_env();
  const std::string material = ResultCache::key_material(curve_json, command, params.dump());
  if (cache) {
    if (auto hit = cache->get(material)) return *hit;
  }
  const std::string payload = compute().dump();
  if (cache) cache->put(material, payload);
  return payload;
}

void emit(std::ostream& out, const std::string& command, const json& payload) {
  out << json{{"command", command}, {"result", payload}, {"tool_version", kToolVersion}}.dump(2) << '\n';
}

int verdict_code(const json& payload) { return payload.value("ok", false) ? kExitPass : kExitVerification; }

json abelian_payload(const CurveData& c, double tol) {
  const AbelianZeta ab = abelian_zeta(c, std::max(2 * c.g, 4));
  const AbelianVerification v = verify_abelian(c, tol);
  json b = json::array();
  json sigma = json::array();
  for (int d = 0; d <= ab.d_max(); ++d) {
    b.push_back(to_json(ab.b[static_cast<std::size_t>(d)]));
    sigma.push_back(to_json(ab.sigma[static_cast<std::size_t>(d)]));
  }
  json counts = json::array();
  for (const auto& n : c.derived_point_counts(std::max(c.g, 4))) counts.push_back(n.get_str());
  const bool rh_ok = v.vacuous || v.rh_max_deviation < tol;
  return json{{"curve", to_json(c)},
              {"abelian",
               {{"Z", to_json(ab.Z)},
                {"class_number", ab.h.get_str()},
                {"b", b},
                {"sigma", sigma},
                {"point_counts", counts},
                {"functional_equation", v.functional_equation},
                {"fe_constant", to_json(v.fe_constant)},
                {"rh", {{"numeric", true}, {"vacuous", v.vacuous}, {"max_deviation", v.rh_max_deviation},
                        {"roots", roots_json(v.roots)}}}}},
              {"ok", v.functional_equation && rh_ok}};
}

int cmd_curve(const Options& opt, std::ostream& out) {
  const CurveData c = load_curve(opt.curve);
  const json params{{"tol", opt.tol}};
  const std::string payload =
      cached_payload(opt, to_json(c).dump(), "curve", params, [&] { return abelian_payload(c, opt.tol); });
  const json j = json::parse(payload);
  if (!opt.csv_series.empty()) write_series_csv(opt.csv_series, ratfun_from_json(j.at("abelian").at("Z")), opt.m_max + 1);
  if (!opt.csv_roots.empty()) write_roots_csv(opt.csv_roots, roots_from_json(j.at("abelian").at("rh").at("roots")));
  emit(out, "curve", j);
  return verdict_code(j);
}

int cmd_zeta_rank(const Options& opt, std::ostream& out) {
  const CurveData c = load_curve(opt.curve);
  if (opt.r < 1) throw InputError("--r must be >= 1");
  std::optional<json> window_json;
  if (!opt.window_file.empty()) window_json = read_json_file(opt.window_file);
  const json params{{"r", opt.r},
                    {"m_max", opt.m_max},
                    {"tol", opt.tol},
                    {"a", opt.unity_orders},
                    {"window", window_json ? *window_json : json()}};
  auto compute = [&]() -> json {
    ZetaOptions zo;
    zo.m_max = opt.m_max;
    zo.tol = opt.tol;
    ZetaReport rep;
    if (opt.r == 1 && !window_json) {
      rep = rank1_pipeline(c, zo);
    } else {
      RankWindow w;
      if (window_json) {
        w = rank_window_from_json(*window_json);
        if (w.q != c.q || w.g != c.g || w.r != opt.r) throw InputError("window (q, g, r) disagrees with the curve and --r");
      } else if (c.g == 0) {
        MassTable table(c);
        w = window_from_masses(table, opt.r);
      } else {
        throw InputError("rank >= 2 on a curve of genus >= 1 needs --window");
      }
      rep = assemble_Z(w, zo);
    }
    json j = to_json(rep);
    bool ok = rep.all_assertable_pass();
    json unity = json::array();
    for (int a : opt.unity_orders) {
      const auto check = roots_of_unity_check(rep, a, opt.m_max);
      unity.push_back({{"a", a}, {"matches", check.matches}, {"product", to_json(check.product)}});
      ok = ok && check.matches;
    }
    j["roots_of_unity"] = unity;
    j["ok"] = ok;
    return j;
  };
  const std::string payload = cached_payload(opt, to_json(c).dump(), "zeta rank", params, compute);
  const json j = json::parse(payload);
  if (!opt.csv_series.empty()) write_series_csv(opt.csv_series, ratfun_from_json(j.at("Z")), opt.m_max + 1);
  if (!opt.csv_roots.empty()) write_roots_csv(opt.csv_roots, roots_from_json(j.at("rh").at("roots")));
  emit(out, "zeta rank", j);
  return verdict_code(j);
}

int cmd_zeta_restricted(const Options& opt, std::ostream& out) {
  if (opt.window_file.empty()) throw InputError("zeta restricted needs --window");
  const json wj = read_json_file(opt.window_file);
  const RestrictedWindow w = restricted_window_from_json(wj);
  const json params{{"window", to_json(w)}, {"skip_validation", opt.skip_validation}};
  auto compute = [&]() -> json {
    const RestrictedZeta z = assemble_xi(w, opt.skip_validation);
    const RestrictedResidues res = residues_xi(z, w.q, w.g, w.r, w.dL);
    json j = to_json(z, res);
    const bool hn_matches = res.hn_from_t_qinv == w.M;
    j["window"] = to_json(w);
    j["hn_matches_M"] = hn_matches;
    const bool strict = w.semantics == WindowSemantics::multiset;
    j["ok"] = z.fe_verdict && res.agree && z.s_holomorphic && (!strict || hn_matches);
    return j;
  };
  const std::string payload = cached_payload(opt, "", "zeta restricted", params, compute);
  const json j = json::parse(payload);
  emit(out, "zeta restricted", j);
  return verdict_code(j);
}

int cmd_zeta_nonstable(const Options& opt, std::ostream& out) {
  const CurveData c = load_curve(opt.curve);
  const JacobianMode mode = jacobian_mode_from_string(opt.mode);
  std::optional<IvaTable> table;
  if (!opt.table_file.empty()) table = iva_table_from_json(read_json_file(opt.table_file));
  const Rational s = parse_rational(opt.s_sample);
  const json params{{"mode", opt.mode},
                    {"iva_table", table ? to_json(*table) : json()},
                    {"allow_partial", opt.allow_partial},
                    {"s", to_string(s)},
                    {"depth", opt.depth},
                    {"tol", opt.tol},
                    {"mode_experiment", opt.mode_experiment}};
  auto compute = [&]() -> json {
    const NonstableInput inp = make_nonstable_input(c, mode, table, opt.allow_partial);
    const NonstableZeta z = assemble_ns(inp);
    const OracleResult o = oracle_truncated(inp, z, s, opt.depth, opt.tol);
    json j = to_json(z);
    j["oracle"] = {{"numeric", true},
                   {"s", to_string(s)},
                   {"depth", opt.depth},
                   {"gap", o.gap},
                   {"tail_bound", o.tail_bound},
                   {"oracle_value", o.oracle_value},
                   {"closed_value", o.closed_value},
                   {"part_gaps", o.part_gaps}};
    json probe = json::array();
    for (const auto& p : fe_probe(z.zeta_ns, c.q)) {
      probe.push_back({{"t", p.t}, {"value", p.value}, {"reflected", p.reflected}});
    }
    j["fe_probe"] = {{"numeric", true}, {"asserted", false}, {"samples", probe}};
    j["a_invariant"] = to_json(a_invariant(inp.abelian));
    bool ok = o.gap < opt.tol;
    if (opt.mode_experiment) {
      const ModeExperiment ex = resolve_jacobian_mode(c, s, opt.depth, opt.tol, table);
      json consistent = json::array();
      for (auto m : ex.consistent) consistent.push_back(to_string(m));
      j["mode_experiment"] = {{"gap_paper", ex.gap_paper},
                              {"gap_squared", ex.gap_squared},
                              {"consistent", consistent},
                              {"unique", ex.unique()}};
    }
    j["ok"] = ok;
    return j;
  };
  const std::string payload = cached_payload(opt, to_json(c).dump(), "zeta nonstable", params, compute);
  const json j = json::parse(payload);
  emit(out, "zeta nonstable", j);
  return verdict_code(j);
}

int cmd_mass(const Options& opt, std::ostream& out) {
  const CurveData c = load_curve(opt.curve);
  const json params{{"r", opt.r}, {"d", opt.d}};
  auto compute = [&]() -> json {
    MassTable table(c);
    const Rational beta = table.beta(opt.r, opt.d);
    const auto fixed = table.fixed_det_mass(opt.r, opt.d);
    const Rational total = total_mass(c, opt.r, static_cast<int>(opt.d));
    const bool resum = table.hn_resum(opt.r, opt.d) == total;
    return json{{"r", opt.r},
                {"d", opt.d},
                {"beta", to_json(beta)},
                {"total_mass", to_json(total)},
                {"fixed_det_mass", {{"value", to_json(fixed.value)}, {"assumes_l_independence", fixed.assumes_l_independence}}},
                {"hn_resum_matches", resum},
                {"gate", "passed"},
                {"table", table.to_json()},
                {"ok", resum}};
  };
  const std::string payload = cached_payload(opt, to_json(c).dump(), "mass", params, compute);
  const json j = json::parse(payload);
  emit(out, "mass", j);
  return verdict_code(j);
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  json doc = read_json_file(opt.report_file);
  const json rep = doc.contains("result") ? doc.at("result") : doc;
  for (const char* key : {"q", "g", "r", "P", "Z"}) {
    if (!rep.contains(key)) throw InputError(std::string("report lacks '") + key + "'");
  }
  const long q = rep.at("q").get<long>();
  const int g = rep.at("g").get<int>();
  const int r = rep.at("r").get<int>();
  const Poly P = poly_from_json(rep.at("P"));
  const RationalFunction Z = ratfun_from_json(rep.at("Z"));

  json checks = json::array();
  bool ok = true;
  auto record = [&](const std::string& name, const std::string& status, const std::string& detail) {
    checks.push_back({{"name", name}, {"status", status}, {"detail", detail}});
    if (status == "fail") ok = false;
  };
  auto pass_fail = [](bool b) { return std::string(b ? "pass" : "fail"); };

  const RationalFunction scaled =
      Z * RationalFunction((Poly::constant(1) - Poly::monomial(Rational(1), r)) *
                           (Poly::constant(1) - Poly::monomial(rational_pow(Rational(q), r), r)));
  const bool consistent = scaled.is_polynomial() &&
                          scaled.numerator() * (1 / scaled.denominator().coeff(0)) == P;
  record("P_matches_Z", pass_fail(consistent), "Z (1-t^r)(1-(qt)^r) = P");
  record("degree", pass_fail(P.degree() == 2 * r * g),
         "deg P = " + std::to_string(P.degree()) + ", expected " + std::to_string(2 * r * g));
  const PairingResult pairing = pairing_check(P, q);
  record("pairing", pass_fail(pairing.holds), pairing.holds ? "constant " + to_string(pairing.constant) : "");
  const RationalFunction xi = Z * RationalFunction::monomial(Rational(1), -r * (g - 1));
  record("functional_equation", pass_fail(substitute_recip(xi, q) == xi), "xi(t) = xi(1/(qt))");
  bool residue_ok = false;
  try {
    residue_ok = residue_at(xi, Rational(1, q)) == -residue_at(xi, Rational(1)) / q;
  } catch (const DomainError&) {
    residue_ok = false;
  }
  record("residue_symmetry", pass_fail(residue_ok), "Res_{1/q} = -Res_1 / q");
  const int m_max = rep.contains("N") ? static_cast<int>(rep.at("N").size()) : 0;
  const auto N = power_sums_N(P, r, q, m_max);
  bool n_ok = true;
  for (int m = 0; m < m_max; ++m) n_ok = n_ok && rational_from_json(rep.at("N").at(m)) == N[static_cast<std::size_t>(m)];
  record("N_m", pass_fail(n_ok), std::to_string(m_max) + " power sums recomputed from P");
  record("exp_log", pass_fail(m_max == 0 || exp_log_identity(Z, N, m_max)), "Z = Z(0) exp(sum N_m t^m / m)");

  const RhReport rh = rh_probe(P, q, opt.tol);
  if (rh.vacuous) {
    record("riemann_hypothesis", "vacuous", "P is constant");
  } else if (r == 1) {
    record("riemann_hypothesis", pass_fail(rh.max_deviation < opt.tol),
           "max ||w| - sqrt(q)| = " + std::to_string(rh.max_deviation));
  } else {
    record("riemann_hypothesis", "report", "max ||w| - sqrt(q)| = " + std::to_string(rh.max_deviation));
  }

  err << std::left << std::setw(22) << "check" << std::setw(10) << "status" << "detail\n";
  for (const auto& c : checks) {
    err << std::setw(22) << c.at("name").get<std::string>() << std::setw(10) << c.at("status").get<std::string>()
        << c.at("detail").get<std::string>() << '\n';
  }
  emit(out, "verify", json{{"checks", checks}, {"ok", ok}});
  return ok ? kExitPass : kExitVerification;
}

void emit_error(std::ostream& out, const std::string& type, const std::string& message) {
  out << json{{"error", {{"type", type}, {"message", message}}}, {"tool_version", kToolVersion}}.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact zeta functions of curves over finite fields and of their vector bundles"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--no-cache", opt.no_cache, "ignore the result cache");

  auto* curve = app.add_subcommand("curve", "ingest a curve and report its Artin zeta function");
  add_curve_options(curve, opt.curve);
  curve->add_option("--tol", opt.tol);
  curve->add_option("--m-max", opt.m_max, "series terms for --csv-series");
  curve->add_option("--csv-series", opt.csv_series);
  curve->add_option("--csv-roots", opt.csv_roots);

  auto* zeta = app.add_subcommand("zeta", "assemble a zeta function");
  zeta->require_subcommand(1);
  auto* rank = zeta->add_subcommand("rank", "rank-r zeta function and its verification battery");
  add_curve_options(rank, opt.curve);
  rank->add_option("--r", opt.r);
  rank->add_option("--window", opt.window_file, "rank window JSON");
  rank->add_option("--m-max", opt.m_max);
  rank->add_option("--tol", opt.tol);
  rank->add_option("--roots-of-unity", opt.unity_orders, "orders a for the roots-of-unity product check");
  rank->add_option("--csv-series", opt.csv_series);
  rank->add_option("--csv-roots", opt.csv_roots);

  auto* restricted = zeta->add_subcommand("restricted", "level-L restricted zeta function");
  restricted->add_option("--window", opt.window_file, "restricted window JSON")->required();
  restricted->add_flag("--debug-skip-validation", opt.skip_validation);

  auto* nonstable = zeta->add_subcommand("nonstable", "rank-2 non-stable zeta function");
  add_curve_options(nonstable, opt.curve);
  nonstable->add_option("--mode", opt.mode, "jacobian factor mode: squared | paper");
  nonstable->add_option("--iva-table", opt.table_file);
  nonstable->add_flag("--allow-partial", opt.allow_partial);
  nonstable->add_flag("--mode-experiment", opt.mode_experiment);
  nonstable->add_option("--s", opt.s_sample, "oracle sample point, s > 1");
  nonstable->add_option("--depth", opt.depth);
  nonstable->add_option("--tol", opt.tol);

  auto* mass = app.add_subcommand("mass", "semistable mass from the Harder-Narasimhan recursion");
  add_curve_options(mass, opt.curve);
  mass->add_option("--r", opt.r);
  mass->add_option("--d", opt.d);

  auto* verify = app.add_subcommand("verify", "re-check a zeta rank report");
  verify->add_option("report", opt.report_file)->required();
  verify->add_option("--tol", opt.tol);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    emit_error(out, "InputError", e.what());
    return kExitInput;
  }

  try {
    if (!(opt.tol > 0)) throw InputError("--tol must be positive");
    if (opt.m_max < 0) throw InputError("--m-max must be >= 0");
    if (curve->parsed()) return cmd_curve(opt, out);
    if (rank->parsed()) return cmd_zeta_rank(opt, out);
    if (restricted->parsed()) return cmd_zeta_restricted(opt, out);
    if (nonstable->parsed()) return cmd_zeta_nonstable(opt, out);
    if (mass->parsed()) return cmd_mass(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    throw InputError("no command given");
  } catch (const GateFailure& e) {
    emit_error(out, "GateFailure", e.what());
    return kExitGate;
  } catch (const VerificationError& e) {
    emit_error(out, "VerificationError", e.what());
    return kExitVerification;
  } catch (const ConvergenceError& e) {
    emit_error(out, "ConvergenceError", e.what());
    return kExitVerification;
  } catch (const NonContractingSeries& e) {
    emit_error(out, "NonContractingSeries", e.what());
    return kExitInput;
  } catch (const DomainError& e) {
    emit_error(out, "DomainError", e.what());
    return kExitInput;
  } catch (const InputError& e) {
    emit_error(out, "InputError", e.what());
    return kExitInput;
  } catch (const json::exception& e) {
    emit_error(out, "InputError", e.what());
    return kExitInput;
  }
}

}  // namespace nazeta
