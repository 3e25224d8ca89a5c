#include "mollify/cli.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mollify/arith.hpp"
#include "mollify/central_values.hpp"
#include "mollify/characters.hpp"
#include "mollify/empirical.hpp"
#include "mollify/errors.hpp"
#include "mollify/kernels.hpp"
#include "mollify/moments.hpp"
#include "mollify/optimizer.hpp"

namespace mollify::cli {

using ojson = nlohmann::ordered_json;

namespace {

std::string fmt(const Rational& r) { return format_rational(r); }

std::string num(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

ojson rationals(const std::vector<Rational>& v) {
  ojson a = ojson::array();
  for (const auto& r : v) a.push_back(fmt(r));
  return a;
}

std::vector<Rational> linear_up(const RationalPoly& p) {
  std::vector<Rational> out;
  for (int i = 1; i <= p.degree(); ++i) out.push_back(p.coeff(i));
  return out;
}

RationalPoly poly_from(const std::vector<std::string>& coeffs, const std::string& constant) {
  std::vector<Rational> c{parse_rational(constant)};
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return RationalPoly(c);
}

bool wants_explicit_spec(const RunConfig& c) { return c.P || c.Q || c.P_const != "0" || c.Q_const != "0"; }

std::vector<std::int64_t> moduli(const RunConfig& c, std::vector<std::int64_t> fallback) {
  return c.q.empty() ? fallback : c.q;
}

std::vector<std::pair<double, double>> shift_pairs(const RunConfig& c) {
  std::vector<double> a = c.alpha.empty() ? std::vector<double>{0.0} : c.alpha;
  std::vector<double> b = c.beta.empty() ? a : c.beta;
  if (a.size() != b.size()) throw ValidationError("--alpha and --beta must have the same number of values");
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i], b[i]);
  return out;
}

ojson exact_moments(const MollifierSpec& spec) {
  ojson j;
  const auto s1 = s1_main(spec);
  const auto lambda = lambda_exact(spec);
  j["s1_main"] = fmt(s1);
  j["lambda"] = fmt(lambda);
  j["proportion"] = fmt(proportion(spec));
  const auto c = corollary_terms(spec);
  const auto b = is_baseline(spec.P, spec.theta1);
  j["corollary_terms"] = {{"cor21", fmt(c.cor21)}, {"cor22", fmt(c.cor22)}, {"cor23", fmt(c.cor23)}};
  j["baseline"] = {{"first", fmt(b.first)}, {"second", fmt(b.second)}};
  const auto terms = lambda_terms(spec);
  j["lambda_terms"] = rationals({terms.begin(), terms.end()});
  j["decimal"] = {{"s1_main", to_double(s1)}, {"lambda", to_double(lambda)}, {"proportion", to_double(proportion(spec))}};
  return j;
}

ojson shifted_entries(const RunConfig& cfg, const MollifierSpec& spec, std::int64_t q, std::string& csv) {
  ShiftedOptions opt;
  opt.nodes = cfg.nodes;
  opt.nodes_high_dim = cfg.nodes_high;
  ojson rows = ojson::array();
  std::ostringstream out;
  out << "q,alpha,beta,I,J1,J2" << (cfg.check_fd ? ",J1_fd,J2_fd" : "") << '\n';
  const double log_y2 = to_double(spec.theta2) * std::log(static_cast<double>(q));
  for (auto [a, b] : shift_pairs(cfg)) {
    const double I = shifted_I(spec, a * log_y2);
    const auto j1 = shifted_J1(spec, q, a, b, opt);
    const auto j2 = shifted_J2(spec, q, a, b, opt);
    ojson row = {{"alpha", a}, {"beta", b}, {"I", I}, {"J1", j1.value}, {"J2", j2.value},
                 {"refinement_change", std::max(j1.refinement_change, j2.refinement_change)}};
    out << q << ',' << num(a) << ',' << num(b) << ',' << num(I) << ',' << num(j1.value) << ',' << num(j2.value);
    if (cfg.check_fd) {
      const double f1 = shifted_J1_fd(spec, q, a, b, 1e-3, opt).value;
      const double f2 = shifted_J2_fd(spec, q, a, b, 1e-3, opt).value;
      row["J1_fd"] = f1;
      row["J2_fd"] = f2;
      out << ',' << num(f1) << ',' << num(f2);
    }
    out << '\n';
    rows.push_back(row);
  }
  csv = out.str();
  return rows;
}

Report run_proportion(const RunConfig& cfg, const MollifierSpec& spec, ojson j) {
  j.update(exact_moments(spec));
  std::ostringstream csv;
  csv << "theta1,theta2,s1_main,lambda,proportion,proportion_decimal\n"
      << fmt(spec.theta1) << ',' << fmt(spec.theta2) << ',' << j["s1_main"].get<std::string>() << ','
      << j["lambda"].get<std::string>() << ',' << j["proportion"].get<std::string>() << ','
      << num(to_double(proportion(spec))) << '\n';
  (void)cfg;
  return {j, csv.str()};
}

Report run_optimize(const RunConfig& cfg, const MollifierSpec& spec, ojson j) {
  const auto model = build_forms(cfg.dp, cfg.dq, spec.theta1, spec.theta2);
  const auto r = maximize_proportion(model);
  ojson m;
  m["basis"] = model.basis;
  m["c"] = rationals(model.c);
  ojson M = ojson::array();
  for (const auto& row : model.M) M.push_back(rationals(row));
  m["M"] = M;
  m["positive_semidefinite"] = is_positive_semidefinite(model.M);
  j["model"] = m;
  j["P"] = rationals(linear_up(r.P));
  j["Q"] = rationals(linear_up(r.Q));
  j["proportion"] = fmt(r.proportion);
  j["lambda"] = fmt(r.lambda);
  j["s1_main"] = fmt(r.s1);
  j["singular"] = r.singular;
  j["note"] = r.note;
  j["decimal"] = {{"proportion", to_double(r.proportion)}};
  std::ostringstream csv;
  write_scan_csv(csv, {ScanRow{cfg.dp, cfg.dq, r}});
  return {j, csv.str()};
}

Report run_scan(const RunConfig& cfg, const MollifierSpec& spec, ojson j) {
  const auto rows = degree_scan(cfg.max_dp, cfg.max_dq, spec.theta1, spec.theta2);
  ojson a = ojson::array();
  for (const auto& r : rows)
    a.push_back({{"dP", r.dP},
                 {"dQ", r.dQ},
                 {"proportion", fmt(r.result.proportion)},
                 {"proportion_decimal", to_double(r.result.proportion)},
                 {"P", rationals(linear_up(r.result.P))},
                 {"Q", rationals(linear_up(r.result.Q))}});
  j["rows"] = a;
  std::ostringstream csv;
  write_scan_csv(csv, rows);
  return {j, csv.str()};
}

Report run_moments(const RunConfig& cfg, const MollifierSpec& spec, ojson j) {
  j.update(exact_moments(spec));
  const auto q = moduli(cfg, {10007}).front();
  std::string csv;
  j["q"] = q;
  j["shifted"] = shifted_entries(cfg, spec, q, csv);
  return {j, csv};
}

Report run_shifted(const RunConfig& cfg, const MollifierSpec& spec, ojson j) {
  const auto q = moduli(cfg, {10007}).front();
  std::string csv;
  j["q"] = q;
  const auto c = corollary_terms(spec);
  j["zero_shift"] = {{"I", fmt(c.cor21)}, {"J1", fmt(c.cor22)}, {"J2", fmt(c.cor23)}};
  j["shifted"] = shifted_entries(cfg, spec, q, csv);
  return {j, csv};
}

ojson census_json(const CensusRecord& r) {
  ojson j = {{"q", r.q},
             {"total", r.total_even_primitive},
             {"nonzero", r.nonzero_count},
             {"threshold", r.threshold},
             {"min_abs_L", r.min_abs_L}};
  if (r.has_moments) {
    j["s1_emp"] = r.s1_emp;
    j["s1_pred"] = r.s1_pred;
    j["s2_emp"] = r.s2_emp;
    j["s2_pred"] = r.s2_pred;
    j["dev1"] = r.dev1;
    j["dev2"] = r.dev2;
    if (r.p1_scale != 0) {
      j["s1_emp_normalized"] = r.s1_emp / r.p1_scale;
      j["s2_emp_normalized"] = r.s2_emp / (r.p1_scale * r.p1_scale);
    }
  }
  return j;
}

Report run_empirical(const RunConfig& cfg, const MollifierSpec& spec, ojson j, bool with_moments) {
  std::vector<CensusRecord> records;
  ojson a = ojson::array();
  for (auto q : moduli(cfg, {101})) {
    const auto table = enumerate_characters(q);
    const auto values = central_values_smoothed(table, 0.0);
    CensusRecord r;
    ojson extra;
    if (with_moments) {
      const auto mv = mollifier_values(table, spec);
      r = empirical_moments(mv, values);
      const auto census = nonvanishing_census(values, cfg.threshold);
      r.threshold = census.threshold;
      r.nonzero_count = census.nonzero_count;
      extra = {{"y1", mv.y1}, {"y2", mv.y2}};
    } else {
      r = nonvanishing_census(values, cfg.threshold);
    }
    auto row = census_json(r);
    if (!extra.is_null()) row.update(extra);
    a.push_back(row);
    records.push_back(r);
  }
  j["records"] = a;
  std::ostringstream csv;
  write_census_csv(csv, records);
  return {j, csv.str()};
}

Report run_kernels(const RunConfig& cfg, ojson j) {
  const double a = cfg.alpha.empty() ? 0.0 : cfg.alpha.front();
  const double b = cfg.beta.empty() ? a : cfg.beta.front();
  KernelSpec plus{KernelKind::WPlus, a, b};
  KernelSpec minus{KernelKind::WMinus, a, b};
  const MellinKernel v{KernelSpec{}}, wp{plus}, wm{minus};
  const std::vector<double> xs = cfg.x.empty() ? std::vector<double>{0.1, 0.5, 1.0, 2.0, 5.0} : cfg.x;
  ojson rows = ojson::array();
  std::ostringstream csv;
  csv << "x,V,W_plus,W_minus\n";
  for (double x : xs) {
    const double vv = v(x), p = wp(x), m = wm(x);
    rows.push_back({{"x", x}, {"V", vv}, {"W_plus", p}, {"W_minus", m}});
    csv << num(x) << ',' << num(vv) << ',' << num(p) << ',' << num(m) << '\n';
  }
  j["alpha"] = a;
  j["beta"] = b;
  j["values"] = rows;
  return {j, csv.str()};
}

Report run_oracles(const RunConfig& cfg, ojson j) {
  std::ostringstream csv;
  csv << "oracle,parameters,lhs,rhs\n";
  std::mt19937_64 rng(cfg.seed);

  ojson orth = ojson::array();
  for (auto q : moduli(cfg, {101})) {
    const auto table = enumerate_characters(q);
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    if (q <= 60) {
      for (std::int64_t m = 1; m < q; ++m)
        for (std::int64_t n = 1; n < q; ++n)
          if (gcd64(m * n, q) == 1) pairs.emplace_back(m, n);
    } else {
      std::uniform_int_distribution<std::int64_t> d(1, q - 1);
      while (pairs.size() < 200) {
        const auto m = d(rng), n = d(rng);
        if (gcd64(m * n, q) == 1) pairs.emplace_back(m, n);
      }
    }
    std::size_t mismatches = 0;
    for (auto [m, n] : pairs)
      if (Rational(even_primitive_pair_sum_exact(m, n, table)) != even_orthogonality_rhs(m, n, q)) ++mismatches;
    orth.push_back({{"q", q}, {"pairs", pairs.size()}, {"mismatches", mismatches}});
    csv << "orthogonality,q=" << q << ',' << mismatches << ",0\n";

    if (q <= 500) {
      const auto values = central_values_smoothed(table, 0.0);
      ojson l33 = ojson::array();
      for (auto [h, k] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 1}, {1, 2}, {3, 2}, {6, 1}}) {
        if (gcd64(h * k, q) != 1) continue;
        const auto [lhs, main] = oracle_lemma33(h, k, table, values);
        l33.push_back({{"h", h}, {"k", k}, {"lhs_re", lhs.real()}, {"lhs_im", lhs.imag()}, {"main", main}});
        csv << "twisted_first_moment,q=" << q << " h=" << h << " k=" << k << ',' << num(lhs.real()) << ',' << num(main) << '\n';
      }
      j["twisted_first_moment"][std::to_string(q)] = l33;
    }
  }
  j["orthogonality"] = orth;

  const RationalPoly one{1};
  ojson l36 = ojson::array();
  for (double ly : cfg.log_y.empty() ? std::vector<double>{8, 10, 12} : cfg.log_y)
    for (int k : {1, 2}) {
      const double y = std::exp(ly);
      const auto [lhs, rhs] = oracle_lemma36(k, 0.0, one, one, y, y);
      const double ratio = lhs / rhs;
      l36.push_back({{"k", k}, {"log_y", ly}, {"lhs", lhs}, {"rhs", rhs}, {"ratio", ratio},
                     {"within_band", std::abs(ratio - 1) <= 3 / ly}});
      csv << "divisor_sum_main_term,k=" << k << " log_y=" << num(ly) << ',' << num(lhs) << ',' << num(rhs) << '\n';
    }
  j["divisor_sum_main_term"] = l36;

  ojson l37 = ojson::array();
  const double ly = cfg.log_y.empty() ? 10.0 : cfg.log_y.front();
  for (int k = 1; k <= 4; ++k)
    for (double s : {0.0, -0.2, -1.0}) {
      const auto [lhs, bound] = oracle_lemma37(k, s, std::exp(ly));
      l37.push_back({{"k", k}, {"sigma", s}, {"log_y", ly}, {"lhs", lhs}, {"bound", bound}});
      csv << "divisor_sum_bound,k=" << k << " sigma=" << num(s) << ',' << num(lhs) << ',' << num(bound) << '\n';
    }
  j["divisor_sum_bound"] = l37;
  return {j, csv.str()};
}

void flatten(const ojson& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

ojson config_to_json(const RunConfig& c) {
  ojson j;
  j["command"] = c.command;
  j["preset"] = c.preset;
  j["theta1"] = c.theta1;
  j["theta2"] = c.theta2;
  j["P"] = c.P ? ojson(*c.P) : ojson(nullptr);
  j["Q"] = c.Q ? ojson(*c.Q) : ojson(nullptr);
  j["P_const"] = c.P_const;
  j["Q_const"] = c.Q_const;
  j["q"] = c.q;
  j["format"] = c.format;
  j["out"] = c.out;
  j["dp"] = c.dp;
  j["dq"] = c.dq;
  j["max_dp"] = c.max_dp;
  j["max_dq"] = c.max_dq;
  j["alpha"] = c.alpha;
  j["beta"] = c.beta;
  j["x"] = c.x;
  j["log_y"] = c.log_y;
  j["nodes"] = c.nodes;
  j["nodes_high"] = c.nodes_high;
  j["check_fd"] = c.check_fd;
  j["threshold"] = c.threshold;
  j["seed"] = c.seed;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.preset = j.at("preset").get<std::string>();
  c.theta1 = j.at("theta1").get<std::string>();
  c.theta2 = j.at("theta2").get<std::string>();
  if (!j.at("P").is_null()) c.P = j.at("P").get<std::vector<std::string>>();
  if (!j.at("Q").is_null()) c.Q = j.at("Q").get<std::vector<std::string>>();
  c.P_const = j.at("P_const").get<std::string>();
  c.Q_const = j.at("Q_const").get<std::string>();
  c.q = j.at("q").get<std::vector<std::int64_t>>();
  c.format = j.at("format").get<std::string>();
  c.out = j.at("out").get<std::string>();
  c.dp = j.at("dp").get<int>();
  c.dq = j.at("dq").get<int>();
  c.max_dp = j.at("max_dp").get<int>();
  c.max_dq = j.at("max_dq").get<int>();
  c.alpha = j.at("alpha").get<std::vector<double>>();
  c.beta = j.at("beta").get<std::vector<double>>();
  c.x = j.at("x").get<std::vector<double>>();
  c.log_y = j.at("log_y").get<std::vector<double>>();
  c.nodes = j.at("nodes").get<int>();
  c.nodes_high = j.at("nodes_high").get<int>();
  c.check_fd = j.at("check_fd").get<bool>();
  c.threshold = j.at("threshold").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

MollifierSpec validate_spec(const RunConfig& c, std::vector<std::string>& warnings) {
  MollifierSpec spec;
  if (c.preset == "paper") {
    spec = paper_preset();
  } else if (c.preset == "is-baseline") {
    spec = is_baseline_preset();
  } else if (c.preset.empty()) {
    if (wants_explicit_spec(c)) {
      spec.theta1 = Rational(1, 2);
      spec.theta2 = Rational(1, 2);
    } else {
      spec = paper_preset();
    }
  } else {
    throw ValidationError("unknown preset '" + c.preset + "' (expected paper or is-baseline)");
  }
  if (!c.theta1.empty()) spec.theta1 = parse_rational(c.theta1);
  if (!c.theta2.empty()) {
    spec.theta2 = parse_rational(c.theta2);
  } else if (!c.theta1.empty() && c.preset.empty()) {
    spec.theta2 = std::min(spec.theta1, spec.theta2);
  }
  if (c.P || c.P_const != "0") spec.P = poly_from(c.P.value_or(std::vector<std::string>{}), c.P_const);
  if (c.Q || c.Q_const != "0") spec.Q = poly_from(c.Q.value_or(std::vector<std::string>{}), c.Q_const);
  require_valid(spec);
  if (spec.outside_second_moment_range())
    warnings.emplace_back("theta2 < theta1 < 1/2 does not hold; the second-moment main term is outside its proven range");
  return spec;
}

ojson spec_to_json(const MollifierSpec& spec) {
  return {{"theta1", fmt(spec.theta1)},
          {"theta2", fmt(spec.theta2)},
          {"P", rationals(linear_up(spec.P))},
          {"Q", rationals(linear_up(spec.Q))}};
}

std::string effective_format(const RunConfig& c) {
  if (!c.format.empty()) return c.format;
  return (c.command == "census" || c.command == "scan") ? "csv" : "json";
}

Report run(const RunConfig& cfg) {
  std::vector<std::string> warnings;
  ojson j;
  j["command"] = cfg.command;
  j["config"] = config_to_json(cfg);
  const auto spec = validate_spec(cfg, warnings);
  const bool uses_spec = cfg.command != "census" && cfg.command != "kernels" && cfg.command != "oracles";
  if (cfg.command == "optimize" || cfg.command == "scan") {
    j["spec"] = {{"theta1", fmt(spec.theta1)}, {"theta2", fmt(spec.theta2)}};
  } else if (uses_spec) {
    j["spec"] = spec_to_json(spec);
  }
  if (!uses_spec) warnings.clear();
  j["warnings"] = warnings;

  if (cfg.command == "proportion") return run_proportion(cfg, spec, j);
  if (cfg.command == "optimize") return run_optimize(cfg, spec, j);
  if (cfg.command == "scan") return run_scan(cfg, spec, j);
  if (cfg.command == "moments") return run_moments(cfg, spec, j);
  if (cfg.command == "shifted") return run_shifted(cfg, spec, j);
  if (cfg.command == "empirical") return run_empirical(cfg, spec, j, true);
  if (cfg.command == "census") return run_empirical(cfg, spec, j, false);
  if (cfg.command == "kernels") return run_kernels(cfg, j);
  if (cfg.command == "oracles") return run_oracles(cfg, j);
  throw ValidationError("unknown command '" + cfg.command + "'");
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.json.dump(2) + "\n";
  if (format == "csv") return report.csv;
  if (format == "text") {
    std::ostringstream out;
    flatten(report.json, "", out);
    return out.str();
  }
  throw ValidationError("unknown format '" + format + "' (expected json, csv or text)");
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto format = effective_format(config);
    if (format != "json" && format != "csv" && format != "text") throw ValidationError("unknown format '" + format + "'");
    const auto report = run(config);
    const auto text = render(report, format);
    for (const auto& w : report.json["warnings"]) err << "warning: " << w.get<std::string>() << '\n';
    if (config.out.empty()) {
      out << text;
    } else {
      std::ofstream f(config.out, std::ios::binary);
      if (!f) throw ValidationError("cannot write " + config.out);
      f << text;
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const AccuracyError& e) {
    err << "accuracy: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Two-piece mollifier toolkit for Dirichlet L-functions at the central point", "mollify"};
  app.add_option("command", c.command, "proportion | optimize | scan | moments | shifted | empirical | census | kernels | oracles")
      ->required()
      ->check(CLI::IsMember(kCommands));
  auto* preset = app.add_option("--preset", c.preset, "paper or is-baseline")->check(CLI::IsMember({"paper", "is-baseline"}));
  app.add_option("--theta1", c.theta1, "length exponent of the first piece (rational)");
  app.add_option("--theta2", c.theta2, "length exponent of the second piece (rational)");
  std::vector<std::string> P, Q;
  auto* p_opt = app.add_option("--P", P, "coefficients of x, x^2, ... in P")->delimiter(',')->expected(0, -1);
  auto* q_opt = app.add_option("--Q", Q, "coefficients of x, x^2, ... in Q")->delimiter(',')->expected(0, -1);
  auto* pc = app.add_option("--P-const", c.P_const, "constant term of P (must be 0)");
  auto* qc = app.add_option("--Q-const", c.Q_const, "constant term of Q (must be 0)");
  preset->excludes(p_opt)->excludes(q_opt)->excludes(pc)->excludes(qc);
  app.add_option("--q", c.q, "modulus or comma-separated moduli")->delimiter(',');
  app.add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", c.out, "write the report here instead of stdout");
  app.add_option("--dp", c.dp, "degree of P for optimize");
  app.add_option("--dq", c.dq, "degree of Q for optimize");
  app.add_option("--max-dp", c.max_dp, "largest degree of P for scan");
  app.add_option("--max-dq", c.max_dq, "largest degree of Q for scan");
  app.add_option("--alpha", c.alpha, "shift(s) alpha")->delimiter(',');
  app.add_option("--beta", c.beta, "shift(s) beta; defaults to alpha")->delimiter(',');
  app.add_option("--x", c.x, "kernel argument(s)")->delimiter(',');
  app.add_option("--log-y", c.log_y, "log of the divisor-sum length(s) for oracles")->delimiter(',');
  app.add_option("--nodes", c.nodes, "Gauss-Legendre nodes per axis, low-dimensional integrals");
  app.add_option("--nodes-high", c.nodes_high, "Gauss-Legendre nodes per axis, 3D and 4D integrals");
  app.add_flag("--check-fd", c.check_fd, "also evaluate shifted moments by finite differences");
  app.add_option("--threshold", c.threshold, "non-vanishing threshold on |L(1/2, chi)|");
  app.add_option("--seed", c.seed, "seed for sampled checks");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitValidation;
  }
  auto clean = [](std::vector<std::string> v) {
    std::erase_if(v, [](const std::string& s) { return s.empty(); });
    return v;
  };
  if (p_opt->count() > 0) c.P = clean(P);
  if (q_opt->count() > 0) c.Q = clean(Q);
  return dispatch(c, out, err);
}

}  // namespace mollify::cli
