#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bautin/example_jl.hpp"
#include "bautin/lyapunov.hpp"
#include "bautin/random_field.hpp"
#include "bautin/structure.hpp"
#include "bautin/vector_field.hpp"

namespace bautin::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "bautin-lab/1";

struct RunConfig {
  std::string command;
  std::string field_path;
  int J = 4;
  std::string mode = "exact";
  int precision = BigReal::kDefaultDigits;
  std::string output = "table";
  std::uint64_t seed = 1;
  bool show_v = false;
  // example-jl / center-check on the cubic family
  int root = 0;
  std::string b4 = "-1";
  std::string branch = "negative";
  bool skip_scaling = false;
  int jl_root = 0;
  // random-field
  std::string kind = "homogeneous";
  int degree = 3;
};

std::string value_text(const Rational& r, int /*digits*/) { return r.str(); }
std::string value_text(const BigReal& r, int digits) { return r.str(digits); }

template <class S>
std::string poly_text(const HomogPoly<S>& p, int digits) {
  std::string out;
  const int k = p.degree();
  for (int a = 0; a <= k; ++a) {
    const S& c = p[static_cast<std::size_t>(a)];
    if (is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    out += "(" + value_text(c, digits) + ")";
    const int x = k - a;
    if (x > 0) out += x == 1 ? "*x" : "*x^" + std::to_string(x);
    if (a > 0) out += a == 1 ? "*y" : "*y^" + std::to_string(a);
  }
  return out.empty() ? "0" : out;
}

void add_field_input(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("input", cfg.field_path, "vector-field file");
  sub->add_option("-n,--field", cfg.field_path, "vector-field file (alternative to the positional argument)");
}

void add_output(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--output", cfg.output, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
}

void add_mode(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--mode", cfg.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  sub->add_option("--precision", cfg.precision, "decimal digits in float mode")
      ->check(CLI::Range(BigReal::kMinDigits, 100000));
}

void require_field(const RunConfig& cfg) {
  if (cfg.field_path.empty()) throw UsageError("no vector-field file given");
}

template <class S>
int emit_lyapunov(const RunConfig& cfg, const LyapunovSeries<S>& s, std::ostream& out) {
  const int digits = cfg.mode == "float" ? cfg.precision : 0;
  if (cfg.output == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "lyapunov";
    j["mode"] = cfg.mode;
    if (digits) j["precision"] = digits;
    j["n"] = s.source.degree();
    j["J"] = s.max_index;
    j["L"] = json::array();
    for (int i = 1; i <= s.max_index; ++i)
      j["L"].push_back({{"index", i}, {"value", value_text(s.lyapunov_constant(i), digits)}});
    if (cfg.show_v) {
      j["V"] = json::array();
      for (const auto& [k, v] : s.V) {
        json coeffs = json::array();
        for (const auto& c : v.coeffs()) coeffs.push_back(value_text(c, digits));
        j["V"].push_back({{"degree", k}, {"coefficients", coeffs}});
      }
    }
    out << j.dump(2) << "\n";
  } else if (cfg.output == "csv") {
    out << "index,value\n";
    for (int i = 1; i <= s.max_index; ++i) out << i << "," << value_text(s.lyapunov_constant(i), digits) << "\n";
  } else {
    for (int i = 1; i <= s.max_index; ++i)
      out << "L_" << i << " = " << value_text(s.lyapunov_constant(i), digits) << "\n";
    if (cfg.show_v)
      for (const auto& [k, v] : s.V) out << "V_" << k << " = " << poly_text(v, digits) << "\n";
  }
  return kOk;
}

int cmd_lyapunov(const RunConfig& cfg, std::ostream& out) {
  require_field(cfg);
  if (cfg.J < 1) throw UsageError("-J must be at least 1");
  if (cfg.mode == "float")
    return emit_lyapunov(cfg, compute_series(read_vector_field_file_real(cfg.field_path, cfg.precision), cfg.J), out);
  return emit_lyapunov(cfg, compute_series(read_vector_field_file(cfg.field_path), cfg.J), out);
}

int cmd_gaps(const RunConfig& cfg, std::ostream& out, bool J_given) {
  require_field(cfg);
  const auto vf = read_vector_field_file(cfg.field_path);
  if (!vf.is_homogeneous()) throw UsageError("gaps: the field is not homogeneous");
  const int n = vf.degree();
  const int J = J_given ? cfg.J : 2 * (n + 2);
  if (J < 1) throw UsageError("-J must be at least 1");
  const auto series = compute_series(vf, J);
  const auto rep = verify_gaps(series);
  const auto& prof = rep.profile;

  if (cfg.output == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "gaps";
    j["n"] = n;
    j["J"] = J;
    j["predicted_L_indices"] = prof.l_indices(J);
    j["predicted_first_nonzero"] = prof.first_nonzero();
    j["observed_nonzero_L"] = rep.nonzero_L;
    j["observed_first_nonzero"] = rep.first_nonzero_observed ? json(*rep.first_nonzero_observed) : json(nullptr);
    j["predicted_V_degrees"] = prof.v_degrees(series.max_degree());
    j["observed_nonzero_V"] = rep.nonzero_V;
    j["all_zero"] = rep.all_zero;
    j["violations"] = rep.violations;
    j["match"] = rep.pass();
    out << j.dump(2) << "\n";
  } else if (cfg.output == "csv") {
    out << "index,predicted,observed\n";
    for (int i = 1; i <= J; ++i)
      out << i << "," << (prof.l_index_allowed(i) ? "allowed" : "zero") << ","
          << (series.lyapunov_constant(i).is_zero() ? "zero" : "nonzero") << "\n";
  } else {
    out << "n = " << n << ", L_1..L_" << J << "\n";
    out << "predicted first nonzero: L_" << prof.first_nonzero() << "\n";
    out << "observed first nonzero:  "
        << (rep.first_nonzero_observed ? "L_" + std::to_string(*rep.first_nonzero_observed) : std::string("none"))
        << "\n";
    out << "  j  predicted  observed\n";
    for (int i = 1; i <= J; ++i) {
      std::ostringstream line;
      line << (i < 10 ? "  " : " ") << i << "  " << (prof.l_index_allowed(i) ? "allowed  " : "zero     ") << "  "
           << (series.lyapunov_constant(i).is_zero() ? "zero" : "nonzero");
      out << line.str() << "\n";
    }
    if (rep.all_zero) out << "all zero (partial center condition)\n";
    for (const auto& v : rep.violations) out << "violation: " << v << "\n";
    out << (rep.pass() ? "match" : "MISMATCH") << "\n";
  }
  return rep.pass() ? kOk : kGapMismatch;
}

jl::Branch parse_branch(const std::string& s) {
  if (s == "negative") return jl::Branch::Negative;
  if (s == "positive") return jl::Branch::Positive;
  throw UsageError("--branch must be negative or positive");
}

Rational parse_b4(const std::string& text) {
  const Rational b4 = Rational::parse(text);
  if (b4.sign() >= 0) throw UsageError("b4 must be negative");
  return b4;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Center: return kOk;
    case Verdict::WeakFocus: return kWeakFocus;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int cmd_center_check(const RunConfig& cfg, std::ostream& out) {
  CenterCertificate cert;
  if (cfg.jl_root != 0) {
    if (cfg.jl_root != 1 && cfg.jl_root != 2) throw UsageError("--jl-root must be 1 or 2");
    const Rational b4 = parse_b4(cfg.b4);
    const jl::Branch branch = parse_branch(cfg.branch);
    const int root = cfg.jl_root;
    auto make = [&](int d) {
      const auto roots = jl::find_sigma_roots(std::max(d, 40));
      const auto& sigma = root == 1 ? roots.first.value : roots.second.value;
      return jl::jl_vector_field(jl::substitution_chain(BigReal(b4, d), sigma, branch));
    };
    cert = center_check_real(make, std::max(cfg.precision, 40));
  } else {
    require_field(cfg);
    if (cfg.mode == "float") {
      const std::string path = cfg.field_path;
      cert = center_check_real([&](int d) { return read_vector_field_file_real(path, d); }, cfg.precision);
    } else {
      cert = center_check(read_vector_field_file(cfg.field_path));
    }
  }

  if (cfg.output == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "center-check";
    j["verdict"] = verdict_name(cert.verdict);
    if (!cert.reason.empty()) j["reason"] = cert.reason;
    j["center_number_bound"] = cert.bound;
    j["weak_focus_order"] = cert.weak_focus_order ? json(*cert.weak_focus_order) : json(nullptr);
    j["weak_focus_index"] = cert.weak_focus_index ? json(*cert.weak_focus_index) : json(nullptr);
    j["constants"] = json::array();
    for (std::size_t i = 0; i < cert.indices.size(); ++i)
      j["constants"].push_back({{"index", cert.indices[i]}, {"value", cert.constants[i]}});
    j["det_P"] = cert.det ? json(*cert.det) : json(nullptr);
    j["generic"] = cert.generic;
    j["bound_attained"] = cert.equality_attained;
    j["budget"] = cert.budget;
    j["precision"] = cert.digits;
    out << j.dump(2) << "\n";
  } else if (cfg.output == "csv") {
    out << "key,value\n";
    out << "verdict," << verdict_name(cert.verdict) << "\n";
    out << "C," << cert.bound << "\n";
    out << "W," << (cert.weak_focus_order ? std::to_string(*cert.weak_focus_order) : "") << "\n";
    out << "det_P," << cert.det.value_or("") << "\n";
    for (std::size_t i = 0; i < cert.indices.size(); ++i)
      out << "L_" << cert.indices[i] << "," << cert.constants[i] << "\n";
  } else {
    out << "verdict: " << verdict_name(cert.verdict);
    if (cert.weak_focus_order) out << " (W = " << *cert.weak_focus_order << ")";
    out << "\n";
    if (!cert.reason.empty()) out << "reason: " << cert.reason << "\n";
    out << "center-number bound C = " << cert.bound << (cert.homogeneous ? " (homogeneous)" : "") << "\n";
    for (std::size_t i = 0; i < cert.indices.size(); ++i)
      out << "  L_" << cert.indices[i] << " = " << cert.constants[i] << "\n";
    if (cert.det) out << "det P = " << *cert.det << (cert.generic ? " (generic)" : " (degenerate)") << "\n";
    if (cert.weak_focus_order) {
      out << "M <= W = " << *cert.weak_focus_order << " <= C = " << cert.bound << "\n";
      if (cert.equality_attained) out << "W = C with det P != 0: bound attained\n";
    }
  }
  return verdict_exit(cert.verdict);
}

json example_json(const jl::ExampleReport& r, int digits) {
  const int d = std::min(digits, 40);
  json j;
  j["root"] = r.root;
  j["precision"] = r.digits;
  j["branch"] = r.branch == jl::Branch::Negative ? "negative" : "positive";
  j["b4"] = r.b4.str();
  j["sigma"] = r.sigma.value.str(digits);
  j["sigma_bracket"] = {r.sigma.bracket.first.str(), r.sigma.bracket.second.str()};
  json res = json::array();
  for (double x : r.sigma.newton_residuals) {
    std::ostringstream s;
    s.precision(6);
    s << x;
    res.push_back(s.str());
  }
  j["newton_log10_residuals"] = res;
  const auto& p = r.params;
  j["params"] = {{"a1", p.a1.str(d)}, {"b1", p.b1.str(d)}, {"a3", p.a3.str(d)}, {"a5", p.a5.str(d)},
                 {"a7", p.a7.str(d)}, {"a8", p.a8.str(d)}, {"a9", p.a9.str(d)}, {"b2", p.b2.str(d)},
                 {"b4", p.b4.str(d)}, {"b5", p.b5.str(d)}, {"b6", p.b6.str(d)}, {"b8", p.b8.str(d)}};
  j["L"] = json::array();
  for (std::size_t i = 0; i < r.L.size(); ++i) j["L"].push_back({{"index", i + 1}, {"value", r.L[i].str(d)}});
  j["L8_over_b4_8"] = r.L8_scaled.str(d);
  json P;
  P["rows"] = json::array();
  for (std::size_t i = 0; i < r.P.size(); ++i) P["rows"].push_back(r.P.row_label(i));
  P["columns"] = json::array();
  for (std::size_t i = 0; i < r.P.size(); ++i) P["columns"].push_back(r.P.column_label(i));
  P["entries"] = json::array();
  P["display"] = json::array();
  for (std::size_t a = 0; a < r.P.size(); ++a) {
    json row = json::array();
    json drow = json::array();
    for (std::size_t b = 0; b < r.P.size(); ++b) {
      row.push_back(r.P.matrix(a, b).str(d));
      drow.push_back(r.P_display(a, b).str(d));
    }
    P["entries"].push_back(row);
    P["display"].push_back(drow);
  }
  j["P"] = P;
  j["det_P"] = r.det.value.str(d);
  j["det_P_over_b4_30"] = r.det_scaled.str(d);
  j["hadamard_bound"] = r.det.hadamard.str(6);
  auto num = [](double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
  };
  j["pivot_growth"] = num(r.det.growth);
  if (r.L8_exponent) j["L8_b4_exponent"] = num(*r.L8_exponent);
  if (r.det_exponent) j["det_b4_exponent"] = num(*r.det_exponent);
  if (r.display_drift) j["display_drift"] = num(*r.display_drift);
  return j;
}

void example_table(const jl::ExampleReport& r, std::ostream& out) {
  const int d = std::min(r.digits, 40);
  out << "root sigma_" << r.root << " = " << r.sigma.value.str(d) << "   (b4 = " << r.b4.str() << ", "
      << r.digits << " digits, b6 branch " << (r.branch == jl::Branch::Negative ? "negative" : "positive")
      << ")\n";
  for (std::size_t i = 0; i < r.L.size(); ++i) out << "  L_" << i + 1 << " = " << r.L[i].str(12) << "\n";
  out << "  L_8 / b4^8 = " << r.L8_scaled.str(d) << "\n";
  out << "  det P = " << r.det.value.str(15) << "   det P / b4^30 = " << r.det_scaled.str(15) << "\n";
  if (r.L8_exponent) out << "  fitted b4 exponents: L_8 " << *r.L8_exponent << ", det P " << *r.det_exponent << "\n";
  out << "  P (b2/b4 column powers removed), columns";
  for (std::size_t c = 0; c < r.P.size(); ++c) out << " " << r.P.column_label(c);
  out << "\n";
  for (std::size_t a = 0; a < r.P.size(); ++a) {
    out << "   ";
    for (std::size_t b = 0; b < r.P.size(); ++b) out << " " << r.P_display(a, b).str(7);
    out << "\n";
  }
}

int cmd_example_jl(const RunConfig& cfg, std::ostream& out) {
  const Rational b4 = parse_b4(cfg.b4);
  const jl::Branch branch = parse_branch(cfg.branch);
  if (cfg.precision < 40) throw UsageError("example-jl needs --precision >= 40");
  std::vector<int> roots;
  if (cfg.root == 0) {
    roots = {1, 2};
  } else if (cfg.root == 1 || cfg.root == 2) {
    roots = {cfg.root};
  } else {
    throw UsageError("--root must be 1 or 2");
  }
  std::vector<jl::ExampleReport> reports;
  for (int root : roots) {
    auto rep = jl::reproduce_example(root, b4, cfg.precision, branch, !cfg.skip_scaling);
    const auto check = jl::reproduce_example(root, b4, 2 * cfg.precision, branch, false);
    jl::check_precision(rep, check);
    reports.push_back(std::move(rep));
  }
  if (cfg.output == "json") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "example-jl";
    j["precision_check"] = "reproduced at " + std::to_string(2 * cfg.precision) + " digits";
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(example_json(r, cfg.precision));
    out << j.dump(2) << "\n";
  } else if (cfg.output == "csv") {
    out << "root,quantity,value\n";
    for (const auto& r : reports) {
      out << r.root << ",sigma," << r.sigma.value.str(40) << "\n";
      for (std::size_t i = 0; i < r.L.size(); ++i) out << r.root << ",L_" << i + 1 << "," << r.L[i].str(40) << "\n";
      out << r.root << ",L_8/b4^8," << r.L8_scaled.str(40) << "\n";
      out << r.root << ",det P/b4^30," << r.det_scaled.str(40) << "\n";
    }
  } else {
    for (const auto& r : reports) example_table(r, out);
    out << "all quantities reproduced at " << 2 * cfg.precision << " digits\n";
  }
  return kOk;
}

int cmd_random_field(const RunConfig& cfg, std::ostream& out) {
  if (cfg.degree < 2) throw UsageError("--degree must be at least 2");
  gen::Rng rng(cfg.seed);
  VectorField<Rational> vf(cfg.degree, Rational(0));
  if (cfg.kind == "homogeneous") {
    vf = gen::random_homogeneous_field(cfg.degree, rng);
  } else if (cfg.kind == "general") {
    vf = gen::random_field(cfg.degree, rng);
  } else if (cfg.kind == "divergence-free") {
    vf = gen::random_divergence_free(cfg.degree, false, rng);
  } else if (cfg.kind == "reversible") {
    vf = gen::random_reversible(cfg.degree, false, rng);
  } else if (cfg.kind == "rotational") {
    vf = gen::random_rotational(cfg.degree, rng);
  } else {
    throw UsageError("unknown kind " + cfg.kind);
  }
  out << "# kind " << cfg.kind << ", seed " << cfg.seed << "\n" << serialize_vector_field(vf);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Lyapunov constants, gap structure and center certificates of planar polynomial fields",
               "bautin-lab"};
  app.require_subcommand(1);

  auto* lyap = app.add_subcommand("lyapunov", "print L_1..L_J");
  add_field_input(lyap, cfg);
  lyap->add_option("-J,--max-index", cfg.J, "largest Lyapunov index");
  add_mode(lyap, cfg);
  add_output(lyap, cfg);
  lyap->add_flag("--show-v", cfg.show_v, "also print the Lyapunov-function terms");

  auto* gaps = app.add_subcommand("gaps", "predicted vs observed sparsity of a homogeneous field");
  add_field_input(gaps, cfg);
  auto* gaps_J = gaps->add_option("-J,--max-index", cfg.J, "largest Lyapunov index (default 2(n+2))");
  add_output(gaps, cfg);

  auto* center = app.add_subcommand("center-check", "center / weak-focus certificate");
  add_field_input(center, cfg);
  add_mode(center, cfg);
  add_output(center, cfg);
  center->add_option("--jl-root", cfg.jl_root, "use the resolved cubic family at root 1 or 2 instead of a file");
  center->add_option("--b4", cfg.b4, "b4 for --jl-root (negative rational)");
  center->add_option("--branch", cfg.branch, "sign of b6 for --jl-root")
      ->check(CLI::IsMember({"negative", "positive"}));

  auto* example = app.add_subcommand("example-jl", "reproduce the eight-cycle cubic family");
  example->add_option("--root", cfg.root, "1 or 2 (default: both)");
  example->add_option("--b4", cfg.b4, "negative rational");
  example->add_option("--precision", cfg.precision, "decimal digits (>= 40)");
  example->add_option("--branch", cfg.branch, "sign of b6")->check(CLI::IsMember({"negative", "positive"}));
  example->add_flag("--skip-scaling", cfg.skip_scaling, "do not refit the b4 exponents");
  add_output(example, cfg);

  auto* random = app.add_subcommand("random-field", "print a seeded random field");
  random->add_option("--kind", cfg.kind, "homogeneous, general, divergence-free, reversible or rotational")
      ->check(CLI::IsMember({"homogeneous", "general", "divergence-free", "reversible", "rotational"}));
  random->add_option("-d,--degree", cfg.degree, "degree n");
  random->add_option("--seed", cfg.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (lyap->parsed()) return cmd_lyapunov(cfg, out);
    if (gaps->parsed()) return cmd_gaps(cfg, out, gaps_J->count() > 0);
    if (center->parsed()) return cmd_center_check(cfg, out);
    if (example->parsed()) return cmd_example_jl(cfg, out);
    if (random->parsed()) return cmd_random_field(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PrecisionError& e) {
    err << "precision failure: " << e.what() << "\n";
    return kSolverFailure;
  } catch (const InternalError& e) {
    err << "internal solver error: " << e.what() << "\n";
    return kSolverFailure;
  }
  err << "error: no command\n";
  return kBadInput;
}

}  // namespace bautin::cli
