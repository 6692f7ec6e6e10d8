// hypostab: command-line front end.
//
// Exit codes: 0 ok, 1 parse error, 2 precondition failure (including a
// failing reproduce-paper row), 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypostab/decay.hpp"
#include "hypostab/error.hpp"
#include "hypostab/hypo.hpp"
#include "hypostab/io.hpp"
#include "hypostab/reproduce.hpp"
#include "hypostab/rk.hpp"
#include "hypostab/stab.hpp"

namespace {

using hypostab::Error;
using hypostab::ErrorKind;
using hypostab::io::json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
  long precision_bits = hypostab::kDefaultPrecisionBits;
  std::string format = "json";
  std::uint64_t seed = 20240101;
  std::size_t grid_points = 1024;
  std::string epsilon;
  std::string out;
  unsigned threads = 1;

  void validate() const {
    if (precision_bits < 64) throw Error(ErrorKind::InvalidArgument, "--precision-bits must be >= 64");
    if (grid_points < 2) throw Error(ErrorKind::InvalidArgument, "--grid must be >= 2");
  }
};

long default_precision() {
  if (const char* env = std::getenv("HYPOSTAB_PRECISION_BITS")) {
    try {
      return std::stol(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, std::string("HYPOSTAB_PRECISION_BITS is not an integer: ") + env);
    }
  }
  return hypostab::kDefaultPrecisionBits;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::Parse, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// Scalar top-level fields as key,value rows.
void emit_flat_csv(std::ostream& os, const json& j) {
  os << "key,value\n";
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() && v.contains("value")) {
      os << k << ',' << v["value"].get<std::string>() << '\n';
    } else if (!v.is_structured()) {
      os << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

void emit_text(std::ostream& os, const json& j, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object() && v.contains("value") && v.contains("precision_bits")) {
      os << indent << k << ": " << v["value"].get<std::string>() << '\n';
    } else if (v.is_object()) {
      os << indent << k << ":\n";
      emit_text(os, v, indent + "  ");
    } else {
      os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

void emit(const RunConfig& cfg, const json& j) {
  Output out(cfg.out);
  if (cfg.format == "json") {
    out.stream() << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    emit_flat_csv(out.stream(), j);
  } else {
    emit_text(out.stream(), j);
  }
}

hypostab::StabilityFn scheme_from(std::optional<unsigned> p, const std::string& tableau_path) {
  if (!tableau_path.empty()) return hypostab::stability_function(hypostab::io::load_tableau(tableau_path));
  if (!p) throw Error(ErrorKind::InvalidArgument, "give --p or --tableau");
  return hypostab::taylor_scheme(*p);
}

hypostab::Rational parse_epsilon(const std::string& text) {
  // Decimal text is converted exactly ("0.304" -> 38/125).
  const auto dot = text.find('.');
  if (dot == std::string::npos) return hypostab::parse_rational(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t scale = text.size() - dot - 1;
  hypostab::Rational q = hypostab::parse_rational(digits);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
  q /= hypostab::Rational(den);
  return q;
}

int run(int argc, char** argv) {
  CLI::App app{"Hypocoercivity indices and strong stability of explicit Runge-Kutta schemes"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.precision_bits = default_precision();
  app.add_option("--precision-bits", cfg.precision_bits, "Working precision in bits (env HYPOSTAB_PRECISION_BITS)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--grid", cfg.grid_points, "Grid points for norm sweeps");
  app.add_option("--epsilon", cfg.epsilon, "Step-size window (decimal or num/den)");
  app.add_option("--out", cfg.out, "Write output to FILE instead of stdout");
  app.add_option("--threads", cfg.threads, "Worker threads for sweeps");

  auto* hc = app.add_subcommand("hc-index", "Hypocoercivity report for a matrix file");
  std::string matrix_path;
  hc->add_option("matrix", matrix_path, "JSON matrix file")->required();

  auto* det = app.add_subcommand("det-leading", "Leading term of det(I - R(tL)* R(tL)) for the staircase counterexample");
  unsigned det_p = 0;
  det->add_option("--p", det_p, "Order p (a multiple of 4)")->required();

  auto* sweep = app.add_subcommand("sweep", "Spectral-norm sweep of R(tL) over [0, epsilon]");
  std::optional<unsigned> sweep_p;
  std::string sweep_tableau, sweep_matrix, sweep_csv;
  sweep->add_option("--p", sweep_p, "Order of the truncated-exponential scheme");
  sweep->add_option("--tableau", sweep_tableau, "Butcher tableau JSON instead of --p");
  sweep->add_option("--matrix", sweep_matrix, "Generator matrix (default: staircase of size 1 + p/2)");
  sweep->add_option("--csv", sweep_csv, "Write the (tau, norm, excess) curve to FILE");

  auto* decay = app.add_subcommand("decay-fit", "Fit the short-time decay exponent of ||e^{tL}||");
  std::string decay_matrix, decay_csv;
  std::optional<std::size_t> decay_staircase;
  hypostab::DecayFitOptions fit_opts;
  decay->add_option("--matrix", decay_matrix, "JSON matrix file");
  decay->add_option("--staircase", decay_staircase, "Use the staircase matrix of this size");
  decay->add_option("--log2-t-min", fit_opts.log2_t_min, "Smallest t as a power of two");
  decay->add_option("--log2-t-max", fit_opts.log2_t_max, "Largest t as a power of two");
  decay->add_option("--points", fit_opts.points, "Number of t samples");
  decay->add_option("--csv", decay_csv, "Write the (t, norm) samples to FILE");

  auto* verdict = app.add_subcommand("verdict", "Strong-stability verdict over a set of generators");
  std::optional<unsigned> verdict_p;
  std::string verdict_tableau;
  std::vector<std::string> verdict_matrices;
  bool verdict_family = false;
  unsigned verdict_rounds = 8;
  std::size_t verdict_grid = 64;
  verdict->add_option("--p", verdict_p, "Order of the truncated-exponential scheme");
  verdict->add_option("--tableau", verdict_tableau, "Butcher tableau JSON instead of --p");
  verdict->add_option("--matrix", verdict_matrices, "Test matrix file (repeatable)");
  verdict->add_flag("--family", verdict_family, "Use the bundled test family");
  verdict->add_option("--rounds", verdict_rounds, "Window halvings a violation must survive");
  verdict->add_option("--verdict-grid", verdict_grid, "Grid points per sweep");

  auto* lasm = app.add_subcommand("lasm-check", "Property run over random semi-dissipative matrices with small index");
  unsigned lasm_p = 0, lasm_m = 0;
  std::size_t lasm_samples = 20;
  bool lasm_staircase = false;
  lasm->add_option("--p", lasm_p, "Scheme order")->required();
  lasm->add_option("--m", lasm_m, "Largest hypocoercivity index")->required();
  lasm->add_option("--samples", lasm_samples, "Number of random matrices");
  lasm->add_flag("--with-staircase", lasm_staircase, "Also test staircase(m + 1)");

  auto* repro = app.add_subcommand("reproduce-paper", "Run the headline checks and print a pass/fail table");
  std::size_t repro_samples = 20;
  repro->add_option("--samples", repro_samples, "Random matrices per property row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  cfg.validate();
  const long bits = cfg.precision_bits;

  if (*hc) {
    emit(cfg, hypostab::io::to_json(hypostab::hc_report(hypostab::io::load_matrix(matrix_path))));
  } else if (*det) {
    const hypostab::Rational c = hypostab::closed_form_c(det_p);
    const auto d = hypostab::det_leading_term(hypostab::staircase(1 + det_p / 2), hypostab::taylor_scheme(det_p));
    json j = hypostab::io::to_json(d);
    j["p"] = det_p;
    j["N"] = 1 + det_p / 2;
    j["closed_form_c"] = hypostab::to_string(c);
    j["closed_form_equal"] = d.coeff == hypostab::Exact(c);
    emit(cfg, j);
  } else if (*sweep) {
    const auto r = scheme_from(sweep_p, sweep_tableau);
    hypostab::MatrixExact l;
    if (!sweep_matrix.empty()) {
      l = hypostab::io::load_matrix(sweep_matrix);
    } else {
      if (!sweep_p) throw Error(ErrorKind::InvalidArgument, "--matrix is required with --tableau");
      l = hypostab::staircase(1 + *sweep_p / 2);
    }
    if (cfg.epsilon.empty()) throw Error(ErrorKind::InvalidArgument, "sweep needs --epsilon");
    hypostab::SweepOptions so;
    so.precision_bits = bits;
    so.threads = cfg.threads;
    so.keep_curve = !sweep_csv.empty() || cfg.format == "csv";
    const auto res = hypostab::norm_sweep(l, r, hypostab::HpFloat(parse_epsilon(cfg.epsilon), bits),
                                          cfg.grid_points, so);
    if (!sweep_csv.empty()) {
      Output csv(sweep_csv);
      hypostab::io::write_curve_csv(csv.stream(), res.curve);
    }
    if (cfg.format == "csv") {
      Output out(cfg.out);
      hypostab::io::write_curve_csv(out.stream(), res.curve);
    } else if (cfg.format == "text") {
      Output out(cfg.out);
      out.stream() << "max_excess " << res.max_excess.to_scientific(3) << "\nargmax_tau "
                   << res.argmax_tau.to_scientific(6) << "\n";
    } else {
      emit(cfg, hypostab::io::to_json(res));
    }
  } else if (*decay) {
    hypostab::MatrixExact l;
    if (decay_staircase) {
      l = hypostab::staircase(*decay_staircase);
    } else if (!decay_matrix.empty()) {
      l = hypostab::io::load_matrix(decay_matrix);
    } else {
      throw Error(ErrorKind::InvalidArgument, "decay-fit needs --matrix or --staircase");
    }
    fit_opts.precision_bits = bits;
    const auto fit = hypostab::fit_short_time(l, fit_opts);
    if (!decay_csv.empty()) {
      Output csv(decay_csv);
      hypostab::io::write_decay_csv(csv.stream(), fit.samples);
    }
    if (cfg.format == "csv") {
      Output out(cfg.out);
      hypostab::io::write_decay_csv(out.stream(), fit.samples);
    } else {
      emit(cfg, hypostab::io::to_json(fit));
    }
  } else if (*verdict) {
    const auto r = scheme_from(verdict_p, verdict_tableau);
    std::vector<hypostab::MatrixExact> tests;
    for (const auto& path : verdict_matrices) tests.push_back(hypostab::io::load_matrix(path));
    if (verdict_family || (tests.empty() && !verdict_p)) {
      for (auto& m : hypostab::default_test_family()) tests.push_back(std::move(m));
    }
    if (tests.empty()) tests.push_back(hypostab::staircase(1 + *verdict_p / 2));
    hypostab::VerdictOptions vo;
    vo.precision_bits = bits;
    vo.threads = cfg.threads;
    vo.rounds = verdict_rounds;
    vo.grid_points = verdict_grid;
    if (!cfg.epsilon.empty()) vo.epsilon = parse_epsilon(cfg.epsilon);
    emit(cfg, hypostab::io::to_json(hypostab::strong_stability_verdict(r, tests, vo)));
  } else if (*lasm) {
    hypostab::LasmOptions lo;
    lo.precision_bits = bits;
    std::vector<hypostab::MatrixExact> extra;
    if (lasm_staircase) extra.push_back(hypostab::staircase(lasm_m + 1));
    emit(cfg, hypostab::io::to_json(hypostab::lasm_property_check(lasm_p, lasm_m, lasm_samples, cfg.seed, extra, lo)));
  } else if (*repro) {
    hypostab::ReproduceOptions ro;
    ro.precision_bits = bits;
    ro.seed = cfg.seed;
    ro.grid_points = cfg.grid_points;
    ro.threads = cfg.threads;
    ro.lasm_samples = repro_samples;
    Output out(cfg.out);
    std::ostream& os = out.stream();
    const bool as_json = cfg.format == "json";
    if (!as_json) {
      os << std::left << std::setw(34) << "check" << std::setw(7) << "result" << std::setw(44) << "expected"
         << "observed\n";
    }
    const auto rows = hypostab::reproduce_paper(ro, [&](const hypostab::ReproduceRow& row) {
      if (as_json) return;
      std::string result = row.pass ? "PASS" : "FAIL";
      std::string observed = row.observed;
      if (!row.reason.empty()) observed = "[" + row.reason + "] " + observed;
      os << std::left << std::setw(34) << row.id << std::setw(7) << result << std::setw(44) << row.expected
         << observed << '\n'
         << std::flush;
    });
    bool all = true;
    json j = json::array();
    for (const auto& row : rows) {
      all = all && row.pass;
      j.push_back({{"check", row.id},
                   {"pass", row.pass},
                   {"expected", row.expected},
                   {"observed", row.observed},
                   {"reason", row.reason},
                   {"seconds", row.seconds}});
    }
    if (as_json) os << j.dump(2) << '\n';
    return all ? kExitOk : kExitPrecondition;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " [" << hypostab::to_string(e.kind()) << "]\n";
    if (e.kind() == ErrorKind::Parse) return kExitParse;
    return e.is_precondition() ? kExitPrecondition : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
