#include "hypostab/io.hpp"

#include <fstream>
#include <ostream>

#include "hypostab/error.hpp"

namespace hypostab::io {
namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected a rational string or integer, got " + j.dump());
}

Exact entry_from_json(const json& j) {
  if (j.is_object()) {
    if (!j.contains("re")) throw Error(ErrorKind::Parse, "complex entry needs a \"re\" field");
    return {rational_from_json(j.at("re")), j.contains("im") ? rational_from_json(j.at("im")) : Rational(0)};
  }
  return Exact(rational_from_json(j));
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

}  // namespace

MatrixExact matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::Parse, "matrix must be a non-empty 2-D array");
  std::vector<std::vector<Exact>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::Parse, "matrix rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& e : row) out.push_back(entry_from_json(e));
  }
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(ErrorKind::Parse, "matrix is not square");
  }
  return make_exact(rows);
}

json exact_to_json(const Exact& x) {
  if (x.is_real()) return to_string(x.re());
  return {{"re", to_string(x.re())}, {"im", to_string(x.im())}};
}

json matrix_to_json(const MatrixExact& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(exact_to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

MatrixExact load_matrix(const std::filesystem::path& path) { return matrix_from_json(read_file(path)); }

ButcherTableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("s") || !j.contains("a") || !j.contains("b")) {
    throw Error(ErrorKind::Parse, "tableau needs fields \"s\", \"a\" and \"b\"");
  }
  if (!j.at("s").is_number_integer() || j.at("s").get<long>() < 1) {
    throw Error(ErrorKind::Parse, "\"s\" must be a positive integer");
  }
  ButcherTableau t;
  t.stages = j.at("s").get<std::size_t>();
  const json& a = j.at("a");
  const json& b = j.at("b");
  if (!a.is_array() || a.size() != t.stages) throw Error(ErrorKind::Parse, "\"a\" must have s rows");
  if (!b.is_array() || b.size() != t.stages) throw Error(ErrorKind::Parse, "\"b\" must have s entries");
  t.a = zero_exact(t.stages);
  for (std::size_t i = 0; i < t.stages; ++i) {
    if (!a[i].is_array() || a[i].size() > t.stages) throw Error(ErrorKind::Parse, "bad row in \"a\"");
    for (std::size_t k = 0; k < a[i].size(); ++k) t.a(i, k) = entry_from_json(a[i][k]);
  }
  for (const auto& w : b) t.b.push_back(entry_from_json(w));
  t.validate();
  return t;
}

ButcherTableau load_tableau(const std::filesystem::path& path) { return tableau_from_json(read_file(path)); }

json hp_to_json(const HpFloat& x) {
  return {{"value", x.to_decimal()}, {"precision_bits", x.precision()}};
}

json to_json(const HcReport& r) {
  json chain = json::array();
  for (const auto& rec : r.tm_chain) chain.push_back({{"m", rec.m}, {"definiteness", to_string(rec.definiteness)}});
  json out = {
      {"n", r.n},
      {"semi_dissipative", r.semi_dissipative},
      {"hc_index", r.hc_index ? json(*r.hc_index) : json(nullptr)},
      {"rank_LH", r.rank_lh},
      {"lower_bound", r.lower_bound ? json(to_string(*r.lower_bound)) : json(nullptr)},
      {"upper_bound", r.upper_bound ? json(*r.upper_bound) : json(nullptr)},
      {"asymptotically_stable", r.asymptotically_stable},
      {"marginal", r.marginal},
      {"tm_chain", chain},
      {"kalman_rank_full", r.kalman ? json(*r.kalman) : json(nullptr)},
      {"conservative", r.conservative},
  };
  if (!r.hc_index) {
    out["note"] = r.conservative ? "conservative, not hypocoercive" : "not hypocoercive";
  }
  return out;
}

json to_json(const DetLeadingTerm& d) {
  return {{"order", d.order}, {"coeff", exact_to_json(d.coeff)}, {"full_poly_degree", d.full_poly_degree}};
}

json to_json(const StabilityFn& r) {
  json coeffs = json::array();
  for (const auto& c : r.poly.coeffs()) coeffs.push_back(exact_to_json(c));
  return {{"coefficients", coeffs}, {"order", r.order}, {"stages", r.stages}};
}

json to_json(const SweepResult& s) {
  return {{"epsilon", hp_to_json(s.epsilon)},
          {"grid_points", s.grid_points},
          {"max_excess", hp_to_json(s.max_excess)},
          {"max_excess_sci", s.max_excess.to_scientific(3)},
          {"argmax_tau", hp_to_json(s.argmax_tau)},
          {"precision_bits", s.precision_bits}};
}

json to_json(const StrongStabilityVerdict& v) {
  json per = json::array();
  for (const auto& o : v.per_matrix) {
    json ev = {{"negative_determinant", o.evidence.negative_determinant},
               {"lowest_order", o.evidence.lowest_order},
               {"indefinite_leading_block", o.evidence.indefinite_leading_block}};
    ev["det_leading"] = o.evidence.det ? to_json(*o.evidence.det) : json(nullptr);
    ev["lowest_definiteness"] =
        o.evidence.lowest_definiteness ? json(to_string(*o.evidence.lowest_definiteness)) : json(nullptr);
    json rounds = json::array();
    for (const auto& e : o.round_excess) rounds.push_back(e.to_scientific(6));
    per.push_back({{"violation", o.violation}, {"series", ev}, {"round_excess", rounds}});
  }
  json out = {{"scheme", to_json(v.scheme)}, {"status", to_string(v.status)}, {"per_matrix", per}};
  if (v.witness) {
    out["witness"] = {{"matrix_index", v.witness->matrix_index},
                      {"matrix", matrix_to_json(v.witness->matrix)},
                      {"tau", hp_to_json(v.witness->tau)},
                      {"excess", hp_to_json(v.witness->excess)},
                      {"epsilon_initial", hp_to_json(v.witness->epsilon_initial)},
                      {"epsilon_final", hp_to_json(v.witness->epsilon_final)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const DecayFit& f) {
  json samples = json::array();
  for (const auto& s : f.samples) samples.push_back({{"t", s.t.to_scientific(20)}, {"norm", hp_to_json(s.norm)}});
  return {{"a_est", hp_to_json(f.a_est)},
          {"c_est", hp_to_json(f.c_est)},
          {"hc_index", f.hc_index},
          {"a_predicted", f.a_predicted},
          {"fit_window", {f.t_min.to_scientific(20), f.t_max.to_scientific(20)}},
          {"samples", samples}};
}

json to_json(const LasmReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"n", s.matrix.dim()},
                       {"hc_index", s.hc_index},
                       {"violation", s.violation},
                       {"max_excess", s.max_excess.to_scientific(6)},
                       {"matrix", matrix_to_json(s.matrix)}});
  }
  return {{"p", r.p},
          {"m", r.m},
          {"index_condition_holds", r.index_condition_holds},
          {"seed", r.seed},
          {"requested", r.requested},
          {"tested", r.tested},
          {"violations", r.violations},
          {"matches_expectation", r.matches_expectation},
          {"samples", samples}};
}

void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& curve) {
  os << "tau,norm,excess\n";
  for (const auto& c : curve) {
    os << c.tau.to_scientific(20) << ',' << c.norm.to_scientific(40) << ',' << c.excess.to_scientific(12)
       << '\n';
  }
}

void write_decay_csv(std::ostream& os, const std::vector<NormSample>& samples) {
  os << "t,norm,one_minus_norm\n";
  for (const auto& s : samples) {
    HpFloat gap = HpFloat(1, s.norm.precision()) - s.norm;
    os << s.t.to_scientific(20) << ',' << s.norm.to_scientific(40) << ',' << gap.to_scientific(12) << '\n';
  }
}

}  // namespace hypostab::io
