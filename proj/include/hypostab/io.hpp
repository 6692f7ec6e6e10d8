#pragma once

#include <filesystem>
#include <iosfwd>

#include "json.hpp"

#include "hypostab/decay.hpp"
#include "hypostab/hypo.hpp"
#include "hypostab/rk.hpp"
#include "hypostab/stab.hpp"

namespace hypostab::io {

using nlohmann::json;

/// 2-D array whose entries are rational strings ("-1/6"), integers, or
/// {"re": "...", "im": "..."} objects. Floats are rejected.
MatrixExact matrix_from_json(const json& j);
json matrix_to_json(const MatrixExact& m);
MatrixExact load_matrix(const std::filesystem::path& path);

/// {"s": int, "a": [[rational-string]], "b": [rational-string]}
ButcherTableau tableau_from_json(const json& j);
ButcherTableau load_tableau(const std::filesystem::path& path);

json exact_to_json(const Exact& x);
/// {"value": decimal-string, "precision_bits": n}
json hp_to_json(const HpFloat& x);

json to_json(const HcReport& r);
json to_json(const DetLeadingTerm& d);
json to_json(const StabilityFn& r);
json to_json(const SweepResult& s);
json to_json(const StrongStabilityVerdict& v);
json to_json(const DecayFit& f);
json to_json(const LasmReport& r);

/// tau,norm,excess rows.
void write_curve_csv(std::ostream& os, const std::vector<CurvePoint>& curve);
/// t,norm,one_minus_norm rows.
void write_decay_csv(std::ostream& os, const std::vector<NormSample>& samples);

}  // namespace hypostab::io
