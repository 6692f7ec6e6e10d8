#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypostab/hpfloat.hpp"

namespace hypostab {

struct ReproduceOptions {
  long precision_bits = kDefaultPrecisionBits;
  std::uint64_t seed = 20240101;
  std::size_t grid_points = 1024;
  unsigned threads = 1;
  std::size_t lasm_samples = 20;
};

struct ReproduceRow {
  std::string id;        // e.g. "det-leading p=4"
  std::string expected;
  std::string observed;
  bool pass = false;
  /// Error kind when the row could not be evaluated.
  std::string reason;
  double seconds = 0.0;
};

/// True when `observed` rounded to two significant figures equals the
/// two-significant-figure `expected`.
bool matches_two_significant(const HpFloat& observed, double expected);

/// Headline results: staircase HC indices, determinant leading terms for
/// p = 4, 8, the norm sweeps for p = 4, 8, 12, the counterexample
/// verdicts, the L_AS^m property runs, the decay exponents, and the
/// classification spot checks. `on_row` is called as each row finishes.
std::vector<ReproduceRow> reproduce_paper(const ReproduceOptions& opts,
                                          const std::function<void(const ReproduceRow&)>& on_row = {});

}  // namespace hypostab
