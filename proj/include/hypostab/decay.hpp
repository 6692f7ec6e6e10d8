#pragma once

#include <vector>

#include "hypostab/hpfloat.hpp"
#include "hypostab/matrix.hpp"

namespace hypostab {

struct NormSample {
  HpFloat t;
  HpFloat norm;
};

/// (t, ||e^{tL}||_2) for each t >= 0.
std::vector<NormSample> propagator_norm_curve(const MatrixExact& l, const std::vector<HpFloat>& t_values,
                                              long bits = kDefaultPrecisionBits);

struct DecayFitOptions {
  long precision_bits = kDefaultPrecisionBits;
  /// Geometric grid 2^log2_t_min .. 2^log2_t_max.
  long log2_t_min = -30;
  long log2_t_max = -10;
  std::size_t points = 21;
};

/// Fit of 1 - ||e^{tL}||_2 ~ c t^a on a short-time window.
struct DecayFit {
  HpFloat a_est;
  HpFloat c_est;
  std::size_t hc_index = 0;
  long a_predicted = 0;  // 2 hc_index + 1
  std::vector<NormSample> samples;
  HpFloat t_min;
  HpFloat t_max;
};

/// Least-squares slope and intercept of log(1 - norm) against log t.
/// Requires a semi-dissipative, asymptotically stable L; throws
/// FitDegenerate when 1 - norm is not resolved at the working precision.
DecayFit fit_short_time(const MatrixExact& l, const DecayFitOptions& opts = {});

}  // namespace hypostab
