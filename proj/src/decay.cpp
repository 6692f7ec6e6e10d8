#include "hypostab/decay.hpp"

#include "hypostab/error.hpp"
#include "hypostab/hypo.hpp"
#include "hypostab/linalg.hpp"

namespace hypostab {

std::vector<NormSample> propagator_norm_curve(const MatrixExact& l, const std::vector<HpFloat>& t_values,
                                              long bits) {
  std::vector<NormSample> out;
  out.reserve(t_values.size());
  for (const auto& t : t_values) {
    if (t.sign() < 0) throw Error(ErrorKind::InvalidArgument, "t must be >= 0");
    out.push_back({t.with_precision(bits), spectral_norm(matrix_exp(l, t, bits))});
  }
  return out;
}

DecayFit fit_short_time(const MatrixExact& l, const DecayFitOptions& opts) {
  if (!is_semi_dissipative(l)) {
    throw Error(ErrorKind::NotSemiDissipative, "decay fit needs a semi-dissipative matrix");
  }
  if (!is_asymptotically_stable(l)) {
    throw Error(ErrorKind::InvalidArgument, "decay fit needs an asymptotically stable matrix");
  }
  const auto idx = hc_index(l);
  if (!idx) throw Error(ErrorKind::InvalidArgument, "matrix has no hypocoercivity index");
  if (opts.points < 2 || opts.log2_t_max <= opts.log2_t_min) {
    throw Error(ErrorKind::InvalidArgument, "fit window needs at least two distinct points");
  }
  const long bits = opts.precision_bits;

  // t_k = 2^(lo + k (hi - lo)/(points - 1))
  std::vector<HpFloat> ts;
  const HpFloat lo(opts.log2_t_min, bits);
  const HpFloat step = HpFloat(opts.log2_t_max - opts.log2_t_min, bits) /
                       HpFloat(static_cast<long>(opts.points - 1), bits);
  for (std::size_t k = 0; k < opts.points; ++k) {
    HpFloat e = lo + step * HpFloat(static_cast<long>(k), bits);
    HpFloat t(bits);
    mpfr_ui_pow(t.raw(), 2, e.raw(), MPFR_RNDN);
    ts.push_back(std::move(t));
  }

  DecayFit fit;
  fit.hc_index = *idx;
  fit.a_predicted = 2 * static_cast<long>(*idx) + 1;
  fit.samples = propagator_norm_curve(l, ts, bits);
  fit.t_min = ts.front();
  fit.t_max = ts.back();

  // 1 - norm has to sit well above the rounding floor.
  const HpFloat floor = HpFloat::pow2(-(bits - 32), bits);
  const HpFloat one(1, bits);
  std::vector<HpFloat> xs, ys;
  for (const auto& s : fit.samples) {
    HpFloat gap = one - s.norm;
    if (!(gap > floor)) {
      throw Error(ErrorKind::FitDegenerate,
                  "1 - ||e^{tL}|| is not resolved at " + std::to_string(bits) +
                      " bits; increase the precision or the window");
    }
    xs.push_back(log(s.t));
    ys.push_back(log(gap));
  }

  const HpFloat count(static_cast<long>(xs.size()), bits);
  HpFloat mx(bits), my(bits);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mx += xs[k];
    my += ys[k];
  }
  mx /= count;
  my /= count;
  HpFloat sxx(bits), sxy(bits);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const HpFloat dx = xs[k] - mx;
    sxx += dx * dx;
    sxy += dx * (ys[k] - my);
  }
  fit.a_est = sxy / sxx;
  fit.c_est = exp(my - fit.a_est * mx);
  return fit;
}

}  // namespace hypostab
