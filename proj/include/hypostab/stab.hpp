#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypostab/hpmatrix.hpp"
#include "hypostab/linalg.hpp"
#include "hypostab/rk.hpp"

namespace hypostab {

/// M(tau) = I - R(tau L)^* R(tau L) as an exact matrix polynomial in tau
/// (tau real, so the adjoint conjugates both L and the coefficients of R).
TauPolyMatrix m_matrix_series(const MatrixExact& l, const StabilityFn& r);

struct DetLeadingTerm {
  long order = 0;  // power of tau
  Exact coeff;
  long full_poly_degree = 0;
};

/// First nonvanishing term of det M(tau). Throws IdenticallyZero.
DetLeadingTerm det_leading_term(const MatrixExact& l, const StabilityFn& r);

/// Leading coefficient of det M(tau) for the order-p truncated exponential
/// and the staircase generator of size 1 + p/2, in closed form:
///   2^N (prod_i 1/(p/2-i+1)!)^2 * Hilbert-Hankel determinant * (1 - C(p, p/2)).
/// Throws InvalidOrder unless p is a positive multiple of 4.
Rational closed_form_c(unsigned p);

/// Independent routes to the same constant, used for cross-checking.
namespace leading_coefficient {
/// det(1/(i + j - 1))_{i,j<=n} from the double-alternant product formula.
Rational hankel_product_formula(unsigned n);
/// (2m+1)!/(m!)^2 * C(2m, m), the ratio Delta_2 / Delta_1.
Rational delta3(unsigned m);
/// The order-(2m+3-(i+j)) coefficient of M_ij (1-based i, j):
/// 2 / ((2m+3-(i+j)) (m-i+1)! (m-j+1)!).
Rational mij(unsigned m, unsigned i, unsigned j);
/// Expansion along the first column:
///   det(m_ij) - 2/(2m+1)! det(m_ij)_{i,j>=2}
/// with both determinants written through the Hankel determinants.
Rational via_hankel_split(unsigned p);
/// Direct exact determinant of (m_ij - delta_{1i} delta_{1j} 2/(2m+1)!).
Rational via_leading_matrix(unsigned p);
}  // namespace leading_coefficient

struct CurvePoint {
  HpFloat tau;
  HpFloat norm;
  HpFloat excess;
};

struct SweepOptions {
  long precision_bits = kDefaultPrecisionBits;
  /// Worker threads for the grid; results do not depend on this.
  unsigned threads = 1;
  bool keep_curve = false;
  /// Golden-section refinement around the grid argmax.
  bool refine = true;
};

struct SweepResult {
  HpFloat epsilon;
  std::size_t grid_points = 0;
  /// max over [0, epsilon] of ||R(tau L)||_2 - 1.
  HpFloat max_excess;
  HpFloat argmax_tau;
  long precision_bits = 0;
  /// Filled when SweepOptions::keep_curve is set.
  std::vector<CurvePoint> curve;
};

/// ||R(tau L)||_2 at one step size.
HpFloat stability_norm(const MatrixHp& l, const StabilityFn& r, const HpFloat& tau);

/// Evaluates the norm on tau_k = k eps/(grid-1), then refines by golden
/// section until the bracket is narrower than eps * 2^-20. Ties go to the
/// smallest tau. Throws PrecisionTooLow below 256 bits.
SweepResult norm_sweep(const MatrixExact& l, const StabilityFn& r, const HpFloat& epsilon,
                       std::size_t grid_points, const SweepOptions& opts = {});

enum class VerdictStatus { CounterexampleFound, NoViolationOnTestSet };
const char* to_string(VerdictStatus s);

struct Witness {
  std::size_t matrix_index = 0;
  MatrixExact matrix;
  HpFloat tau;
  HpFloat excess;
  /// Largest step-size window still showing the violation, and the
  /// smallest window probed (after all halvings).
  HpFloat epsilon_initial;
  HpFloat epsilon_final;
};

/// Exact small-tau evidence gathered before the numeric sweeps.
struct SeriesEvidence {
  std::optional<DetLeadingTerm> det;
  /// det M(tau) < 0 for small tau > 0.
  bool negative_determinant = false;
  /// Lowest nonvanishing coefficient matrix of M(tau), and whether it has
  /// a negative eigenvalue (then M(tau) does too for small tau).
  long lowest_order = -1;
  std::optional<Definiteness> lowest_definiteness;
  bool indefinite_leading_block = false;
};

struct PerMatrixOutcome {
  SeriesEvidence evidence;
  bool violation = false;
  /// Excess at each halving round (round 0 = initial window).
  std::vector<HpFloat> round_excess;
};

struct VerdictOptions {
  long precision_bits = kDefaultPrecisionBits;
  /// Initial window; when unset, 1 / (4 max(1, ||L||_inf)).
  std::optional<Rational> epsilon;
  std::size_t grid_points = 64;
  /// Halvings the violation has to survive.
  unsigned rounds = 8;
  /// An excess counts as a violation only above this value; when unset,
  /// 2^-(precision_bits - 64).
  std::optional<HpFloat> guard;
  unsigned threads = 1;
};

struct StrongStabilityVerdict {
  StabilityFn scheme;
  VerdictStatus status = VerdictStatus::NoViolationOnTestSet;
  std::optional<Witness> witness;
  std::vector<PerMatrixOutcome> per_matrix;
};

SeriesEvidence series_evidence(const MatrixExact& l, const StabilityFn& r);
Rational default_epsilon(const MatrixExact& l);

/// Checks one matrix: a violation must persist through every halving of
/// the step-size window.
PerMatrixOutcome check_matrix(const MatrixExact& l, const StabilityFn& r, const VerdictOptions& opts,
                              std::optional<Witness>* witness = nullptr);

/// P = I strong-stability test over a set of semi-dissipative generators.
/// Throws NotSemiDissipative for an invalid test matrix.
StrongStabilityVerdict strong_stability_verdict(const StabilityFn& r,
                                                const std::vector<MatrixExact>& test_matrices,
                                                const VerdictOptions& opts = {});

/// Bundled family: staircase(2), staircase(3), staircase(4) and the
/// rotation generator [[0,-1],[1,0]].
std::vector<MatrixExact> default_test_family();
MatrixExact rotation_generator();

struct LasmSample {
  MatrixExact matrix;
  std::size_t hc_index = 0;
  bool violation = false;
  HpFloat max_excess;
};

struct LasmOptions {
  long precision_bits = kDefaultPrecisionBits;
  std::size_t max_dim = 6;
  /// Rejection-sampling budget per requested matrix.
  std::size_t attempts_per_sample = 200;
  std::size_t grid_points = 32;
  unsigned rounds = 8;
};

struct LasmReport {
  unsigned p = 0;
  unsigned m = 0;
  /// 2m + 1 <= p: the sampled set should then show no violation.
  bool index_condition_holds = false;
  std::uint64_t seed = 0;
  std::size_t requested = 0;
  std::size_t tested = 0;
  std::size_t violations = 0;
  std::vector<LasmSample> samples;
  /// Zero violations when the index condition holds; at least one otherwise.
  bool matches_expectation = false;
};

/// Random semi-dissipative, asymptotically stable L with hc_index <= m.
/// L = -B B^T + (S - S^T) over small integers, kept only if it passes the
/// exact checks. Throws SamplingExhausted.
std::vector<MatrixExact> sample_lasm(unsigned m, std::size_t count, std::uint64_t seed,
                                     const LasmOptions& opts = {});

/// Samples `samples` matrices, appends `extra` (which must also lie in the
/// class), and tests the order-p truncated exponential on each. A violation
/// is an excess above 2^-(bits/2) that persists through the halvings.
LasmReport lasm_property_check(unsigned p, unsigned m, std::size_t samples, std::uint64_t seed,
                               const std::vector<MatrixExact>& extra = {},
                               const LasmOptions& opts = {});

}  // namespace hypostab
