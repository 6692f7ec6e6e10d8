#pragma once

#include <string>
#include <vector>

#include "hypostab/hpmatrix.hpp"
#include "hypostab/matrix.hpp"
#include "hypostab/poly.hpp"

namespace hypostab {

/// Monic det(lambda*I - M), coefficient k multiplying lambda^k.
/// Faddeev-LeVerrier over the exact field.
Poly char_poly(const MatrixExact& m);

enum class Definiteness { NegDef, NegSemiDef, Indefinite, PosSemiDef, PosDef, Zero };

const char* to_string(Definiteness d);
/// True for NegDef, NegSemiDef and Zero.
bool is_nonpositive(Definiteness d);

/// Exact classification of a Hermitian matrix from the signs of its
/// characteristic-polynomial coefficients (the spectrum is real).
/// Throws NotHermitian.
Definiteness definiteness(const MatrixExact& h);

/// Exact rank by elimination over the complex rationals.
std::size_t rank_exact(const MatrixExact& m);
/// Rank of a rectangular matrix given as rows.
std::size_t rank_exact(const std::vector<std::vector<Exact>>& rows);

struct JacobiOptions {
  int max_sweeps = 100;
};

/// Eigenvalues (ascending) of a real symmetric matrix by cyclic Jacobi
/// rotations. Iterates until the off-diagonal Frobenius mass drops below
/// 2^-precision times the Frobenius norm; throws NonConvergence otherwise.
std::vector<HpFloat> symmetric_eigenvalues(HpMatrix a, const JacobiOptions& opts = {});

/// Eigenvalues (ascending) of a complex Hermitian matrix, via the real
/// symmetric embedding [[Re, -Im], [Im, Re]] whose spectrum is that of the
/// input with every eigenvalue doubled.
std::vector<HpFloat> hermitian_eigenvalues(const MatrixHp& h, const JacobiOptions& opts = {});

/// ||M||_2 = sqrt(lambda_max(M* M)).
HpFloat spectral_norm(const MatrixHp& m, const JacobiOptions& opts = {});

/// e^{tL} by scaling and squaring with a Taylor polynomial whose degree
/// follows from the factorial remainder bound. Intermediate work carries
/// guard bits; the result is rounded to `bits`.
MatrixHp matrix_exp(const MatrixExact& l, const HpFloat& t, long bits);
MatrixHp matrix_exp(const MatrixHp& a, long bits);

/// Exact determinant of a polynomial matrix by Laplace expansion with
/// memoised minors (division free, 2^n * n products).
Poly poly_matrix_det(const TauPolyMatrix& p);
/// Same expansion over the scalars.
Exact det_exact(const MatrixExact& m);

}  // namespace hypostab
