#pragma once

#include "mdlie/matrix.hpp"
#include "mdlie/upoly.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mdlie {

/// Exact rank over Q. Rows are cleared of denominators and the resulting
/// integer matrix is reduced by fraction-free (Bareiss) elimination with
/// full pivoting.
std::size_t rank(const MatrixQ& m);

struct EchelonForm {
    MatrixQ rows;                     ///< nonzero rows of the reduced row-echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each row
};

EchelonForm row_reduce(const MatrixQ& m);

/// Basis of {v : m v = 0}, one vector per row, in the standard
/// free-variable parametrisation.
MatrixQ nullspace(const MatrixQ& m);

Rational determinant(const MatrixQ& m);
std::optional<MatrixQ> inverse(const MatrixQ& m);

/// Monic det(tI - m), via Faddeev-LeVerrier.
UPoly char_poly(const MatrixQ& m);

/// Horner evaluation of p at a square matrix.
MatrixQ eval_at(const UPoly& p, const MatrixQ& m);

MatrixQ companion(const UPoly& monic);
/// Block-diagonal matrix of companion blocks, in list order.
MatrixQ companion_blocks(const std::vector<UPoly>& factors);

struct FrobeniusForm {
    /// Non-constant invariant factors f1 | f2 | ... (monic).
    std::vector<UPoly> invariant_factors;
    /// Block companion matrix C of the invariant factors.
    MatrixQ canonical;
    /// Invertible P with P M P^-1 == C.
    MatrixQ transform;
};

/// Invariant factors only (Smith form of tI - m over Q[t]); cheaper than the
/// full form because no transform is solved for.
std::vector<UPoly> invariant_factors(const MatrixQ& m);

FrobeniusForm frobenius_form(const MatrixQ& m);

bool similar(const MatrixQ& a, const MatrixQ& b);

}  // namespace mdlie
