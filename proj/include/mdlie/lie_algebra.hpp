#pragma once

#include "mdlie/matrix.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mdlie {

/// One structure-constant row: [X_{i+1}, X_{j+1}] = sum_k value[k] X_{k+1}, with i < j.
struct Bracket {
    std::size_t i = 0;
    std::size_t j = 0;
    VectorQ value;
};

/// Outcome of checking [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj] = 0 over i<j<k.
struct JacobiReport {
    bool ok = true;
    std::array<std::size_t, 3> triple{};  ///< first failing (i, j, k), 0-based
    VectorQ defect;                       ///< the nonzero cyclic sum
};

/// Finite-dimensional algebra over Q given by skew structure constants. Only
/// pairs i < j are stored, so antisymmetry holds by construction. The Jacobi
/// identity is checked once at construction and recorded, not enforced, so
/// that non-Lie counterexamples remain representable.
class LieAlgebra {
public:
    LieAlgebra() = default;

    /// Throws InputError on out-of-range indices, i >= j, a repeated pair,
    /// wrong value length, or a wrong number of basis names.
    static LieAlgebra from_brackets(std::size_t dim, const std::vector<Bracket>& brackets,
                                    std::vector<std::string> basis_names = {});
    static LieAlgebra abelian(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    /// [X_i, X_j] for any i, j (0-based).
    VectorQ basis_bracket(std::size_t i, std::size_t j) const;
    /// Bilinear extension to coordinate vectors.
    VectorQ bracket(std::span<const Rational> u, std::span<const Rational> v) const;

    /// Nonzero brackets with i < j, in (i, j) order.
    std::vector<Bracket> brackets() const;

    const JacobiReport& jacobi() const { return jacobi_; }
    bool is_lie() const { return jacobi_.ok; }
    /// Throws NotLieAlgebraError when the Jacobi identity fails.
    void require_lie(const char* operation) const;

    /// Structure constants agree (names are ignored).
    bool same_structure(const LieAlgebra& other) const;

    /// e.g. "[X1,X2]=X5, [X3,X4]=X5"; "abelian" when there are no brackets.
    std::string str() const;

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const;
    JacobiReport compute_jacobi() const;

    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<VectorQ> upper_;  // pair (i<j) -> bracket value
    JacobiReport jacobi_;
};

/// Recomputes the Jacobi check from scratch.
JacobiReport jacobi_check(const LieAlgebra& g);

/// Transport to the basis X'_c = sum_r P(r, c) X_r (columns of P are the new
/// basis in old coordinates). Old coordinates u and new coordinates u' are
/// related by u = P u', so P [u', v']_new = [P u', P v']_old.
/// Throws InputError when P is singular or of the wrong size.
LieAlgebra change_of_basis(const LieAlgebra& g, const MatrixQ& p);

/// H (+) K with zero cross brackets; basis of H first.
LieAlgebra direct_sum(const LieAlgebra& h, const LieAlgebra& k);

std::vector<std::string> default_basis_names(std::size_t dim);

}  // namespace mdlie
