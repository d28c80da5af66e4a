#pragma once

#include "mdlie/lie_algebra.hpp"
#include "mdlie/subspace.hpp"

#include <span>
#include <vector>

namespace mdlie {

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

/// G, G^1 = [G,G], G^2 = [G^1,G^1], ... ; ends with the zero subspace when
/// the series reaches it, otherwise at the first repeated term.
std::vector<Subspace> derived_series(const LieAlgebra& g);
/// G, [G,G], [G,[G,G]], ... with the same stopping rule.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);
std::vector<std::size_t> dims(const std::vector<Subspace>& series);

Subspace derived_algebra(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
/// All brackets between elements of s vanish.
bool is_commutative(const LieAlgebra& g, const Subspace& s);

Subspace center(const LieAlgebra& g);
/// {u : [u, s] = 0 for every s in S}
Subspace centralizer(const LieAlgebra& g, const Subspace& s);

/// Full matrix of ad_x; column j is [x, X_j].
MatrixQ ad_matrix(const LieAlgebra& g, std::span<const Rational> x);

/// ad_x restricted to an ad_x-invariant subspace, written in the subspace's
/// echelon basis (column c is the image of basis vector c).
struct AdOperator {
    VectorQ source;
    Subspace subspace;
    MatrixQ matrix;
};

/// Throws PreconditionError when S is not invariant under ad_x.
AdOperator ad_restricted(const LieAlgebra& g, std::span<const Rational> x, const Subspace& s);

/// Compares ad_x . ad_y with ad_y . ad_x as operators on G^1. Throws
/// PreconditionError when G^1 is not commutative.
bool ad_commute_check(const LieAlgebra& g, std::span<const Rational> x, std::span<const Rational> y);

}  // namespace mdlie
