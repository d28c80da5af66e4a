#pragma once

#include "mdlie/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace mdlie {

/// Linear subspace of Q^n stored as the nonzero rows of its reduced
/// row-echelon spanning matrix, so equal subspaces compare equal.
class Subspace {
public:
    Subspace() = default;

    static Subspace span(std::size_t ambient, std::span<const VectorQ> vectors);
    static Subspace from_matrix_rows(const MatrixQ& rows);
    static Subspace zero(std::size_t ambient);
    static Subspace whole(std::size_t ambient);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const MatrixQ& basis() const { return basis_; }
    std::vector<VectorQ> vectors() const;
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const Rational> v) const;
    bool contains(const Subspace& other) const;
    /// Coefficients of v in the echelon basis; throws PreconditionError if v is not in the span.
    VectorQ coordinates(std::span<const Rational> v) const;

    /// Standard basis indices that complete the echelon basis to Q^n.
    std::vector<std::size_t> complement_indices() const;

    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// {f : f . v = 0 for all v in this}
    Subspace annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    MatrixQ basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace mdlie
