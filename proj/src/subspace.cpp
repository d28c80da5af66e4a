#include "mdlie/subspace.hpp"

#include "mdlie/errors.hpp"
#include "mdlie/linalg.hpp"

namespace mdlie {

Subspace Subspace::from_matrix_rows(const MatrixQ& rows) {
    Subspace s;
    s.ambient_ = rows.cols();
    EchelonForm e = row_reduce(rows);
    s.basis_ = std::move(e.rows);
    s.pivots_ = std::move(e.pivots);
    if (s.basis_.rows() == 0) s.basis_ = MatrixQ(0, s.ambient_);
    return s;
}

Subspace Subspace::span(std::size_t ambient, std::span<const VectorQ> vectors) {
    return from_matrix_rows(MatrixQ::from_rows(vectors, ambient));
}

Subspace Subspace::zero(std::size_t ambient) { return from_matrix_rows(MatrixQ(0, ambient)); }

Subspace Subspace::whole(std::size_t ambient) { return from_matrix_rows(MatrixQ::identity(ambient)); }

std::vector<VectorQ> Subspace::vectors() const {
    std::vector<VectorQ> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
    return out;
}

bool Subspace::contains(std::span<const Rational> v) const {
    if (v.size() != ambient_) throw InputError("subspace membership: length mismatch");
    // In RREF the only candidate combination uses v's pivot entries as weights.
    VectorQ residual(v.begin(), v.end());
    for (std::size_t r = 0; r < dim(); ++r) {
        const Rational w = v[pivots_[r]];
        if (w.is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c) residual[c] -= w * basis_(r, c);
    }
    return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

VectorQ Subspace::coordinates(std::span<const Rational> v) const {
    if (!contains(v)) throw PreconditionError("vector " + to_string(v) + " is not in the subspace");
    VectorQ coords(dim());
    for (std::size_t r = 0; r < dim(); ++r) coords[r] = v[pivots_[r]];
    return coords;
}

std::vector<std::size_t> Subspace::complement_indices() const {
    std::vector<bool> used(ambient_, false);
    for (auto p : pivots_) used[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_; ++i)
        if (!used[i]) out.push_back(i);
    return out;
}

Subspace Subspace::operator+(const Subspace& o) const {
    auto v = vectors();
    auto w = o.vectors();
    v.insert(v.end(), w.begin(), w.end());
    return span(ambient_, v);
}

Subspace Subspace::annihilator() const {
    if (dim() == 0) return whole(ambient_);
    return from_matrix_rows(nullspace(basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    return (annihilator() + o.annihilator()).annihilator();
}

}  // namespace mdlie
