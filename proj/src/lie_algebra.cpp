#include "mdlie/lie_algebra.hpp"

#include "mdlie/errors.hpp"
#include "mdlie/linalg.hpp"

#include <set>

namespace mdlie {

std::vector<std::string> default_basis_names(std::size_t dim) {
    std::vector<std::string> names;
    names.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) names.push_back("X" + std::to_string(i + 1));
    return names;
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
    // row-major over the strict upper triangle
    return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

LieAlgebra LieAlgebra::from_brackets(std::size_t dim, const std::vector<Bracket>& brackets,
                                     std::vector<std::string> basis_names) {
    LieAlgebra g;
    g.dim_ = dim;
    if (basis_names.empty()) basis_names = default_basis_names(dim);
    if (basis_names.size() != dim)
        throw InputError("expected " + std::to_string(dim) + " basis names, got " + std::to_string(basis_names.size()));
    g.names_ = std::move(basis_names);
    g.upper_.assign(dim * (dim > 0 ? dim - 1 : 0) / 2, VectorQ(dim));

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& b : brackets) {
        const std::string pair = "(" + std::to_string(b.i + 1) + "," + std::to_string(b.j + 1) + ")";
        if (b.i >= dim || b.j >= dim) throw InputError("bracket index out of range in pair " + pair);
        if (b.i >= b.j) throw InputError("bracket pair " + pair + " must satisfy i < j");
        if (!seen.insert({b.i, b.j}).second) throw InputError("duplicate bracket for pair " + pair);
        if (b.value.size() != dim) throw InputError("bracket value for pair " + pair + " has wrong length");
        g.upper_[g.pair_index(b.i, b.j)] = b.value;
    }
    g.jacobi_ = g.compute_jacobi();
    return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return from_brackets(dim, {}); }

VectorQ LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw InputError("basis index out of range");
    if (i == j) return VectorQ(dim_);
    if (i < j) return upper_[pair_index(i, j)];
    return scale(upper_[pair_index(j, i)], Rational(-1));
}

VectorQ LieAlgebra::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
    if (u.size() != dim_ || v.size() != dim_)
        throw InputError("bracket: vector length does not match dimension " + std::to_string(dim_));
    VectorQ out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const Rational w = u[i] * v[j] - u[j] * v[i];
            if (w.is_zero()) continue;
            const VectorQ& c = upper_[pair_index(i, j)];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!c[k].is_zero()) out[k] += w * c[k];
        }
    return out;
}

std::vector<Bracket> LieAlgebra::brackets() const {
    std::vector<Bracket> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const VectorQ& c = upper_[pair_index(i, j)];
            if (!is_zero(c)) out.push_back({i, j, c});
        }
    return out;
}

JacobiReport LieAlgebra::compute_jacobi() const {
    JacobiReport report;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                const VectorQ ei = unit_vector(dim_, i);
                const VectorQ ej = unit_vector(dim_, j);
                const VectorQ ek = unit_vector(dim_, k);
                VectorQ sum = bracket(basis_bracket(i, j), ek);
                sum = add(sum, bracket(basis_bracket(j, k), ei));
                sum = add(sum, bracket(basis_bracket(k, i), ej));
                if (!is_zero(sum)) {
                    report.ok = false;
                    report.triple = {i, j, k};
                    report.defect = std::move(sum);
                    return report;
                }
            }
    return report;
}

void LieAlgebra::require_lie(const char* operation) const {
    if (jacobi_.ok) return;
    const auto& t = jacobi_.triple;
    throw NotLieAlgebraError(std::string(operation) + " requires a Lie algebra; Jacobi identity fails at (" +
                             std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
                             std::to_string(t[2] + 1) + ")");
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
    return dim_ == other.dim_ && upper_ == other.upper_;
}

std::string LieAlgebra::str() const {
    std::string s;
    for (const auto& b : brackets()) {
        if (!s.empty()) s += ", ";
        s += "[" + names_[b.i] + "," + names_[b.j] + "]=";
        std::string rhs;
        for (std::size_t k = 0; k < dim_; ++k) {
            const Rational& c = b.value[k];
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            if (rhs.empty())
                rhs += neg ? "-" : "";
            else
                rhs += neg ? "-" : "+";
            if (c.abs() != Rational(1)) rhs += c.abs().str() + "*";
            rhs += names_[k];
        }
        s += rhs;
    }
    return s.empty() ? "abelian" : s;
}

JacobiReport jacobi_check(const LieAlgebra& g) {
    std::vector<Bracket> b = g.brackets();
    return LieAlgebra::from_brackets(g.dim(), b, g.basis_names()).jacobi();
}

LieAlgebra change_of_basis(const LieAlgebra& g, const MatrixQ& p) {
    const std::size_t n = g.dim();
    if (p.rows() != n || p.cols() != n) throw InputError("change_of_basis: matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    const auto p_inv = inverse(p);
    if (!p_inv) throw InputError("change_of_basis: matrix is singular");
    std::vector<VectorQ> columns;
    columns.reserve(n);
    for (std::size_t c = 0; c < n; ++c) columns.push_back(p.column(c));
    std::vector<Bracket> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            VectorQ v = *p_inv * g.bracket(columns[a], columns[b]);
            if (!is_zero(v)) out.push_back({a, b, std::move(v)});
        }
    return LieAlgebra::from_brackets(n, out, g.basis_names());
}

LieAlgebra direct_sum(const LieAlgebra& h, const LieAlgebra& k) {
    const std::size_t n = h.dim() + k.dim();
    std::vector<Bracket> out;
    for (const auto& b : h.brackets()) {
        VectorQ v(n);
        std::copy(b.value.begin(), b.value.end(), v.begin());
        out.push_back({b.i, b.j, std::move(v)});
    }
    for (const auto& b : k.brackets()) {
        VectorQ v(n);
        std::copy(b.value.begin(), b.value.end(), v.begin() + static_cast<std::ptrdiff_t>(h.dim()));
        out.push_back({b.i + h.dim(), b.j + h.dim(), std::move(v)});
    }
    std::vector<std::string> names = h.basis_names();
    names.insert(names.end(), k.basis_names().begin(), k.basis_names().end());
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size()) names = default_basis_names(n);
    return LieAlgebra::from_brackets(n, out, names);
}

}  // namespace mdlie
