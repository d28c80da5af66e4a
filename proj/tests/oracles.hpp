#pragma once

// Slow, independent reference computations used to check the library.
// Nothing here calls into linalg, kirillov or structure.

#include "mdlie/catalog.hpp"
#include "mdlie/lie_algebra.hpp"
#include "mdlie/matrix.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using mdlie::MatrixQ;
using mdlie::Rational;
using mdlie::VectorQ;

// Laplace expansion along the first row.
inline Rational det_cofactor(const MatrixQ& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m(0, 0);
    Rational total;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c).is_zero()) continue;
        MatrixQ minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        const Rational term = m(0, c) * det_cofactor(minor);
        total += (c % 2 == 0) ? term : -term;
    }
    return total;
}

inline void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const MatrixQ& m) {
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t k = top; k > 0; --k) {
        bool found = false;
        subsets(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            if (found) return;
            subsets(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (found) return;
                MatrixQ sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
                if (!det_cofactor(sub).is_zero()) found = true;
            });
        });
        if (found) return k;
    }
    return 0;
}

// Plain Gauss-Jordan on rationals; returns a basis of {u : M u = 0}.
inline std::vector<VectorQ> kernel_gauss(MatrixQ m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(r, k));
        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t k = 0; k < cols; ++k) m(r, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational f = m(i, c);
            for (std::size_t k = 0; k < cols; ++k) m(i, k) -= f * m(r, k);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    std::vector<VectorQ> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
        VectorQ u(cols);
        u[free] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) u[pivot_cols[i]] = -m(i, free);
        basis.push_back(std::move(u));
    }
    return basis;
}

// B_F written out from the definition b_ij = <F, [X_j, X_i]>.
inline MatrixQ kirillov_matrix(const mdlie::LieAlgebra& g, const VectorQ& f) {
    const std::size_t n = g.dim();
    MatrixQ b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const VectorQ v = g.basis_bracket(j, i);
            Rational s;
            for (std::size_t k = 0; k < n; ++k) s += f[k] * v[k];
            b(i, j) = s;
        }
    return b;
}

inline MatrixQ mul(const MatrixQ& a, const MatrixQ& b) {
    MatrixQ c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    long integer(long lo, long hi) { return lo + static_cast<long>(gen() % static_cast<std::uint64_t>(hi - lo + 1)); }
    Rational rational(long span = 9, long den = 9) { return Rational(integer(-span, span), integer(1, den)); }
    VectorQ vector(std::size_t n, long span = 9, long den = 9) {
        VectorQ v(n);
        for (auto& x : v) x = rational(span, den);
        return v;
    }
    MatrixQ int_matrix(std::size_t rows, std::size_t cols, long span) {
        MatrixQ m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(integer(-span, span));
        return m;
    }
    // Random invertible matrix with small rational entries (checked by cofactor determinant).
    MatrixQ invertible(std::size_t n) {
        while (true) {
            MatrixQ m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(integer(-3, 3), integer(1, 2));
            if (!det_cofactor(m).is_zero()) return m;
        }
    }
};

inline std::vector<std::pair<std::string, mdlie::LieAlgebra>> catalog_instances(bool with_rejected = true) {
    std::vector<std::pair<std::string, mdlie::LieAlgebra>> out;
    for (const auto& s : mdlie::default_samples()) {
        if (!with_rejected && mdlie::is_rejected(s.id)) continue;
        out.emplace_back(s.label(), mdlie::build(s.id, s.params));
    }
    return out;
}

}  // namespace oracle
