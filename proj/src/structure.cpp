#include "mdlie/structure.hpp"

#include "mdlie/errors.hpp"
#include "mdlie/linalg.hpp"

namespace mdlie {

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
    std::vector<VectorQ> images;
    const auto av = a.vectors();
    const auto bv = b.vectors();
    for (const auto& x : av)
        for (const auto& y : bv) images.push_back(g.bracket(x, y));
    return Subspace::span(g.dim(), images);
}

namespace {

template <typename Next>
std::vector<Subspace> series(const LieAlgebra& g, Next next) {
    std::vector<Subspace> out{Subspace::whole(g.dim())};
    for (;;) {
        Subspace s = next(out.back());
        if (s == out.back()) break;
        const bool done = s.dim() == 0;
        out.push_back(std::move(s));
        if (done) break;
    }
    return out;
}

}  // namespace

std::vector<Subspace> derived_series(const LieAlgebra& g) {
    g.require_lie("derived_series");
    return series(g, [&](const Subspace& s) { return bracket_span(g, s, s); });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
    g.require_lie("lower_central_series");
    const Subspace whole = Subspace::whole(g.dim());
    return series(g, [&](const Subspace& s) { return bracket_span(g, whole, s); });
}

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
    std::vector<std::size_t> out;
    out.reserve(series.size());
    for (const auto& s : series) out.push_back(s.dim());
    return out;
}

Subspace derived_algebra(const LieAlgebra& g) {
    const Subspace whole = Subspace::whole(g.dim());
    return bracket_span(g, whole, whole);
}

bool is_solvable(const LieAlgebra& g) { return derived_series(g).back().dim() == 0; }

bool is_commutative(const LieAlgebra& g, const Subspace& s) { return bracket_span(g, s, s).dim() == 0; }

Subspace centralizer(const LieAlgebra& g, const Subspace& s) {
    // u -> ([u, s_1], ..., [u, s_m]) stacked; its kernel.
    const std::size_t n = g.dim();
    const auto sv = s.vectors();
    MatrixQ stacked(n * sv.size(), n);
    for (std::size_t k = 0; k < sv.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const VectorQ col = g.bracket(unit_vector(n, i), sv[k]);
            for (std::size_t r = 0; r < n; ++r) stacked(k * n + r, i) = col[r];
        }
    if (sv.empty()) return Subspace::whole(n);
    return Subspace::from_matrix_rows(nullspace(stacked));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

MatrixQ ad_matrix(const LieAlgebra& g, std::span<const Rational> x) {
    const std::size_t n = g.dim();
    MatrixQ m(n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, g.bracket(x, unit_vector(n, j)));
    return m;
}

AdOperator ad_restricted(const LieAlgebra& g, std::span<const Rational> x, const Subspace& s) {
    if (x.size() != g.dim()) throw InputError("ad_restricted: vector length mismatch");
    const auto sv = s.vectors();
    MatrixQ m(s.dim(), s.dim());
    for (std::size_t c = 0; c < sv.size(); ++c) {
        const VectorQ image = g.bracket(x, sv[c]);
        if (!s.contains(image))
            throw PreconditionError("subspace is not invariant under ad_" + to_string(x));
        m.set_column(c, s.coordinates(image));
    }
    return {VectorQ(x.begin(), x.end()), s, std::move(m)};
}

bool ad_commute_check(const LieAlgebra& g, std::span<const Rational> x, std::span<const Rational> y) {
    g.require_lie("ad_commute_check");
    const Subspace g1 = derived_algebra(g);
    if (!is_commutative(g, g1)) throw PreconditionError("ad_commute_check: derived algebra is not commutative");
    const MatrixQ ax = ad_restricted(g, x, g1).matrix;
    const MatrixQ ay = ad_restricted(g, y, g1).matrix;
    return ax * ay == ay * ax;
}

}  // namespace mdlie
