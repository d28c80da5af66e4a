#include "mdlie/linalg.hpp"

#include "mdlie/errors.hpp"

#include <algorithm>
#include <random>
#include <utility>

namespace mdlie {

namespace {

void require_square(const MatrixQ& m, const char* what) {
    if (!m.is_square()) throw InputError(std::string(what) + ": matrix is not square");
}

std::vector<mpz_class> integer_rows(const MatrixQ& m) {
    std::vector<mpz_class> a(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpz_class den = m(r, c).denominator();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpq_class& q = m(r, c).raw();
            a[r * m.cols() + c] = q.get_num() * (l / q.get_den());
        }
    }
    return a;
}

}  // namespace

std::size_t rank(const MatrixQ& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<mpz_class> a = integer_rows(m);
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

    mpz_class prev = 1;
    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        // full pivoting: smallest nonzero magnitude in the trailing block
        std::size_t pr = rows;
        std::size_t pc = cols;
        for (std::size_t r = k; r < rows; ++r)
            for (std::size_t c = k; c < cols; ++c) {
                if (sgn(at(r, c)) == 0) continue;
                if (pr == rows || mpz_cmpabs(at(r, c).get_mpz_t(), at(pr, pc).get_mpz_t()) < 0) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr == rows) break;
        if (pr != k)
            for (std::size_t c = 0; c < cols; ++c) std::swap(at(pr, c), at(k, c));
        if (pc != k)
            for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, pc), at(r, k));

        const mpz_class pivot = at(k, k);
        for (std::size_t r = k + 1; r < rows; ++r) {
            for (std::size_t c = k + 1; c < cols; ++c) {
                mpz_class v = pivot * at(r, c) - at(r, k) * at(k, c);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                at(r, c) = std::move(v);
            }
            at(r, k) = 0;
        }
        prev = pivot;
    }
    return k;
}

EchelonForm row_reduce(const MatrixQ& m) {
    MatrixQ a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const Rational inv = a(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    MatrixQ out(r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return {std::move(out), std::move(pivots)};
}

MatrixQ nullspace(const MatrixQ& m) {
    const EchelonForm e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<VectorQ> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        VectorQ v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rows(i, free);
        basis.push_back(std::move(v));
    }
    return MatrixQ::from_rows(basis, m.cols());
}

Rational determinant(const MatrixQ& m) {
    require_square(m, "determinant");
    MatrixQ a = m;
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        const Rational inv = a(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            const Rational f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<MatrixQ> inverse(const MatrixQ& m) {
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    MatrixQ aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const EchelonForm e = row_reduce(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    MatrixQ inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows(i, n + j);
    return inv;
}

UPoly char_poly(const MatrixQ& m) {
    require_square(m, "char_poly");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    MatrixQ mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        MatrixQ next = m * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        const MatrixQ am = m * mk;
        Rational trace;
        for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
        c[n - k] = -trace / Rational(static_cast<long>(k));
    }
    return UPoly(std::move(c));
}

MatrixQ eval_at(const UPoly& p, const MatrixQ& m) {
    require_square(m, "eval_at");
    MatrixQ acc(m.rows(), m.cols());
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
    }
    return acc;
}

MatrixQ companion(const UPoly& monic) {
    if (monic.degree() < 1 || monic.leading() != Rational(1))
        throw PreconditionError("companion: polynomial must be monic of positive degree");
    const auto d = static_cast<std::size_t>(monic.degree());
    MatrixQ c(d, d);
    for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = -monic.coefficient(i);
    return c;
}

MatrixQ companion_blocks(const std::vector<UPoly>& factors) {
    std::size_t n = 0;
    for (const auto& f : factors) n += static_cast<std::size_t>(f.degree());
    MatrixQ out(n, n);
    std::size_t off = 0;
    for (const auto& f : factors) {
        const MatrixQ c = companion(f);
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) out(off + i, off + j) = c(i, j);
        off += c.rows();
    }
    return out;
}

std::vector<UPoly> invariant_factors(const MatrixQ& m) {
    require_square(m, "invariant_factors");
    const std::size_t n = m.rows();
    // Smith normal form of tI - M over Q[t].
    std::vector<UPoly> a(n * n);
    auto at = [&](std::size_t r, std::size_t c) -> UPoly& { return a[r * n + c]; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            at(i, j) = i == j ? UPoly({-m(i, j), Rational(1)}) : UPoly::constant(-m(i, j));

    std::vector<UPoly> diag;
    for (std::size_t k = 0; k < n; ++k) {
        for (;;) {
            std::size_t pr = n;
            std::size_t pc = n;
            for (std::size_t r = k; r < n; ++r)
                for (std::size_t c = k; c < n; ++c)
                    if (!at(r, c).is_zero() && (pr == n || at(r, c).degree() < at(pr, pc).degree())) {
                        pr = r;
                        pc = c;
                    }
            if (pr == n) break;
            if (pr != k)
                for (std::size_t c = 0; c < n; ++c) std::swap(at(pr, c), at(k, c));
            if (pc != k)
                for (std::size_t r = 0; r < n; ++r) std::swap(at(r, pc), at(r, k));

            bool clean = true;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (at(r, k).is_zero()) continue;
                auto [q, rem] = at(r, k).divmod(at(k, k));
                for (std::size_t c = k; c < n; ++c) at(r, c) = at(r, c) - q * at(k, c);
                if (!rem.is_zero()) clean = false;
            }
            for (std::size_t c = k + 1; c < n; ++c) {
                if (at(k, c).is_zero()) continue;
                auto [q, rem] = at(k, c).divmod(at(k, k));
                for (std::size_t r = k; r < n; ++r) at(r, c) = at(r, c) - q * at(r, k);
                if (!rem.is_zero()) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the whole trailing block
            std::size_t bad = n;
            for (std::size_t r = k + 1; r < n && bad == n; ++r)
                for (std::size_t c = k + 1; c < n; ++c)
                    if (!at(r, c).divmod(at(k, k)).second.is_zero()) {
                        bad = r;
                        break;
                    }
            if (bad == n) break;
            for (std::size_t c = k; c < n; ++c) at(k, c) = at(k, c) + at(bad, c);
        }
        diag.push_back(at(k, k).monic());
    }

    std::vector<UPoly> out;
    for (auto& d : diag)
        if (d.degree() >= 1) out.push_back(std::move(d));
    return out;
}

FrobeniusForm frobenius_form(const MatrixQ& m) {
    require_square(m, "frobenius_form");
    const std::size_t n = m.rows();
    FrobeniusForm f;
    f.invariant_factors = invariant_factors(m);
    f.canonical = companion_blocks(f.invariant_factors);

    // Solve X M = C X; an invertible solution is the transform.
    MatrixQ system(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t eq = a * n + c;
            for (std::size_t b = 0; b < n; ++b) {
                system(eq, a * n + b) += m(b, c);
                system(eq, b * n + c) -= f.canonical(a, b);
            }
        }
    const MatrixQ sol = nullspace(system);

    auto assemble = [&](const std::vector<long>& w) {
        MatrixQ x(n, n);
        for (std::size_t s = 0; s < sol.rows(); ++s) {
            if (w[s] == 0) continue;
            for (std::size_t i = 0; i < n * n; ++i) x(i / n, i % n) += sol(s, i) * Rational(w[s]);
        }
        return x;
    };

    std::vector<long> weights(sol.rows(), 0);
    for (std::size_t s = 0; s < sol.rows(); ++s) {
        std::fill(weights.begin(), weights.end(), 0);
        weights[s] = 1;
        MatrixQ x = assemble(weights);
        if (!determinant(x).is_zero()) {
            f.transform = std::move(x);
            return f;
        }
    }
    // A generic member of the solution space is invertible; search a fixed
    // pseudo-random sequence so the result is reproducible.
    std::mt19937_64 rng(0x5eedULL);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        for (auto& w : weights) w = static_cast<long>(rng() % 21) - 10;
        MatrixQ x = assemble(weights);
        if (!determinant(x).is_zero()) {
            f.transform = std::move(x);
            return f;
        }
    }
    throw std::logic_error("frobenius_form: no invertible intertwiner found");
}

bool similar(const MatrixQ& a, const MatrixQ& b) {
    require_square(a, "similar");
    require_square(b, "similar");
    if (a.rows() != b.rows()) return false;
    return invariant_factors(a) == invariant_factors(b);
}

}  // namespace mdlie
