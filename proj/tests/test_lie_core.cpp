#include "oracles.hpp"

#include "mdlie/errors.hpp"
#include "mdlie/linalg.hpp"
#include "mdlie/structure.hpp"

#include <doctest.h>

using namespace mdlie;

namespace {

VectorQ e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

VectorQ vec(std::initializer_list<Rational> v) { return VectorQ(v); }

LieAlgebra g51() {
    return LieAlgebra::from_brackets(5, {{0, 1, e(5, 4)}, {2, 3, e(5, 4)}});
}

LieAlgebra g521() {
    return LieAlgebra::from_brackets(5, {{0, 1, e(5, 3)}, {1, 2, e(5, 4)}});
}

}  // namespace

TEST_CASE("from_brackets validation") {
    CHECK(g51().brackets().size() == 2);
    CHECK(LieAlgebra::from_brackets(5, {}).brackets().empty());
    CHECK(LieAlgebra::from_brackets(5, {}).basis_names() == default_basis_names(5));
    CHECK_THROWS_AS(LieAlgebra::from_brackets(5, {{0, 5, e(5, 0)}}), InputError);
    CHECK_THROWS_AS(LieAlgebra::from_brackets(5, {{2, 1, e(5, 0)}}), InputError);
    CHECK_THROWS_AS(LieAlgebra::from_brackets(5, {{1, 1, e(5, 0)}}), InputError);
    CHECK_THROWS_AS(LieAlgebra::from_brackets(5, {{0, 1, e(4, 0)}}), InputError);
    try {
        LieAlgebra::from_brackets(5, {{0, 1, e(5, 4)}, {0, 1, e(5, 3)}});
        FAIL("duplicate accepted");
    } catch (const InputError& err) {
        CHECK(std::string(err.what()).find("(1,2)") != std::string::npos);
    }
}

TEST_CASE("bracket examples") {
    CHECK(g51().bracket(e(5, 0), e(5, 1)) == e(5, 4));
    CHECK(g51().bracket(e(5, 1), e(5, 0)) == scale(e(5, 4), Rational(-1)));
    const VectorQ u = vec({1, 2, 3, 4, 5});
    CHECK(is_zero(g51().bracket(u, u)));
    const LieAlgebra g534 = build(FamilyId::G5_3_4);
    CHECK(g534.bracket(e(5, 1), e(5, 3)) == e(5, 3));
    CHECK_THROWS(g51().bracket(e(4, 0), e(5, 1)));
}

TEST_CASE("antisymmetry and bilinearity on random inputs") {
    oracle::Rng rng(21);
    for (const auto& [name, g] : oracle::catalog_instances()) {
        for (int t = 0; t < 10; ++t) {
            const VectorQ u = rng.vector(5), v = rng.vector(5), w = rng.vector(5);
            const Rational a = rng.rational(), b = rng.rational();
            REQUIRE(g.bracket(u, v) == scale(g.bracket(v, u), Rational(-1)));
            const VectorQ lhs = g.bracket(add(scale(u, a), scale(w, b)), v);
            const VectorQ rhs = add(scale(g.bracket(u, v), a), scale(g.bracket(w, v), b));
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("jacobi_check") {
    CHECK(jacobi_check(g51()).ok);
    const LieAlgebra bad = LieAlgebra::from_brackets(3, {{0, 1, e(3, 0)}, {0, 2, e(3, 1)}});
    const JacobiReport r = jacobi_check(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.triple == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(r.defect == e(3, 1));
    CHECK_FALSE(bad.is_lie());
    CHECK_THROWS_AS(derived_series(bad), NotLieAlgebraError);
}

TEST_CASE("derived and lower central series") {
    CHECK(dims(derived_series(build(FamilyId::G5_3_4))) == std::vector<std::size_t>{5, 3, 0});
    CHECK(dims(derived_series(LieAlgebra::abelian(5))) == std::vector<std::size_t>{5, 0});
    CHECK(dims(derived_series(build(FamilyId::G5_4_5))) == std::vector<std::size_t>{5, 4, 0});
    CHECK(dims(lower_central_series(g51())) == std::vector<std::size_t>{5, 1, 0});
    CHECK(dims(lower_central_series(build(FamilyId::G5_4_5))) == std::vector<std::size_t>{5, 4});
}

TEST_CASE("center and centralizer") {
    const Subspace z = center(g51());
    CHECK(z.dim() == 1);
    CHECK(z.contains(e(5, 4)));
    CHECK(center(LieAlgebra::abelian(5)).dim() == 5);
    const LieAlgebra g534 = build(FamilyId::G5_3_4);
    const Subspace c = centralizer(g534, derived_algebra(g534));
    const std::vector<VectorQ> expect{e(5, 0), e(5, 2), e(5, 3), e(5, 4)};
    CHECK(c == Subspace::span(5, expect));
}

TEST_CASE("ad_restricted examples") {
    const LieAlgebra g532 = build(FamilyId::G5_3_2, FamilyParams::parse("l=2"));
    const VectorQ d{1, 1, 2};
    CHECK(ad_restricted(g532, e(5, 1), derived_algebra(g532)).matrix == MatrixQ::diagonal(d));
    const AdOperator z = ad_restricted(g51(), e(5, 4), Subspace::whole(5));
    CHECK(z.matrix == MatrixQ(5, 5));
    const LieAlgebra g5410 = build(FamilyId::G5_4_10);
    const MatrixQ jordan{{1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
    CHECK(ad_restricted(g5410, e(5, 0), derived_algebra(g5410)).matrix == jordan);
    const std::vector<VectorQ> line{e(5, 0)};
    CHECK_THROWS_AS(ad_restricted(g51(), e(5, 1), Subspace::span(5, line)), PreconditionError);
}

TEST_CASE("ad_commute_check") {
    const LieAlgebra g534 = build(FamilyId::G5_3_4);
    CHECK(ad_commute_check(g534, e(5, 0), e(5, 1)));
    oracle::Rng rng(22);
    for (int t = 0; t < 20; ++t) CHECK(ad_commute_check(g51(), rng.vector(5), rng.vector(5)));
    // sl2-like algebra: G^1 is everything and not commutative
    const LieAlgebra sl2 = LieAlgebra::from_brackets(
        3, {{0, 1, vec({0, 0, 1})}, {0, 2, vec({0, -2, 0})}, {1, 2, vec({2, 0, 0})}});
    REQUIRE(sl2.is_lie());
    CHECK_THROWS_AS(ad_commute_check(sl2, e(3, 0), e(3, 1)), PreconditionError);
    CHECK_FALSE(is_solvable(sl2));
}

TEST_CASE("change_of_basis examples") {
    const LieAlgebra g = g51();
    CHECK(change_of_basis(g, MatrixQ::identity(5)).same_structure(g));
    MatrixQ p = MatrixQ::identity(5);
    p(4, 4) = 2;
    const LieAlgebra h = change_of_basis(g, p);
    const VectorQ half = scale(e(5, 4), Rational(1, 2));
    CHECK(h.basis_bracket(0, 1) == half);
    CHECK(h.basis_bracket(2, 3) == half);
    CHECK_THROWS_AS(change_of_basis(g, MatrixQ(5, 5)), InputError);
}

TEST_CASE("transport is a homomorphism and preserves Jacobi for 50 random P") {
    oracle::Rng rng(23);
    const auto inst = oracle::catalog_instances();
    for (int t = 0; t < 50; ++t) {
        const auto& [name, g] = inst[static_cast<std::size_t>(t) % inst.size()];
        const MatrixQ p = rng.invertible(5);
        const LieAlgebra h = change_of_basis(g, p);
        REQUIRE(jacobi_check(h).ok == jacobi_check(g).ok);
        const VectorQ u = rng.vector(5), v = rng.vector(5);
        REQUIRE(p * h.bracket(u, v) == g.bracket(p * u, p * v));
    }
}

TEST_CASE("series and center dims are invariant under 20 basis changes per instance") {
    oracle::Rng rng(24);
    for (const auto& [name, g] : oracle::catalog_instances()) {
        const auto ds = dims(derived_series(g));
        const auto ls = dims(lower_central_series(g));
        const std::size_t zc = center(g).dim();
        for (int t = 0; t < 20; ++t) {
            const LieAlgebra h = change_of_basis(g, rng.invertible(5));
            REQUIRE(dims(derived_series(h)) == ds);
            REQUIRE(dims(lower_central_series(h)) == ls);
            REQUIRE(center(h).dim() == zc);
        }
    }
}

TEST_CASE("direct sums") {
    const LieAlgebra h = build(FamilyId::G5_4_5);
    const LieAlgebra s = direct_sum(h, LieAlgebra::abelian(1));
    CHECK(s.dim() == 6);
    CHECK(derived_algebra(s).dim() == derived_algebra(h).dim());
    CHECK(direct_sum(LieAlgebra::abelian(2), LieAlgebra::abelian(3)).brackets().empty());
    const LieAlgebra k = g521();
    const auto a = dims(derived_series(h)), b = dims(derived_series(k)), c = dims(derived_series(direct_sum(h, k)));
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(c[i] == (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0));
}

TEST_CASE("subspace canonical form") {
    const std::vector<VectorQ> a{vec({1, 1, 0}), vec({0, 1, 1})};
    const std::vector<VectorQ> b{vec({1, 0, -1}), vec({2, 3, 1})};
    CHECK(Subspace::span(3, a) == Subspace::span(3, b));
    CHECK(Subspace::span(3, a).dim() == 2);
    CHECK(Subspace::span(3, a).contains(vec({1, 2, 1})));
    CHECK_FALSE(Subspace::span(3, a).contains(e(3, 0)));
    const std::vector<VectorQ> c{e(3, 0)};
    CHECK(Subspace::span(3, a).intersect(Subspace::span(3, c)).dim() == 0);
    CHECK((Subspace::span(3, a) + Subspace::span(3, c)).dim() == 3);
}
