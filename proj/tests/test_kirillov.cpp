#include "oracles.hpp"

#include "mdlie/errors.hpp"
#include "mdlie/kirillov.hpp"
#include "mdlie/linalg.hpp"
#include "mdlie/structure.hpp"

#include <doctest.h>

#include <set>

using namespace mdlie;

namespace {

Covector cv(std::initializer_list<Rational> v) { return Covector{VectorQ(v)}; }

std::size_t oracle_rank(const LieAlgebra& g, const Covector& f) {
    return g.dim() - oracle::kernel_gauss(oracle::kirillov_matrix(g, f.coords)).size();
}

const LieAlgebra& sl2() {
    static const LieAlgebra g = LieAlgebra::from_brackets(
        3, {{0, 1, VectorQ{0, 0, 1}}, {0, 2, VectorQ{0, -2, 0}}, {1, 2, VectorQ{2, 0, 0}}});
    return g;
}

}  // namespace

TEST_CASE("b_form_at examples") {
    const LieAlgebra g51 = build(FamilyId::G5_1);
    const MatrixQ b = b_form_at(g51, cv({0, 0, 0, 0, 1}));
    CHECK(b(1, 0) == Rational(1));
    CHECK(b(3, 2) == Rational(1));
    CHECK(b(0, 1) == Rational(-1));
    CHECK(b(2, 3) == Rational(-1));
    CHECK(rank(b) == 4);
    CHECK(b_form_at(g51, cv({0, 0, 0, 0, 0})) == MatrixQ(5, 5));

    const LieAlgebra g521 = build(FamilyId::G5_2_1);
    const MatrixQ b2 = b_form_at(g521, cv({0, 0, 0, 1, 1}));
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (!b2(i, j).is_zero()) {
                ++nonzero;
                CHECK((i == 1 || j == 1));
            }
    CHECK(nonzero == 4);
    CHECK(orbit_dim(g521, cv({0, 0, 0, 1, 1})) == 2);
    CHECK_THROWS(b_form_at(g51, cv({1, 2})));
}

TEST_CASE("orbit_dim examples") {
    CHECK(orbit_dim(build(FamilyId::G5_1), cv({0, 0, 0, 0, 1})) == 4);
    for (const auto& [name, g] : oracle::catalog_instances()) CHECK(orbit_dim(g, cv({0, 0, 0, 0, 0})) == 0);
    const LieAlgebra g545 = build(FamilyId::G5_4_5);
    const OrbitDimEvaluator eval(g545);
    for (const auto& f : grid_points(5, GridSpec{2, 0, 1})) {
        const std::size_t r = orbit_dim(g545, f);
        REQUIRE((r == 0 || r == 2));
        REQUIRE(eval(f) == r);
    }
}

TEST_CASE("symbolic form examples") {
    const SymbolicKirillovForm s51 = b_form_symbolic(build(FamilyId::G5_1));
    const PolyQ f5 = PolyQ::variable(5, 4);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            const PolyQ& e = s51.entry(i, j);
            if (!e.is_zero()) CHECK((e == f5 || e == -f5));
        }
    CHECK(b_form_symbolic(LieAlgebra::abelian(5)).is_zero());
    const SymbolicKirillovForm s534 = b_form_symbolic(build(FamilyId::G5_3_4));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            CHECK(s534.entry(i, j) == -s534.entry(j, i));
            const PolyQ& e = s534.entry(i, j);
            if (e.is_zero()) continue;
            CHECK((i < 2 || j < 2));
            const auto lc = e.linear_coefficients();
            CHECK(lc[0].is_zero());
            CHECK(lc[1].is_zero());
        }
}

TEST_CASE("pfaffian system examples") {
    for (const auto id : listed_families()) {
        if (family_group(id) != 3) continue;
        const Sample s = [&] {
            for (const auto& x : default_samples())
                if (x.id == id) return x;
            throw std::logic_error("missing sample");
        }();
        const auto pf = pfaffian_system(b_form_symbolic(build(s.id, s.params)));
        CHECK(pf.size() == 5);
        for (const auto& p : pf) CHECK(p.value.is_zero());
    }
    const PolyQ f4 = PolyQ::variable(5, 3), f5 = PolyQ::variable(5, 4);
    const auto p51 = pfaffian_system(b_form_symbolic(build(FamilyId::G5_1)));
    std::size_t nonzero = 0;
    for (const auto& p : p51)
        if (!p.value.is_zero()) {
            ++nonzero;
            CHECK((p.value == f5 * f5 || p.value == -(f5 * f5)));
        }
    CHECK(nonzero == 1);
    bool found = false;
    for (const auto& p : pfaffian_system(b_form_symbolic(build(FamilyId::Rejected5_2_3))))
        found = found || p.value == f4 * f5 || p.value == -(f4 * f5);
    CHECK(found);
}

TEST_CASE("md_check examples") {
    const MDVerdict v51 = md_check(build(FamilyId::G5_1));
    REQUIRE(std::holds_alternative<IsMD>(v51));
    CHECK(std::get<IsMD>(v51).max_dim == 4);
    CHECK(std::get<IsMD>(v51).proof == MdProof::CommonFactor);

    const MDVerdict v523 = md_check(build(FamilyId::Rejected5_2_3));
    REQUIRE(std::holds_alternative<NotMD>(v523));
    CHECK(std::get<NotMD>(v523).low.f == cv({0, 0, 0, 1, 0}));
    CHECK(std::get<NotMD>(v523).low.rank == 2);
    CHECK(std::get<NotMD>(v523).high.f == cv({0, 0, 0, 1, 1}));
    CHECK(std::get<NotMD>(v523).high.rank == 4);

    const MDVerdict v537 = md_check(build(FamilyId::G5_3_7));
    REQUIRE(std::holds_alternative<IsMD>(v537));
    CHECK(std::get<IsMD>(v537).max_dim == 2);
    CHECK(std::get<IsMD>(v537).proof == MdProof::PfaffianVanishing);

    CHECK(std::holds_alternative<NotMD>(md_check(build(FamilyId::Rejected3_2a))));

    const MDVerdict va = md_check(LieAlgebra::abelian(5));
    REQUIRE(std::holds_alternative<IsMD>(va));
    CHECK(std::get<IsMD>(va).max_dim == 0);
    CHECK(std::get<IsMD>(va).proof == MdProof::ZeroForm);

    CHECK_THROWS_AS(md_check(sl2()), NotSolvableError);
    const LieAlgebra bad = LieAlgebra::from_brackets(3, {{0, 1, VectorQ{1, 0, 0}}, {0, 2, VectorQ{0, 1, 0}}});
    CHECK_THROWS_AS(md_check(bad), NotLieAlgebraError);
}

TEST_CASE("family 5.2.2 has two distinct nonzero orbit dimensions") {
    for (const char* l : {"l=2", "l=-3", "l=1/7"}) {
        const LieAlgebra g = build(FamilyId::G5_2_2, FamilyParams::parse(l));
        const MatrixQ b4 = oracle::kirillov_matrix(g, VectorQ{0, 0, 0, 1, 0});
        const MatrixQ b5 = oracle::kirillov_matrix(g, VectorQ{0, 0, 0, 0, 1});
        CHECK(oracle::rank_by_minors(b4) == 2);
        CHECK(oracle::rank_by_minors(b5) == 4);
        const MDVerdict v = md_check(g);
        REQUIRE(std::holds_alternative<NotMD>(v));
        CHECK(std::get<NotMD>(v).low.f == cv({0, 0, 0, 1, 0}));
        CHECK(std::get<NotMD>(v).high.f == cv({0, 0, 0, 0, 1}));
    }
}

TEST_CASE("nonvanishing maximality") {
    CHECK_FALSE(nonvanishing_maximality_check(build(FamilyId::G5_2_1)));
    CHECK_FALSE(nonvanishing_maximality_check(build(FamilyId::G5_4_5)));
    CHECK_FALSE(nonvanishing_maximality_check(LieAlgebra::abelian(5)));
    CHECK_THROWS_AS(nonvanishing_maximality_check(build(FamilyId::Rejected5_2_3)), PreconditionError);
    const auto v = nonvanishing_violation(build(FamilyId::G5_2_2, FamilyParams::parse("l=2")), GridSpec{}, 4);
    REQUIRE(v.has_value());
    CHECK(v->rank == 2);
    CHECK(v->f == cv({0, 0, 0, 1, 0}));
}

TEST_CASE("rank_profile examples") {
    const RankProfile a = rank_profile(LieAlgebra::abelian(5), GridSpec{});
    CHECK(a.histogram.size() == 1);
    CHECK(a.histogram.at(0) == 3125 + 200);
    const RankProfile p = rank_profile(build(FamilyId::G5_1), GridSpec{1, 0, 1});
    CHECK(p.histogram.at(0) == 81);
    CHECK(p.histogram.at(4) == 162);
    const RankProfile r = rank_profile(build(FamilyId::Rejected5_2_3), GridSpec{});
    CHECK(r.histogram.at(2) > 0);
    CHECK(r.histogram.at(4) > 0);
}

TEST_CASE("grid enumeration order and determinism") {
    const auto pts = grid_points(2, GridSpec{1, 3, 7});
    REQUIRE(pts.size() == 12);
    CHECK(pts[0] == cv({-1, -1}));
    CHECK(pts[1] == cv({-1, 0}));
    CHECK(pts[8] == cv({1, 1}));
    const auto again = grid_points(2, GridSpec{1, 3, 7});
    CHECK(pts == again);
    for (std::size_t i = 9; i < 12; ++i)
        for (const auto& q : pts[i].coords) {
            CHECK(q.abs() <= Rational(9));
            CHECK(q.denominator() <= 9);
        }
    CHECK_THROWS_AS(grid_points(2, GridSpec{0, 0, 1}), InputError);
}

TEST_CASE("simplicity order") {
    CHECK(simpler(cv({0, 0, 0, 1, 0}), cv({0, 0, 0, 1, 1})));
    CHECK(simpler(cv({0, 1}), cv({0, -1})));
    CHECK(simpler(cv({1, 0}), cv({0, 1})));
    CHECK_FALSE(simpler(cv({1, 0}), cv({1, 0})));
}

TEST_CASE("evenness, coherence and the kernel oracle on 100 covectors per instance") {
    oracle::Rng rng(31);
    for (const auto& [name, g] : oracle::catalog_instances()) {
        CAPTURE(name);
        const SymbolicKirillovForm s = b_form_symbolic(g);
        const OrbitDimEvaluator eval(g);
        for (int t = 0; t < 100; ++t) {
            const Covector f{rng.vector(5)};
            const MatrixQ b = b_form_at(g, f);
            REQUIRE(s.evaluate(f) == b);
            REQUIRE(b == oracle::kirillov_matrix(g, f.coords));
            const std::size_t r = orbit_dim(g, f);
            REQUIRE(r % 2 == 0);
            REQUIRE(r == oracle_rank(g, f));
            REQUIRE(eval(f) == r);
        }
    }
}

TEST_CASE("verdicts agree with the exhaustive radius-2 oracle") {
    for (const auto& [name, g] : oracle::catalog_instances()) {
        CAPTURE(name);
        const MDVerdict v = md_check(g);
        const bool all_pf_zero = [&] {
            for (const auto& p : pfaffian_system(b_form_symbolic(g)))
                if (!p.value.is_zero()) return false;
            return true;
        }();
        std::set<std::size_t> seen;
        for (const auto& f : grid_points(5, GridSpec{2, 0, 1})) seen.insert(oracle_rank(g, f));
        if (all_pf_zero) CHECK_FALSE(seen.contains(4));
        if (const auto* is = std::get_if<IsMD>(&v)) {
            for (const auto r : seen) CHECK((r == 0 || r == is->max_dim));
        } else {
            REQUIRE(std::holds_alternative<NotMD>(v));
            const auto& no = std::get<NotMD>(v);
            CHECK(0 < no.low.rank);
            CHECK(no.low.rank < no.high.rank);
            CHECK(oracle::rank_by_minors(oracle::kirillov_matrix(g, no.low.f.coords)) == no.low.rank);
            CHECK(oracle::rank_by_minors(oracle::kirillov_matrix(g, no.high.f.coords)) == no.high.rank);
            std::size_t nonzero = 0;
            for (const auto r : seen) nonzero += r != 0;
            CHECK(nonzero >= 2);
        }
    }
}

TEST_CASE("orbit dimensions are covariant under basis change") {
    oracle::Rng rng(32);
    const auto grid = grid_points(5, GridSpec{1, 0, 1});
    for (const auto& [name, g] : oracle::catalog_instances()) {
        CAPTURE(name);
        const MatrixQ p = rng.invertible(5);
        const LieAlgebra h = change_of_basis(g, p);
        std::vector<Covector> moved;
        for (const auto& f : grid) moved.push_back(transport(f, p));
        const RankProfile a = rank_profile(g, grid);
        const RankProfile b = rank_profile(h, moved);
        CHECK(a.histogram == b.histogram);
        for (std::size_t k = 0; k < grid.size(); k += 17) REQUIRE(orbit_dim(g, grid[k]) == orbit_dim(h, moved[k]));
    }
}
