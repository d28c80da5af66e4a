#include "mdlie/report.hpp"

#include "mdlie/errors.hpp"
#include "mdlie/structure.hpp"

#include <random>
#include <set>
#include <sstream>

namespace mdlie {

namespace {

constexpr std::size_t kCommutePairs = 20;

VectorQ random_vector(std::mt19937_64& rng, std::size_t n) {
    VectorQ v(n);
    for (auto& x : v) x = Rational(static_cast<long>(rng() % 7) - 3);
    return v;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// Families whose listed MD claim is known to disagree with the computation.
const std::set<FamilyId>& known_discrepancies() {
    static const std::set<FamilyId> ids{FamilyId::G5_2_2};
    return ids;
}

}  // namespace

InstanceRecord analyze(const LieAlgebra& g, const std::string& name, const GridSpec& grid) {
    InstanceRecord r;
    r.name = name;
    r.jacobi = jacobi_check(g);
    if (!r.jacobi.ok) return r;

    const auto ds = derived_series(g);
    r.derived_dims = dims(ds);
    r.solvable = ds.back().dim() == 0;
    const Subspace g1 = ds.size() > 1 ? ds[1] : ds[0];
    r.derived_commutative = is_commutative(g, g1);
    if (!r.solvable) return r;

    r.verdict = md_check(g, grid);
    r.profile = rank_profile(g, grid);
    if (const auto* no = std::get_if<NotMD>(&*r.verdict))
        r.witnesses_verified = orbit_dim(g, no->low.f) == no->low.rank && orbit_dim(g, no->high.f) == no->high.rank;

    if (r.derived_commutative) {
        std::mt19937_64 rng(grid.seed);
        bool ok = true;
        for (std::size_t k = 0; k < kCommutePairs; ++k) {
            const VectorQ x = random_vector(rng, g.dim());
            const VectorQ y = random_vector(rng, g.dim());
            ok = ok && ad_commute_check(g, x, y);
        }
        r.commuting_adjoints = ok;
    }

    if (const auto max = verdict_max_dim(*r.verdict)) {
        r.nonvanishing_checked = true;
        r.nonvanishing_violation = nonvanishing_violation(g, grid, *max);
    }
    return r;
}

CatalogReport verify_catalog(const GridSpec& grid) {
    CatalogReport rep;
    rep.grid = grid;
    std::set<FamilyId> families;
    bool ok = true;
    for (const Sample& s : default_samples()) {
        const LieAlgebra g = build(s.id, s.params);
        InstanceRecord r = analyze(g, s.label(), grid);
        r.family = s.id;
        r.params = s.params.str();
        r.claimed_md = !is_rejected(s.id);
        if (!is_rejected(s.id)) families.insert(s.id);

        auto expect = [&](bool cond, const std::string& what) {
            if (!cond) r.failures.push_back(what);
        };
        expect(r.jacobi.ok, "jacobi identity fails");
        if (r.jacobi.ok) {
            if (r.claimed_md) {
                expect(r.derived_dims.size() == 3 && r.derived_dims[1] == family_group(s.id) && r.derived_dims[2] == 0,
                       "derived series " + join(r.derived_dims) + " does not match the family group");
                expect(r.derived_commutative, "derived algebra not commutative");
                expect(r.commuting_adjoints.value_or(false), "adjoints do not commute on G^1");
            }
            expect(r.verdict.has_value(), "algebra is not solvable");
            expect(r.witnesses_verified, "witness ranks do not recompute");
        }
        if (r.verdict) {
            const std::string kind = verdict_kind(*r.verdict);
            r.discrepancy = r.claimed_md ? kind == "NotMD" : kind == "IsMD";
            if (r.discrepancy) {
                ++rep.discrepancies;
                if (!known_discrepancies().contains(s.id)) r.failures.push_back("unexpected discrepancy: " + kind);
            } else if (r.claimed_md) {
                expect(kind == "IsMD", "verdict " + kind);
                expect(!r.nonvanishing_violation, "a covector not vanishing on G^1 misses the maximal rank");
            } else {
                expect(kind == "NotMD", "rejected specimen not refuted: " + kind);
                if (kind == "NotMD") ++rep.rejected_not_md;
            }
        }
        ok = ok && r.failures.empty();
        rep.instances.push_back(std::move(r));
    }
    rep.families = families.size();
    rep.ok = ok && rep.families == 25 && rep.rejected_not_md == 2;
    return rep;
}

Json to_json(const InstanceRecord& r) {
    Json out;
    out["name"] = r.name;
    if (r.family) {
        out["family"] = to_string(*r.family);
        out["params"] = r.params;
        out["claimed_md"] = r.claimed_md;
        out["discrepancy"] = r.discrepancy;
        out["failures"] = r.failures;
    }
    Json jac{{"ok", r.jacobi.ok}};
    if (!r.jacobi.ok) {
        jac["triple"] = {r.jacobi.triple[0] + 1, r.jacobi.triple[1] + 1, r.jacobi.triple[2] + 1};
        jac["defect"] = to_json(r.jacobi.defect);
    }
    out["jacobi"] = jac;
    out["derived_dims"] = r.derived_dims;
    out["derived_commutative"] = r.derived_commutative;
    out["solvable"] = r.solvable;
    out["md"] = r.verdict ? to_json(*r.verdict, &r.profile) : Json(nullptr);
    out["witnesses_verified"] = r.witnesses_verified;
    Json lemmas;
    lemmas["commuting_adjoints"] = r.commuting_adjoints ? Json(*r.commuting_adjoints) : Json(nullptr);
    if (!r.nonvanishing_checked)
        lemmas["nonvanishing_maximality"] = nullptr;
    else if (r.nonvanishing_violation)
        lemmas["nonvanishing_maximality"] =
            Json{{"F", to_json(r.nonvanishing_violation->f.coords)}, {"rank", r.nonvanishing_violation->rank}};
    else
        lemmas["nonvanishing_maximality"] = "pass";
    out["lemma_checks"] = lemmas;
    return out;
}

Json to_json(const CatalogReport& r) {
    Json instances = Json::array();
    for (const auto& i : r.instances) instances.push_back(to_json(i));
    return Json{{"grid", {{"radius", r.grid.radius}, {"samples", r.grid.extra_random_samples}, {"seed", r.grid.seed}}},
                {"instances", instances},
                {"summary",
                 {{"instances", r.instances.size()},
                  {"families", r.families},
                  {"rejected_not_md", r.rejected_not_md},
                  {"discrepancies", r.discrepancies},
                  {"ok", r.ok}}}};
}

std::string render_text(const InstanceRecord& r) {
    std::ostringstream os;
    os << r.name << ": ";
    if (!r.jacobi.ok) {
        os << "Jacobi fails at (" << r.jacobi.triple[0] + 1 << "," << r.jacobi.triple[1] + 1 << ","
           << r.jacobi.triple[2] + 1 << ") defect " << to_string(r.jacobi.defect) << "\n";
        return os.str();
    }
    os << "derived dims " << join(r.derived_dims);
    if (!r.verdict) {
        os << ", not solvable\n";
        return os.str();
    }
    const MDVerdict& v = *r.verdict;
    os << ", " << verdict_kind(v);
    if (const auto* is = std::get_if<IsMD>(&v)) os << " max " << is->max_dim << " (" << to_string(is->proof) << ")";
    if (const auto* no = std::get_if<NotMD>(&v))
        os << " F=" << no->low.f.str() << " -> " << no->low.rank << ", F=" << no->high.f.str() << " -> " << no->high.rank;
    if (const auto* inc = std::get_if<Inconclusive>(&v))
        os << " max rank seen " << inc->max_rank_attained << ", " << inc->pfaffian_status;
    os << ", histogram {";
    bool first = true;
    for (const auto& [rank, count] : r.profile.histogram) {
        os << (first ? "" : ", ") << rank << ": " << count;
        first = false;
    }
    os << "}";
    if (r.nonvanishing_violation)
        os << ", nonvanishing counterexample F=" << r.nonvanishing_violation->f.str() << " rank "
           << r.nonvanishing_violation->rank;
    if (r.discrepancy) os << "  [DISCREPANCY]";
    for (const auto& f : r.failures) os << "\n    FAIL: " << f;
    os << "\n";
    return os.str();
}

std::string render_text(const CatalogReport& r) {
    std::ostringstream os;
    for (const auto& i : r.instances) os << render_text(i);
    os << "\n" << r.instances.size() << " instances, " << r.families << " families, " << r.rejected_not_md
       << " rejected specimens NotMD, " << r.discrepancies << " discrepancies; seed " << r.grid.seed << "\n";
    os << (r.ok ? "catalog verified" : "catalog verification FAILED") << "\n";
    return os.str();
}

}  // namespace mdlie
