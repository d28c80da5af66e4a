// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "oracles.hpp"

#include "mdlie/invariants.hpp"
#include "mdlie/kirillov.hpp"
#include "mdlie/linalg.hpp"
#include "mdlie/report.hpp"
#include "mdlie/structure.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

using namespace mdlie;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Orbit rank from the independent kernel computation.
std::size_t oracle_rank(const LieAlgebra& g, const VectorQ& f) {
    return g.dim() - oracle::kernel_gauss(oracle::kirillov_matrix(g, f)).size();
}

std::string fstr(const VectorQ& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].str();
    return s + ")";
}

bool vanishes_on(const Covector& f, const Subspace& s) {
    for (std::size_t r = 0; r < s.dim(); ++r)
        if (!f.pair(s.basis().row(r)).is_zero()) return false;
    return true;
}

Outcome catalog_well_formed() {
    Outcome o;
    std::size_t families = 0, checked = 0;
    std::set<FamilyId> seen;
    for (const auto& s : default_samples()) {
        if (is_rejected(s.id)) continue;
        const LieAlgebra g = build(s.id, s.params);
        ++checked;
        seen.insert(s.id);
        std::string why;
        if (!jacobi_check(g).ok) why = "jacobi";
        // dim G^1 from the rank of all basis brackets, computed by minors
        std::vector<VectorQ> brackets;
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = i + 1; j < 5; ++j) brackets.push_back(g.basis_bracket(i, j));
        const std::size_t d1 = oracle::rank_by_minors(MatrixQ::from_rows(brackets, 5));
        if (why.empty() && d1 != family_group(s.id)) why = "dim G^1 = " + std::to_string(d1);
        const Subspace g1 = derived_algebra(g);
        for (std::size_t a = 0; why.empty() && a < g1.dim(); ++a)
            for (std::size_t b = a + 1; b < g1.dim(); ++b)
                if (!is_zero(g.bracket(g1.basis().row(a), g1.basis().row(b)))) why = "G^1 not commutative";
        if (why.empty() && derived_series(g).back().dim() != 0) why = "G^2 != 0";
        if (!why.empty()) {
            o.pass = false;
            o.detail += " " + s.label() + ":" + why;
        }
    }
    families = seen.size();
    if (families != 25) o.pass = false;
    o.detail = std::to_string(families) + " families, " + std::to_string(checked) + " samples" + o.detail;
    return o;
}

Outcome orbit_dim_oracle() {
    Outcome o;
    oracle::Rng rng(101);
    std::size_t n = 0;
    for (const auto& [name, g] : oracle::catalog_instances()) {
        for (int t = 0; t < 100; ++t, ++n) {
            const VectorQ f = rng.vector(5);
            const std::size_t got = orbit_dim(g, Covector{f}), want = oracle_rank(g, f);
            if (got != want) {
                o.pass = false;
                o.detail += " " + name + " F=" + fstr(f);
            }
        }
    }
    o.detail = std::to_string(n) + " covectors" + o.detail;
    return o;
}

Outcome codim1_random() {
    Outcome o;
    oracle::Rng rng(103);
    const auto grid = grid_points(5, GridSpec{2, 0, 1});
    std::map<std::string, std::size_t> proofs;
    for (int t = 0; t < 50; ++t) {
        MatrixQ a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = rng.rational(5, 4);
        std::vector<Bracket> br;
        for (std::size_t k = 0; k < 4; ++k) {
            VectorQ img(5);
            for (std::size_t r = 0; r < 4; ++r) img[r + 1] = a(r, k);
            if (!is_zero(img)) br.push_back({0, k + 1, img});
        }
        const LieAlgebra g = LieAlgebra::from_brackets(5, br);
        for (const auto& f : grid) {
            const std::size_t r = oracle_rank(g, f.coords);
            if (r != 0 && r != 2) {
                o.pass = false;
                o.detail += " sample " + std::to_string(t) + " F=" + fstr(f.coords) + " rank " + std::to_string(r);
                break;
            }
        }
        const MDVerdict v = md_check(g);
        const auto* is = std::get_if<IsMD>(&v);
        if (!is) {
            o.pass = false;
            o.detail += " sample " + std::to_string(t) + " verdict " + verdict_kind(v);
            continue;
        }
        ++proofs[to_string(is->proof)];
    }
    std::string p;
    for (const auto& [k, c] : proofs) p += " " + k + "=" + std::to_string(c);
    o.detail = "50 matrices x 3125 points, proofs:" + p + o.detail;
    return o;
}

Outcome group3_structural() {
    Outcome o;
    std::size_t n = 0;
    for (const auto& s : default_samples()) {
        if (is_rejected(s.id) || family_group(s.id) != 3) continue;
        ++n;
        const LieAlgebra g = build(s.id, s.params);
        const auto pfs = pfaffian_system(b_form_symbolic(g));
        const bool zero = std::all_of(pfs.begin(), pfs.end(), [](const SubPfaffian& p) { return p.value.is_zero(); });
        const MDVerdict v = md_check(g);
        const auto* is = std::get_if<IsMD>(&v);
        if (pfs.size() != 5 || !zero || !is || is->max_dim != 2) {
            o.pass = false;
            o.detail += " " + s.label();
        }
    }
    std::set<FamilyId> fams;
    for (const auto& s : default_samples())
        if (!is_rejected(s.id) && family_group(s.id) == 3) fams.insert(s.id);
    if (fams.size() != 8) o.pass = false;
    o.detail = std::to_string(fams.size()) + " families, " + std::to_string(n) + " samples" + o.detail;
    return o;
}

Outcome rejections() {
    Outcome o;
    for (const FamilyId id : {FamilyId::Rejected5_2_3, FamilyId::Rejected3_2a}) {
        const LieAlgebra g = build(id);
        const MDVerdict v = md_check(g);
        const auto* no = std::get_if<NotMD>(&v);
        o.detail += (o.detail.empty() ? "" : "; ") + to_string(id) + " " + verdict_kind(v);
        if (!no) {
            o.pass = false;
            continue;
        }
        const std::size_t lo = oracle::rank_by_minors(oracle::kirillov_matrix(g, no->low.f.coords));
        const std::size_t hi = oracle::rank_by_minors(oracle::kirillov_matrix(g, no->high.f.coords));
        o.detail += " " + fstr(no->low.f.coords) + "->" + std::to_string(lo) + " " + fstr(no->high.f.coords) + "->" +
                    std::to_string(hi);
        if (lo != 2 || hi != 4 || lo != no->low.rank || hi != no->high.rank) o.pass = false;
    }
    return o;
}

Outcome commuting_adjoints() {
    Outcome o;
    oracle::Rng rng(106);
    std::size_t inst = 0;
    for (const auto& [name, g] : oracle::catalog_instances()) {
        if (!is_commutative(g, derived_algebra(g))) continue;
        ++inst;
        for (int t = 0; t < 200; ++t)
            if (!ad_commute_check(g, rng.vector(5), rng.vector(5))) {
                o.pass = false;
                o.detail += " " + name;
                break;
            }
    }
    o.detail = std::to_string(inst) + " instances x 200 pairs" + o.detail;
    return o;
}

Outcome nonvanishing() {
    Outcome o;
    const GridSpec grid{2, 0, 1};
    const auto points = grid_points(5, grid);
    std::size_t inst = 0;
    std::string reported;
    for (const auto& s : default_samples()) {
        const LieAlgebra g = build(s.id, s.params);
        const Subspace g1 = derived_algebra(g);
        if (s.id == FamilyId::G5_2_2) {
            // claimed MD with maximal dimension 4; report the counterexample
            const auto w = nonvanishing_violation(g, grid, 4);
            if (!w || oracle_rank(g, w->f.coords) != w->rank || vanishes_on(w->f, g1)) {
                o.pass = false;
                o.detail += " " + s.label() + ":no counterexample";
            } else {
                reported += " " + s.label() + " F=" + fstr(w->f.coords) + " rank " + std::to_string(w->rank);
            }
            continue;
        }
        const MDVerdict v = md_check(g);
        const auto* is = std::get_if<IsMD>(&v);
        if (!is) continue;
        ++inst;
        for (const auto& f : points) {
            if (vanishes_on(f, g1)) continue;
            if (oracle_rank(g, f.coords) != is->max_dim) {
                o.pass = false;
                o.detail += " " + s.label() + " F=" + fstr(f.coords);
                break;
            }
        }
    }
    o.detail = std::to_string(inst) + " IsMD instances; discrepancy counterexamples:" + reported + o.detail;
    return o;
}

Outcome separation() {
    Outcome o;
    std::vector<NamedAlgebra> inst;
    for (const auto& s : family_representatives()) inst.push_back({s.label(), build(s.id, s.params)});
    const SeparationReport rep = separation_matrix(inst);
    std::size_t iso = 0, unresolved = 0, separated = 0;
    std::string iso_list, unresolved_list;
    for (const auto& p : rep.pairs) {
        const std::string pair = rep.labels[p.a] + "~" + rep.labels[p.b];
        if (p.outcome == "iso-witnessed") {
            ++iso;
            iso_list += " " + pair;
        } else if (p.outcome == "unresolved") {
            ++unresolved;
            unresolved_list += " " + pair + (p.fingerprints_equal ? "[fingerprints equal]" : "");
            if (p.fingerprints_equal) o.pass = false;
        } else {
            ++separated;
        }
    }
    if (iso > 0) o.pass = false;
    o.detail = std::to_string(rep.pairs.size()) + " pairs: " + std::to_string(separated) + " separated, " +
               std::to_string(iso) + " iso-witnessed across families," + iso_list + "; " + std::to_string(unresolved) +
               " unresolved" + (unresolved_list.empty() ? "" : ":" + unresolved_list);
    return o;
}

Outcome basis_invariance() {
    Outcome o;
    oracle::Rng rng(109);
    const auto grid = grid_points(5, GridSpec{2, 0, 1});
    std::size_t n = 0;
    for (const auto& [name, g] : oracle::catalog_instances()) {
        // the fingerprint carries the md_check verdict and maximal dimension
        const Fingerprint base = fingerprint(g, grid);
        for (int t = 0; t < 20; ++t, ++n) {
            const MatrixQ p = rng.invertible(5);
            std::vector<Covector> moved;
            for (const auto& f : grid) moved.push_back(transport(f, p));
            const auto d = first_difference(base, fingerprint(change_of_basis(g, p), moved), true);
            if (d) {
                o.pass = false;
                o.detail += " " + name + ":" + *d;
                break;
            }
        }
    }
    o.detail = std::to_string(n) + " basis changes" + o.detail;
    return o;
}

Outcome discrepancy() {
    Outcome o;
    const LieAlgebra g = build(FamilyId::G5_2_2, FamilyParams::parse("l=2"));
    const VectorQ f_low{0, 0, 0, 1, 0}, f_high{0, 0, 0, 0, 1};
    // brute-force minors first
    const std::size_t lo = oracle::rank_by_minors(oracle::kirillov_matrix(g, f_low));
    const std::size_t hi = oracle::rank_by_minors(oracle::kirillov_matrix(g, f_high));
    o.detail = "minors: " + fstr(f_low) + "->" + std::to_string(lo) + " " + fstr(f_high) + "->" + std::to_string(hi);
    if (lo != 2 || hi != 4) o.pass = false;

    const CatalogReport rep = verify_catalog(GridSpec{});
    const InstanceRecord* rec = nullptr;
    for (const auto& r : rep.instances)
        if (r.family == FamilyId::G5_2_2 && r.params == "l=2") rec = &r;
    if (!rec) {
        o.pass = false;
        o.detail += "; 5.2.2(l=2) missing from report";
        return o;
    }
    const auto* no = rec->verdict ? std::get_if<NotMD>(&*rec->verdict) : nullptr;
    const bool witnesses = no && no->low.f.coords == f_low && no->low.rank == 2 && no->high.f.coords == f_high &&
                           no->high.rank == 4 && rec->witnesses_verified;
    o.detail += std::string("; report: discrepancy ") + (rec->discrepancy ? "flagged" : "not flagged") + ", witnesses " +
                (witnesses ? "match" : "differ") + ", verify-catalog " + (rep.ok ? "ok" : "failed");
    if (!rec->discrepancy || !witnesses || !rep.ok) o.pass = false;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
        {1, catalog_well_formed}, {2, orbit_dim_oracle},    {3, codim1_random}, {4, group3_structural},
        {5, rejections},          {6, commuting_adjoints},  {7, nonvanishing},  {8, separation},
        {9, basis_invariance},    {10, discrepancy},
    };
    int failed = 0;
    for (const auto& [id, fn] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d: %s %s (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), s);
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
