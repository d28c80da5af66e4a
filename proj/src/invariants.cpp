#include "mdlie/invariants.hpp"

#include "mdlie/errors.hpp"
#include "mdlie/linalg.hpp"
#include "mdlie/structure.hpp"

#include <algorithm>

namespace mdlie {

ScaledSimilarityClass scaled_similarity_class(const MatrixQ& a) {
    ScaledSimilarityClass cls;
    const auto factors = invariant_factors(a);
    struct Raw {
        std::size_t factor;
        unsigned weight;
        Rational value;
    };
    std::vector<Raw> raw;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const int d = factors[i].degree();
        cls.factor_degrees.push_back(d);
        for (int w = 1; w <= d; ++w) {
            const Rational c = factors[i].coefficient(static_cast<std::size_t>(d - w));
            if (!c.is_zero()) raw.push_back({i, static_cast<unsigned>(w), c});
        }
    }
    if (raw.empty()) return cls;
    const Raw ref = *std::min_element(raw.begin(), raw.end(), [](const Raw& x, const Raw& y) {
        return std::pair(x.weight, x.factor) < std::pair(y.weight, y.factor);
    });
    for (const auto& r : raw)
        cls.normalized.push_back({r.factor, r.weight, r.value.pow(ref.weight) / ref.value.pow(r.weight)});
    if (ref.weight % 2 == 0) cls.reference_sign = ref.value.sign();
    return cls;
}

namespace {

Fingerprint::Spectral spectral_data(const LieAlgebra& g, const Subspace& g1) {
    Fingerprint::Spectral s;
    const std::size_t n = g.dim();
    const std::size_t m = g1.dim();
    s.image_dim = bracket_span(g, Subspace::whole(n), g1).dim();
    s.joint_kernel_dim = centralizer(g, Subspace::whole(n)).intersect(g1).dim();
    if (m == 0) return s;

    std::vector<MatrixQ> ops;
    std::vector<VectorQ> flat;
    for (std::size_t i = 0; i < n; ++i) {
        MatrixQ a = ad_restricted(g, unit_vector(n, i), g1).matrix;
        VectorQ v;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) v.push_back(a(r, c));
        flat.push_back(std::move(v));
        ops.push_back(std::move(a));
    }
    s.operator_space_dim = rank(MatrixQ::from_rows(flat, m * m));
    if (s.operator_space_dim == 1) {
        for (const auto& a : ops)
            if (!a.is_zero()) {
                s.generator = scaled_similarity_class(a);
                break;
            }
    }
    return s;
}

}  // namespace

Fingerprint fingerprint(const LieAlgebra& g, std::span<const Covector> histogram_points) {
    g.require_lie("fingerprint");
    Fingerprint fp;
    const auto ds = derived_series(g);
    const Subspace g1 = ds.size() > 1 ? ds[1] : ds[0];
    fp.dims.dim = g.dim();
    fp.dims.derived = dims(ds);
    fp.dims.lower_central = dims(lower_central_series(g));
    fp.dims.center = center(g).dim();
    fp.dims.centralizer_of_derived = centralizer(g, g1).dim();

    const auto pfs = pfaffian_system(b_form_symbolic(g));
    fp.kirillov.pfaffians_all_zero =
        std::all_of(pfs.begin(), pfs.end(), [](const SubPfaffian& p) { return p.value.is_zero(); });
    if (ds.back().dim() == 0) {
        const MDVerdict v = md_check(g);
        fp.kirillov.verdict = verdict_kind(v);
        fp.kirillov.max_dim = verdict_max_dim(v);
    } else {
        fp.kirillov.verdict = "not-solvable";
    }
    fp.kirillov.histogram = rank_profile(g, histogram_points).histogram;
    fp.spectral = spectral_data(g, g1);
    return fp;
}

Fingerprint fingerprint(const LieAlgebra& g) {
    const auto pts = grid_points(g.dim(), GridSpec{2, 0, 1});
    return fingerprint(g, pts);
}

std::optional<std::string> first_difference(const Fingerprint& a, const Fingerprint& b, bool include_histogram) {
    if (a.dims.dim != b.dims.dim) return "dims.dim";
    if (a.dims.derived != b.dims.derived) return "dims.derived";
    if (a.dims.lower_central != b.dims.lower_central) return "dims.lower_central";
    if (a.dims.center != b.dims.center) return "dims.center";
    if (a.dims.centralizer_of_derived != b.dims.centralizer_of_derived) return "dims.centralizer_of_derived";
    if (a.kirillov.verdict != b.kirillov.verdict) return "kirillov.verdict";
    if (a.kirillov.max_dim != b.kirillov.max_dim) return "kirillov.max_dim";
    if (a.kirillov.pfaffians_all_zero != b.kirillov.pfaffians_all_zero) return "kirillov.pfaffians_all_zero";
    if (include_histogram && a.kirillov.histogram != b.kirillov.histogram) return "kirillov.histogram";
    if (a.spectral.operator_space_dim != b.spectral.operator_space_dim) return "spectral.operator_space_dim";
    if (a.spectral.joint_kernel_dim != b.spectral.joint_kernel_dim) return "spectral.joint_kernel_dim";
    if (a.spectral.image_dim != b.spectral.image_dim) return "spectral.image_dim";
    if (a.spectral.generator != b.spectral.generator) return "spectral.generator";
    return std::nullopt;
}

std::string outcome_name(const IsoResult& r) {
    if (std::holds_alternative<Iso>(r)) return "Iso";
    if (std::holds_alternative<NotIso>(r)) return "NotIso";
    return "Inconclusive";
}

namespace {

struct Codim1Data {
    Subspace g1;
    VectorQ complement;
    MatrixQ ad;  // ad_complement on g1 in its echelon basis
};

Codim1Data codim1_data(const LieAlgebra& g, const char* which) {
    g.require_lie("iso_test_codim1");
    const Subspace g1 = derived_algebra(g);
    if (g1.dim() + 1 != g.dim() || !is_commutative(g, g1))
        throw PreconditionError(std::string("iso_test_codim1: algebra ") + which +
                                " does not have a commutative derived algebra of codimension one");
    VectorQ x = unit_vector(g.dim(), g1.complement_indices().front());
    MatrixQ ad = ad_restricted(g, x, g1).matrix;
    return {g1, std::move(x), std::move(ad)};
}

std::vector<Rational> scaling_candidates(const MatrixQ& a, const MatrixQ& b) {
    const UPoly pa = char_poly(a);
    const UPoly pb = char_poly(b);
    const int m = pa.degree();
    for (int w = 1; w <= m; ++w) {
        const Rational ca = pa.coefficient(static_cast<std::size_t>(m - w));
        const Rational cb = pb.coefficient(static_cast<std::size_t>(m - w));
        if (ca.is_zero() != cb.is_zero()) return {};
        if (ca.is_zero()) continue;
        Rational root;
        if (!rational_root(cb / ca, static_cast<unsigned>(w), root)) return {};
        if (w % 2 == 1) return {root};
        return {root, -root};
    }
    return {};  // both nilpotent: excluded by the codimension-one precondition
}

MatrixQ columns_matrix(const std::vector<VectorQ>& cols, std::size_t n) { return MatrixQ::from_columns(cols, n); }

}  // namespace

IsoResult iso_test_codim1(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.dim() != b.dim()) return NotIso{"dims.dim", "dimensions differ"};
    const Codim1Data da = codim1_data(a, "A");
    const Codim1Data db = codim1_data(b, "B");
    if (scaled_similarity_class(da.ad) != scaled_similarity_class(db.ad))
        return NotIso{"spectral.generator", "ad of a complement vector is not similar to any rescaling"};

    const std::size_t n = a.dim();
    for (const Rational& c : scaling_candidates(da.ad, db.ad)) {
        const MatrixQ scaled = da.ad.scaled(c);
        if (invariant_factors(scaled) != invariant_factors(db.ad)) continue;
        const FrobeniusForm fa = frobenius_form(scaled);
        const FrobeniusForm fb = frobenius_form(db.ad);
        const MatrixQ q = *inverse(fb.transform) * fa.transform;  // q (c M_A) q^-1 = M_B

        std::vector<VectorQ> src{da.complement};
        for (const auto& v : da.g1.vectors()) src.push_back(v);
        std::vector<VectorQ> dst{scale(db.complement, c.inverse())};
        const MatrixQ hb = columns_matrix(db.g1.vectors(), n);
        const MatrixQ hq = hb * q;
        for (std::size_t j = 0; j < hq.cols(); ++j) dst.push_back(hq.column(j));
        const MatrixQ phi = columns_matrix(dst, n) * *inverse(columns_matrix(src, n));
        MatrixQ witness = *inverse(phi);
        if (!change_of_basis(a, witness).same_structure(b))
            throw std::logic_error("iso_test_codim1: assembled witness does not verify");
        return Iso{std::move(witness)};
    }
    return IsoInconclusive{"classes agree but no rational rescaling relates the operators"};
}

namespace {

struct CentralSplit {
    MatrixQ adapted;   // columns: z, then a basis of H
    LieAlgebra quotient;
};

std::optional<CentralSplit> central_split(const LieAlgebra& g) {
    const Subspace z = center(g);
    const Subspace g1 = derived_algebra(g);
    if (z.dim() != 1 || g1.contains(z)) return std::nullopt;
    const std::size_t n = g.dim();
    const VectorQ zv = z.vectors().front();
    std::vector<VectorQ> h = g1.vectors();
    std::vector<VectorQ> probe = h;
    probe.push_back(zv);
    for (std::size_t i = 0; i < n && probe.size() < n; ++i) {
        probe.push_back(unit_vector(n, i));
        if (rank(MatrixQ::from_rows(probe, n)) == probe.size())
            h.push_back(probe.back());
        else
            probe.pop_back();
    }
    std::vector<VectorQ> cols{zv};
    cols.insert(cols.end(), h.begin(), h.end());
    const MatrixQ adapted = MatrixQ::from_columns(cols, n);
    const LieAlgebra in_adapted = change_of_basis(g, adapted);
    std::vector<Bracket> qb;
    for (const auto& br : in_adapted.brackets()) {
        if (br.i == 0) throw std::logic_error("central_split: adapted generator is not central");
        if (!br.value[0].is_zero()) throw std::logic_error("central_split: complement is not an ideal");
        qb.push_back({br.i - 1, br.j - 1, VectorQ(br.value.begin() + 1, br.value.end())});
    }
    return CentralSplit{adapted, LieAlgebra::from_brackets(n - 1, qb)};
}

bool codim1_applies(const LieAlgebra& g) {
    if (!g.is_lie()) return false;
    const Subspace g1 = derived_algebra(g);
    return g1.dim() + 1 == g.dim() && is_commutative(g, g1);
}

}  // namespace

IsoResult iso_test_central_split(const LieAlgebra& a, const LieAlgebra& b) {
    a.require_lie("iso_test_central_split");
    b.require_lie("iso_test_central_split");
    if (a.dim() != b.dim()) return NotIso{"dims.dim", "dimensions differ"};
    const auto sa = central_split(a);
    const auto sb = central_split(b);
    if (!sa || !sb) return IsoInconclusive{"no one-dimensional center outside the derived algebra"};
    if (!codim1_applies(sa->quotient) || !codim1_applies(sb->quotient))
        return IsoInconclusive{"quotient by the center is not of codimension-one type"};

    const IsoResult inner = iso_test_codim1(sa->quotient, sb->quotient);
    if (const auto* no = std::get_if<NotIso>(&inner))
        return NotIso{"center-quotient." + no->field, "quotients by the center are not isomorphic"};
    if (const auto* inc = std::get_if<IsoInconclusive>(&inner)) return IsoInconclusive{"center quotient: " + inc->reason};

    const MatrixQ& ph = std::get<Iso>(inner).witness;
    const std::size_t n = a.dim();
    MatrixQ lifted(n, n);
    lifted(0, 0) = 1;
    for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = 0; j < n - 1; ++j) lifted(i + 1, j + 1) = ph(i, j);
    MatrixQ witness = sa->adapted * lifted * *inverse(sb->adapted);
    if (!change_of_basis(a, witness).same_structure(b))
        throw std::logic_error("iso_test_central_split: assembled witness does not verify");
    return Iso{std::move(witness)};
}

PairOutcome separate_pair(const LieAlgebra& a, const Fingerprint& fa, const LieAlgebra& b, const Fingerprint& fb) {
    PairOutcome out;
    if (auto field = first_difference(fa, fb)) {
        out.outcome = "separated";
        out.field = *field;
        return out;
    }
    out.fingerprints_equal = true;
    const IsoResult r = codim1_applies(a) && codim1_applies(b) ? iso_test_codim1(a, b) : iso_test_central_split(a, b);
    if (std::holds_alternative<Iso>(r)) {
        out.outcome = "iso-witnessed";
    } else if (const auto* no = std::get_if<NotIso>(&r)) {
        out.outcome = "separated";
        out.field = no->field;
    } else {
        out.outcome = "unresolved";
        out.field = std::get<IsoInconclusive>(r).reason;
    }
    return out;
}

SeparationReport separation_matrix(const std::vector<NamedAlgebra>& instances) {
    SeparationReport rep;
    std::vector<Fingerprint> fps;
    for (const auto& inst : instances) {
        rep.labels.push_back(inst.label);
        fps.push_back(fingerprint(inst.algebra));
    }
    for (std::size_t i = 0; i < instances.size(); ++i)
        for (std::size_t j = i + 1; j < instances.size(); ++j) {
            PairOutcome p = separate_pair(instances[i].algebra, fps[i], instances[j].algebra, fps[j]);
            p.a = i;
            p.b = j;
            rep.pairs.push_back(std::move(p));
        }
    return rep;
}

}  // namespace mdlie
