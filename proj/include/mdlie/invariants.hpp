#pragma once

#include "mdlie/kirillov.hpp"
#include "mdlie/lie_algebra.hpp"
#include "mdlie/upoly.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mdlie {

/// Similarity class of an operator A up to rational rescaling A -> cA.
/// Under rescaling the coefficient of t^(d-w) in an invariant factor of
/// degree d picks up c^w; with reference coefficient r of least weight w0,
/// each a^w0 / r^w is unchanged.
struct ScaledSimilarityClass {
    std::vector<int> factor_degrees;
    struct Entry {
        std::size_t factor;
        unsigned weight;
        Rational value;  ///< a^w0 / r^w
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> normalized;
    /// sign(r) when w0 is even (rescaling cannot flip it), else 0
    int reference_sign = 0;

    friend bool operator==(const ScaledSimilarityClass&, const ScaledSimilarityClass&) = default;
};

ScaledSimilarityClass scaled_similarity_class(const MatrixQ& a);

struct Fingerprint {
    struct Dims {
        std::size_t dim = 0;
        std::vector<std::size_t> derived;
        std::vector<std::size_t> lower_central;
        std::size_t center = 0;
        std::size_t centralizer_of_derived = 0;
        friend bool operator==(const Dims&, const Dims&) = default;
    } dims;

    struct Kirillov {
        std::string verdict;
        std::optional<std::size_t> max_dim;
        bool pfaffians_all_zero = false;
        /// rank -> count over the radius-2 grid; depends on the basis unless the
        /// grid is transported with it, so separation does not use it.
        std::map<std::size_t, std::size_t> histogram;
        friend bool operator==(const Kirillov&, const Kirillov&) = default;
    } kirillov;

    struct Spectral {
        /// dim of {ad_Y restricted to G^1 : Y in G}
        std::size_t operator_space_dim = 0;
        /// dim of the common kernel of that space inside G^1
        std::size_t joint_kernel_dim = 0;
        /// dim [G, G^1]
        std::size_t image_dim = 0;
        /// class of a generator when the operator space is a line
        std::optional<ScaledSimilarityClass> generator;
        friend bool operator==(const Spectral&, const Spectral&) = default;
    } spectral;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Histogram over the plain radius-2 grid.
Fingerprint fingerprint(const LieAlgebra& g);
/// Histogram over the given covectors (pass a transported grid to compare
/// across a change of basis).
Fingerprint fingerprint(const LieAlgebra& g, std::span<const Covector> histogram_points);

/// Name of the first basis-invariant field that differs ("dims.derived",
/// "spectral.generator", ...). The histogram is compared only when asked.
std::optional<std::string> first_difference(const Fingerprint& a, const Fingerprint& b, bool include_histogram = false);

struct Iso {
    /// change_of_basis(A, witness) has exactly B's structure constants.
    MatrixQ witness;
};
struct NotIso {
    std::string field;
    std::string detail;
};
struct IsoInconclusive {
    std::string reason;
};
using IsoResult = std::variant<Iso, NotIso, IsoInconclusive>;

std::string outcome_name(const IsoResult& r);

/// Both algebras must have a commutative derived algebra of codimension one
/// (PreconditionError otherwise). Then A ~ B iff ad of a complement vector of
/// B on G^1 is similar to c times that of A for some rational c != 0.
IsoResult iso_test_codim1(const LieAlgebra& a, const LieAlgebra& b);

/// For algebras with a one-dimensional center outside G^1: G = Z (+) H with
/// H = G/Z, and A ~ B iff the quotients are isomorphic (decided by
/// iso_test_codim1 when it applies). Inconclusive in every other case.
IsoResult iso_test_central_split(const LieAlgebra& a, const LieAlgebra& b);

struct NamedAlgebra {
    std::string label;
    LieAlgebra algebra;
};

struct PairOutcome {
    std::size_t a = 0;
    std::size_t b = 0;
    std::string outcome;  ///< "separated" | "iso-witnessed" | "unresolved"
    std::string field;    ///< distinguishing field, or the unresolved reason
    bool fingerprints_equal = false;
};

struct SeparationReport {
    std::vector<std::string> labels;
    std::vector<PairOutcome> pairs;  ///< (a, b) with a < b, in row-major order
};

PairOutcome separate_pair(const LieAlgebra& a, const Fingerprint& fa, const LieAlgebra& b, const Fingerprint& fb);
SeparationReport separation_matrix(const std::vector<NamedAlgebra>& instances);

}  // namespace mdlie
