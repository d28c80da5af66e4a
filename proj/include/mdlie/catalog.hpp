#pragma once

#include "mdlie/lie_algebra.hpp"
#include "mdlie/unit_point.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdlie {

/// The indecomposable 5-dimensional families with commutative derived
/// ideal, plus two rejected candidates kept as executable counterexamples.
enum class FamilyId {
    G5_1,
    G5_2_1,
    G5_2_2,
    G5_3_1, G5_3_2, G5_3_3, G5_3_4, G5_3_5, G5_3_6, G5_3_7, G5_3_8,
    G5_4_1, G5_4_2, G5_4_3, G5_4_4, G5_4_5, G5_4_6, G5_4_7,
    G5_4_8, G5_4_9, G5_4_10, G5_4_11, G5_4_12, G5_4_13, G5_4_14,
    Rejected5_2_3,
    Rejected3_2a,
};

/// Dotted id: "5.4.6", "rejected.5.2.3", "rejected.3.2a".
std::string to_string(FamilyId id);
/// Accepts the dotted ids; throws InputError otherwise.
FamilyId parse_family_id(std::string_view text);

/// The 25 non-rejected families in listing order.
const std::vector<FamilyId>& listed_families();
bool is_rejected(FamilyId id);
/// dim G^1 of the family: 1, 2, 3 or 4.
std::size_t family_group(FamilyId id);

struct FamilyParams {
    std::vector<Rational> lambdas;
    std::optional<Rational> mu;
    std::optional<UnitPoint> angle;

    /// "l1=2,l2=3,mu=1,angle=3/5:4/5"; "l" is accepted for "l1". Empty -> no parameters.
    static FamilyParams parse(std::string_view text);
    /// Inverse of parse (canonical key order, "l" for a single lambda).
    std::string str() const;
    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// First violated side condition, verbatim (e.g. "λ1 ≠ λ2"); nullopt when valid.
std::optional<std::string> validate_params(FamilyId id, const FamilyParams& p);

/// Structure constants exactly as listed. Throws InputError on invalid parameters.
///
/// Printed ad matrices act on coordinate columns: entry (r, c) is the
/// coefficient of basis vector r in the image of basis vector c, with basis
/// (X3, X4, X5) for group 3 and (X2, X3, X4, X5) for group 4.
LieAlgebra build(FamilyId id, const FamilyParams& p = {});

/// The listed matrix of ad_X2 (group 3) or ad_X1 (group 4) on G^1; nullopt for
/// groups 1 and 2.
std::optional<MatrixQ> printed_ad_matrix(FamilyId id, const FamilyParams& p);

struct Sample {
    FamilyId id;
    FamilyParams params;
    /// e.g. "5.3.2(l=2)" or "5.4.5"
    std::string label() const;
};

/// Deterministic parameter samples for every family and both rejected
/// specimens. One-parameter families at lambda in {2, -3}, two at (2, 3),
/// three at (2, 3, 5); angles at 3/5:4/5 and -3/5:4/5; mu = 1.
std::vector<Sample> default_samples();

/// The first default sample of each of the 25 listed families.
std::vector<Sample> family_representatives();

}  // namespace mdlie
