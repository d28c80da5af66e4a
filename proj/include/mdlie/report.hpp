#pragma once

#include "mdlie/catalog.hpp"
#include "mdlie/json_io.hpp"
#include "mdlie/kirillov.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mdlie {

struct InstanceRecord {
    std::string name;  ///< sample label or file name
    std::optional<FamilyId> family;
    std::string params;

    JacobiReport jacobi;
    std::vector<std::size_t> derived_dims;
    bool derived_commutative = false;
    bool solvable = false;

    std::optional<MDVerdict> verdict;
    RankProfile profile;
    bool witnesses_verified = true;  ///< NotMD witnesses recomputed through the plain rank path

    std::optional<bool> commuting_adjoints;            ///< unset when G^1 is not commutative
    bool nonvanishing_checked = false;
    std::optional<RankWitness> nonvanishing_violation;

    // catalog only
    bool claimed_md = true;
    bool discrepancy = false;
    std::vector<std::string> failures;
};

/// Jacobi, series, verdict, rank profile and the lemma checks for one algebra.
/// Analysis stops after the Jacobi check when it fails.
InstanceRecord analyze(const LieAlgebra& g, const std::string& name, const GridSpec& grid);

struct CatalogReport {
    GridSpec grid;
    std::vector<InstanceRecord> instances;
    std::size_t families = 0;
    std::size_t rejected_not_md = 0;
    std::size_t discrepancies = 0;
    bool ok = false;
};

/// Runs every default sample. ok iff every expectation holds apart from the
/// known 5.2.2 discrepancy and both rejected specimens are NotMD.
CatalogReport verify_catalog(const GridSpec& grid);

Json to_json(const InstanceRecord& r);
Json to_json(const CatalogReport& r);
std::string render_text(const InstanceRecord& r);
std::string render_text(const CatalogReport& r);

}  // namespace mdlie
