#pragma once

#include "mdlie/lie_algebra.hpp"
#include "mdlie/polynomial.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mdlie {

/// Element of the dual space in the dual basis X1*, ..., Xn*.
struct Covector {
    VectorQ coords;

    std::size_t dim() const { return coords.size(); }
    /// <F, u>
    Rational pair(std::span<const Rational> u) const { return dot(coords, u); }
    std::string str() const { return to_string(coords); }
    friend bool operator==(const Covector&, const Covector&) = default;
};

/// F o P: the covector in the basis X'_c = sum_r P(r,c) X_r, i.e. P^T F.
Covector transport(const Covector& f, const MatrixQ& p);

/// Matrix of B_F with b_ij = <F, [X_j, X_i]>.
MatrixQ b_form_at(const LieAlgebra& g, const Covector& f);

/// Dimension of the coadjoint orbit through F: rank of B_F.
std::size_t orbit_dim(const LieAlgebra& g, const Covector& f);

/// B_F with F left symbolic: entry (i, j) is a linear form in f1..fn.
class SymbolicKirillovForm {
public:
    explicit SymbolicKirillovForm(const LieAlgebra& g);

    std::size_t dim() const { return n_; }
    const PolyQ& entry(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    MatrixQ evaluate(const Covector& f) const;
    bool is_zero() const;

private:
    std::size_t n_;
    std::vector<PolyQ> entries_;
};

SymbolicKirillovForm b_form_symbolic(const LieAlgebra& g);

struct SubPfaffian {
    std::array<std::size_t, 4> indices;  ///< 0-based, increasing
    PolyQ value;
};

/// Pfaffians of all principal 4x4 submatrices (five of them when n = 5).
/// They all vanish identically iff rank B_F <= 2 for every F.
std::vector<SubPfaffian> pfaffian_system(const SymbolicKirillovForm& s);

struct GridSpec {
    int radius = 2;
    std::size_t extra_random_samples = 200;
    std::uint64_t seed = 1;
};

/// {-r..r}^n in lexicographic order, then seeded random rationals with
/// |numerator|, denominator <= 9.
std::vector<Covector> grid_points(std::size_t n, const GridSpec& grid);

/// Evaluates orbit dimensions quickly for repeated scans. Exact; for n <= 5 it
/// uses principal Pfaffians, otherwise fraction-free rank.
class OrbitDimEvaluator {
public:
    explicit OrbitDimEvaluator(const LieAlgebra& g);
    std::size_t operator()(const Covector& f) const;

private:
    std::size_t n_;
    // row-major strict upper triangle, b_ij as a linear form, all scaled by one
    // common denominator so evaluation runs on integers
    std::vector<std::vector<mpz_class>> forms_;
};

struct RankWitness {
    Covector f;
    std::size_t rank = 0;
};

enum class MdProof { PfaffianVanishing, ZeroForm, CommonFactor };
std::string to_string(MdProof p);

struct IsMD {
    std::size_t max_dim = 0;
    MdProof proof = MdProof::ZeroForm;
};

struct NotMD {
    RankWitness low;   ///< smallest nonzero rank observed
    RankWitness high;  ///< largest rank observed
};

struct Inconclusive {
    std::size_t max_rank_attained = 0;
    std::string pfaffian_status;
    std::size_t samples_tested = 0;
};

using MDVerdict = std::variant<IsMD, NotMD, Inconclusive>;

std::string verdict_kind(const MDVerdict& v);
/// Maximal orbit dimension when the verdict carries one (IsMD, or the high
/// witness of NotMD).
std::optional<std::size_t> verdict_max_dim(const MDVerdict& v);

/// Simplicity order used to pick witnesses: smaller total height first, then
/// fewer negative coordinates, then lexicographically larger coordinates.
bool simpler(const Covector& a, const Covector& b);

/// Decides whether G is an MD-algebra.
///  1. all sub-Pfaffians vanish, form nonzero     -> IsMD{2}
///  2. form identically zero                       -> IsMD{0}
///  3. every entry a multiple of one linear form l -> IsMD{rank where l != 0}
///  4. otherwise scan grid points and probe covectors (kernels of entry forms,
///     Pfaffian roots along random lines, weight covectors of ad on G^1); two
///     distinct nonzero ranks -> NotMD, else Inconclusive. Sampling never
///     yields IsMD.
/// Throws NotLieAlgebraError / NotSolvableError on precondition failure.
MDVerdict md_check(const LieAlgebra& g, const GridSpec& grid = {});

struct RankProfile {
    std::map<std::size_t, std::size_t> histogram;  ///< rank -> count
    std::map<std::size_t, Covector> witnesses;     ///< rank -> simplest covector
};

RankProfile rank_profile(const LieAlgebra& g, const GridSpec& grid);
RankProfile rank_profile(const LieAlgebra& g, std::span<const Covector> points);

/// First grid covector (in simplicity order) that does not vanish on G^1 yet
/// has orbit dimension != max_dim; nullopt when none exists.
std::optional<RankWitness> nonvanishing_violation(const LieAlgebra& g, const GridSpec& grid, std::size_t max_dim);

/// Same check with max_dim taken from md_check; throws PreconditionError
/// unless md_check returns IsMD.
std::optional<RankWitness> nonvanishing_maximality_check(const LieAlgebra& g, const GridSpec& grid = {});

}  // namespace mdlie
