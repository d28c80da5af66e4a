#include "mdlie/catalog.hpp"

#include "mdlie/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace mdlie {

namespace {

struct FamilyInfo {
    FamilyId id;
    const char* name;
    std::size_t group;
    std::size_t lambdas;
    bool mu;
    bool angle;
};

constexpr std::array<FamilyInfo, 27> kFamilies{{
    {FamilyId::G5_1, "5.1", 1, 0, false, false},
    {FamilyId::G5_2_1, "5.2.1", 2, 0, false, false},
    {FamilyId::G5_2_2, "5.2.2", 2, 1, false, false},
    {FamilyId::G5_3_1, "5.3.1", 3, 2, false, false},
    {FamilyId::G5_3_2, "5.3.2", 3, 1, false, false},
    {FamilyId::G5_3_3, "5.3.3", 3, 1, false, false},
    {FamilyId::G5_3_4, "5.3.4", 3, 0, false, false},
    {FamilyId::G5_3_5, "5.3.5", 3, 1, false, false},
    {FamilyId::G5_3_6, "5.3.6", 3, 1, false, false},
    {FamilyId::G5_3_7, "5.3.7", 3, 0, false, false},
    {FamilyId::G5_3_8, "5.3.8", 3, 1, false, true},
    {FamilyId::G5_4_1, "5.4.1", 4, 3, false, false},
    {FamilyId::G5_4_2, "5.4.2", 4, 2, false, false},
    {FamilyId::G5_4_3, "5.4.3", 4, 1, false, false},
    {FamilyId::G5_4_4, "5.4.4", 4, 1, false, false},
    {FamilyId::G5_4_5, "5.4.5", 4, 0, false, false},
    {FamilyId::G5_4_6, "5.4.6", 4, 2, false, false},
    {FamilyId::G5_4_7, "5.4.7", 4, 1, false, false},
    {FamilyId::G5_4_8, "5.4.8", 4, 1, false, false},
    {FamilyId::G5_4_9, "5.4.9", 4, 1, false, false},
    {FamilyId::G5_4_10, "5.4.10", 4, 0, false, false},
    {FamilyId::G5_4_11, "5.4.11", 4, 2, false, true},
    {FamilyId::G5_4_12, "5.4.12", 4, 1, false, true},
    {FamilyId::G5_4_13, "5.4.13", 4, 1, false, true},
    {FamilyId::G5_4_14, "5.4.14", 4, 1, true, true},
    {FamilyId::Rejected5_2_3, "rejected.5.2.3", 2, 0, false, false},
    {FamilyId::Rejected3_2a, "rejected.3.2a", 3, 0, false, false},
}};

const FamilyInfo& info(FamilyId id) {
    for (const auto& f : kFamilies)
        if (f.id == id) return f;
    throw std::logic_error("unknown family id");
}

Rational q(long n, long d = 1) { return Rational(n, d); }

/// Parameter symbol as printed: "λ" for a single lambda, "λ1".."λ3" otherwise.
std::string lambda_name(const FamilyInfo& f, std::size_t i) {
    return f.lambdas == 1 ? std::string("λ") : "λ" + std::to_string(i + 1);
}

MatrixQ block_diag(const std::vector<MatrixQ>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.rows();
    MatrixQ out(n, n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

MatrixQ scalar(const Rational& x) { return MatrixQ{{x}}; }
MatrixQ jordan(const Rational& x, std::size_t size) {
    MatrixQ m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = x;
        if (i + 1 < size) m(i, i + 1) = 1;
    }
    return m;
}
MatrixQ rotation(const UnitPoint& a) { return MatrixQ{{a.cos(), -a.sin()}, {a.sin(), a.cos()}}; }

/// Brackets [x, basis[c]] = sum_r m(r, c) basis[r] for a fixed generator x.
void add_action(std::vector<Bracket>& out, std::size_t n, std::size_t x, const std::vector<std::size_t>& basis,
                const MatrixQ& m) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
        VectorQ v(n);
        for (std::size_t r = 0; r < basis.size(); ++r) v[basis[r]] = m(r, c);
        if (is_zero(v)) continue;
        if (x < basis[c])
            out.push_back({x, basis[c], std::move(v)});
        else
            out.push_back({basis[c], x, scale(v, Rational(-1))});
    }
}

VectorQ e(std::size_t k) { return unit_vector(5, k); }

}  // namespace

std::string to_string(FamilyId id) { return info(id).name; }

FamilyId parse_family_id(std::string_view text) {
    for (const auto& f : kFamilies)
        if (text == f.name) return f.id;
    throw InputError("unknown family id \"" + std::string(text) + "\"");
}

const std::vector<FamilyId>& listed_families() {
    static const std::vector<FamilyId> ids = [] {
        std::vector<FamilyId> v;
        for (const auto& f : kFamilies)
            if (!is_rejected(f.id)) v.push_back(f.id);
        return v;
    }();
    return ids;
}

bool is_rejected(FamilyId id) { return id == FamilyId::Rejected5_2_3 || id == FamilyId::Rejected3_2a; }

std::size_t family_group(FamilyId id) { return info(id).group; }

FamilyParams FamilyParams::parse(std::string_view text) {
    FamilyParams p;
    std::array<std::optional<Rational>, 3> lambdas;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw InputError("parameter \"" + std::string(item) + "\" is not key=value");
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (key == "l" || key == "l1")
            lambdas[0] = Rational::parse(value);
        else if (key == "l2")
            lambdas[1] = Rational::parse(value);
        else if (key == "l3")
            lambdas[2] = Rational::parse(value);
        else if (key == "mu")
            p.mu = Rational::parse(value);
        else if (key == "angle")
            p.angle = UnitPoint::parse(value);
        else
            throw InputError("unknown parameter \"" + std::string(key) + "\"");
    }
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!lambdas[i]) {
            for (std::size_t j = i + 1; j < lambdas.size(); ++j)
                if (lambdas[j]) throw InputError("l" + std::to_string(j + 1) + " given without l" + std::to_string(i + 1));
            break;
        }
        p.lambdas.push_back(*lambdas[i]);
    }
    return p;
}

std::string FamilyParams::str() const {
    std::vector<std::string> parts;
    if (lambdas.size() == 1)
        parts.push_back("l=" + lambdas[0].str());
    else
        for (std::size_t i = 0; i < lambdas.size(); ++i) parts.push_back("l" + std::to_string(i + 1) + "=" + lambdas[i].str());
    if (mu) parts.push_back("mu=" + mu->str());
    if (angle) parts.push_back("angle=" + angle->str());
    std::string s;
    for (const auto& x : parts) s += (s.empty() ? "" : ",") + x;
    return s;
}

std::optional<std::string> validate_params(FamilyId id, const FamilyParams& p) {
    const FamilyInfo& f = info(id);
    if (p.lambdas.size() != f.lambdas)
        return f.name + std::string(" expects ") + std::to_string(f.lambdas) + " λ parameter(s), got " + std::to_string(p.lambdas.size());
    if (f.mu != p.mu.has_value()) return std::string(f.name) + (f.mu ? " requires μ" : " takes no μ");
    if (f.angle != p.angle.has_value()) return std::string(f.name) + (f.angle ? " requires an angle φ ∈ (0, π)" : " takes no angle");

    const auto& l = p.lambdas;
    auto not_value = [&](std::size_t i, long v) -> std::optional<std::string> {
        if (l[i] == Rational(v)) return lambda_name(f, i) + " ≠ " + std::to_string(v);
        return std::nullopt;
    };
    auto distinct = [&](std::size_t i, std::size_t j) -> std::optional<std::string> {
        if (l[i] == l[j]) return lambda_name(f, i) + " ≠ " + lambda_name(f, j);
        return std::nullopt;
    };
    std::vector<std::function<std::optional<std::string>()>> clauses;
    auto not_in = [&](std::size_t i, std::initializer_list<long> values) {
        for (long v : values) clauses.push_back([=, &not_value] { return not_value(i, v); });
    };
    auto differ = [&](std::size_t i, std::size_t j) { clauses.push_back([=, &distinct] { return distinct(i, j); }); };

    switch (id) {
        case FamilyId::G5_2_2: not_in(0, {0}); break;
        case FamilyId::G5_3_1:
            not_in(0, {1});
            not_in(1, {1});
            differ(0, 1);
            not_in(1, {0});
            break;
        case FamilyId::G5_3_2:
        case FamilyId::G5_3_6: not_in(0, {0, 1}); break;
        case FamilyId::G5_3_3:
        case FamilyId::G5_3_5: not_in(0, {1}); break;
        case FamilyId::G5_3_8: not_in(0, {0}); break;
        case FamilyId::G5_4_1:
            not_in(0, {0, 1});
            not_in(1, {0, 1});
            not_in(2, {0, 1});
            differ(0, 1);
            differ(1, 2);
            differ(2, 0);
            break;
        case FamilyId::G5_4_2:
        case FamilyId::G5_4_6:
            not_in(0, {0, 1});
            not_in(1, {0, 1});
            differ(0, 1);
            break;
        case FamilyId::G5_4_3:
        case FamilyId::G5_4_4:
        case FamilyId::G5_4_7:
        case FamilyId::G5_4_8:
        case FamilyId::G5_4_9: not_in(0, {0, 1}); break;
        case FamilyId::G5_4_11:
            not_in(0, {0});
            not_in(1, {0});
            differ(0, 1);
            break;
        case FamilyId::G5_4_12:
        case FamilyId::G5_4_13: not_in(0, {0}); break;
        case FamilyId::G5_4_14:
            if (p.mu->sign() <= 0) return std::string("μ > 0");
            break;
        default: break;
    }
    for (const auto& c : clauses)
        if (auto v = c()) return v;
    return std::nullopt;
}

std::optional<MatrixQ> printed_ad_matrix(FamilyId id, const FamilyParams& p) {
    if (auto v = validate_params(id, p)) throw InputError(to_string(id) + ": " + *v);
    const auto& l = p.lambdas;
    auto lam = [&](std::size_t i) { return scalar(l[i]); };
    switch (id) {
        case FamilyId::G5_3_1: return MatrixQ::diagonal(std::vector<Rational>{l[0], l[1], q(1)});
        case FamilyId::G5_3_2: return MatrixQ::diagonal(std::vector<Rational>{q(1), q(1), l[0]});
        case FamilyId::G5_3_3: return MatrixQ::diagonal(std::vector<Rational>{l[0], q(1), q(1)});
        case FamilyId::G5_3_4: return MatrixQ::identity(3);
        case FamilyId::G5_3_5: return block_diag({lam(0), jordan(q(1), 2)});
        case FamilyId::G5_3_6: return block_diag({jordan(q(1), 2), lam(0)});
        case FamilyId::G5_3_7: return jordan(q(1), 3);
        case FamilyId::G5_3_8: return block_diag({rotation(*p.angle), lam(0)});
        case FamilyId::G5_4_1: return MatrixQ::diagonal(std::vector<Rational>{l[0], l[1], l[2], q(1)});
        case FamilyId::G5_4_2: return MatrixQ::diagonal(std::vector<Rational>{l[0], l[1], q(1), q(1)});
        case FamilyId::G5_4_3: return MatrixQ::diagonal(std::vector<Rational>{l[0], l[0], q(1), q(1)});
        case FamilyId::G5_4_4: return MatrixQ::diagonal(std::vector<Rational>{l[0], q(1), q(1), q(1)});
        case FamilyId::G5_4_5: return MatrixQ::identity(4);
        case FamilyId::G5_4_6: return block_diag({lam(0), lam(1), jordan(q(1), 2)});
        case FamilyId::G5_4_7: return block_diag({lam(0), lam(0), jordan(q(1), 2)});
        case FamilyId::G5_4_8: return block_diag({jordan(l[0], 2), jordan(q(1), 2)});
        case FamilyId::G5_4_9: return block_diag({lam(0), jordan(q(1), 3)});
        case FamilyId::G5_4_10: return jordan(q(1), 4);
        case FamilyId::G5_4_11: return block_diag({rotation(*p.angle), lam(0), lam(1)});
        case FamilyId::G5_4_12: return block_diag({rotation(*p.angle), lam(0), lam(0)});
        case FamilyId::G5_4_13: return block_diag({rotation(*p.angle), jordan(l[0], 2)});
        case FamilyId::G5_4_14:
            return block_diag({rotation(*p.angle), MatrixQ{{l[0], -*p.mu}, {*p.mu, l[0]}}});
        default: return std::nullopt;
    }
}

LieAlgebra build(FamilyId id, const FamilyParams& p) {
    if (auto v = validate_params(id, p)) throw InputError(to_string(id) + ": " + *v);
    constexpr std::size_t n = 5;
    std::vector<Bracket> b;
    switch (id) {
        case FamilyId::G5_1:
            b = {{0, 1, e(4)}, {2, 3, e(4)}};
            break;
        case FamilyId::G5_2_1:
            b = {{0, 1, e(3)}, {1, 2, e(4)}};
            break;
        case FamilyId::G5_2_2:
            b = {{0, 1, e(4)}, {1, 2, scale(e(3), p.lambdas[0])}, {2, 3, e(4)}};
            break;
        case FamilyId::Rejected5_2_3:
            b = {{0, 1, e(4)}, {2, 3, e(3)}};
            break;
        case FamilyId::Rejected3_2a:
            add_action(b, n, 0, {2, 3, 4}, MatrixQ::diagonal(std::vector<Rational>{q(1), q(2), q(0)}));
            add_action(b, n, 1, {2, 3, 4}, MatrixQ::diagonal(std::vector<Rational>{q(2), q(3), q(1)}));
            break;
        default:
            if (family_group(id) == 3) {
                b.push_back({0, 1, e(2)});
                add_action(b, n, 1, {2, 3, 4}, *printed_ad_matrix(id, p));
            } else {
                add_action(b, n, 0, {1, 2, 3, 4}, *printed_ad_matrix(id, p));
            }
    }
    std::sort(b.begin(), b.end(), [](const Bracket& x, const Bracket& y) { return std::pair(x.i, x.j) < std::pair(y.i, y.j); });
    return LieAlgebra::from_brackets(n, b);
}

std::string Sample::label() const {
    const std::string ps = params.str();
    return ps.empty() ? to_string(id) : to_string(id) + "(" + ps + ")";
}

std::vector<Sample> default_samples() {
    std::vector<Sample> out;
    const std::vector<UnitPoint> angles{UnitPoint(q(3, 5), q(4, 5)), UnitPoint(q(-3, 5), q(4, 5))};
    for (const auto& f : kFamilies) {
        std::vector<std::vector<Rational>> lambda_sets;
        switch (f.lambdas) {
            case 0: lambda_sets = {{}}; break;
            case 1: lambda_sets = {{q(2)}, {q(-3)}}; break;
            case 2: lambda_sets = {{q(2), q(3)}}; break;
            default: lambda_sets = {{q(2), q(3), q(5)}}; break;
        }
        std::vector<std::optional<UnitPoint>> angle_set{std::nullopt};
        if (f.angle) angle_set = {angles[0], angles[1]};
        for (const auto& ls : lambda_sets)
            for (const auto& a : angle_set) {
                FamilyParams p{ls, f.mu ? std::optional<Rational>(q(1)) : std::nullopt, a};
                out.push_back({f.id, std::move(p)});
            }
    }
    return out;
}

std::vector<Sample> family_representatives() {
    std::vector<Sample> out;
    for (auto& s : default_samples()) {
        if (is_rejected(s.id)) continue;
        if (!out.empty() && out.back().id == s.id) continue;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace mdlie
