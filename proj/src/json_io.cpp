#include "mdlie/json_io.hpp"

#include "mdlie/errors.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace mdlie {

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw InputError((path.empty() ? std::string("/") : path) + ": " + what);
}

std::size_t index_from_json(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_error(path, "expected an integer");
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    const auto v = j.get<long long>();
    if (v < 0) schema_error(path, "expected a positive index");
    return static_cast<std::size_t>(v);
}

void reject_unknown(const Json& obj, std::initializer_list<const char*> known, const std::string& path) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) schema_error(path + "/" + key, "unknown field");
    }
}

Json witness_json(const Covector& f, std::size_t rank) { return Json{{"F", to_json(f.coords)}, {"rank", rank}}; }

}  // namespace

Json to_json(const Rational& q) {
    if (q.is_integer() && q.numerator().fits_slong_p()) return Json(q.numerator().get_si());
    return Json(q.str());
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) return Rational(mpq_class(mpz_class(std::to_string(j.get<unsigned long long>()))));
        return Rational(static_cast<long>(j.get<long long>()));
    }
    if (!j.is_string()) schema_error(path, "expected a rational (integer or \"p/q\" string)");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const InputError& e) {
        schema_error(path, e.what());
    }
}

Json to_json(std::span<const Rational> v) {
    Json arr = Json::array();
    for (const auto& q : v) arr.push_back(to_json(q));
    return arr;
}

Json to_json(const MatrixQ& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
    return rows;
}

VectorQ vector_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array");
    VectorQ v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], path + "/" + std::to_string(i)));
    return v;
}

Json to_json(const LieAlgebra& g) {
    Json brackets = Json::array();
    for (const auto& b : g.brackets()) {
        Json coeffs = Json::object();
        for (std::size_t k = 0; k < b.value.size(); ++k)
            if (!b.value[k].is_zero()) coeffs[std::to_string(k + 1)] = to_json(b.value[k]);
        brackets.push_back(Json{{"i", b.i + 1}, {"j", b.j + 1}, {"coeffs", coeffs}});
    }
    return Json{{"dim", g.dim()}, {"basis", g.basis_names()}, {"brackets", brackets}};
}

LieAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object()) schema_error("", "expected an object");
    reject_unknown(j, {"dim", "basis", "brackets"}, "");
    if (!j.contains("dim")) schema_error("/dim", "missing");
    const std::size_t n = index_from_json(j["dim"], "/dim");
    if (n == 0) schema_error("/dim", "dimension must be positive");

    std::vector<std::string> names;
    if (j.contains("basis")) {
        const Json& b = j["basis"];
        if (!b.is_array()) schema_error("/basis", "expected an array of names");
        if (b.size() != n) schema_error("/basis", "expected " + std::to_string(n) + " names");
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!b[i].is_string()) schema_error("/basis/" + std::to_string(i), "expected a string");
            names.push_back(b[i].get<std::string>());
        }
    }

    std::vector<Bracket> brackets;
    if (j.contains("brackets")) {
        const Json& arr = j["brackets"];
        if (!arr.is_array()) schema_error("/brackets", "expected an array");
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (std::size_t idx = 0; idx < arr.size(); ++idx) {
            const std::string p = "/brackets/" + std::to_string(idx);
            const Json& e = arr[idx];
            if (!e.is_object()) schema_error(p, "expected an object");
            reject_unknown(e, {"i", "j", "coeffs"}, p);
            for (const char* key : {"i", "j", "coeffs"})
                if (!e.contains(key)) schema_error(p + "/" + key, "missing");
            const std::size_t i = index_from_json(e["i"], p + "/i");
            const std::size_t jj = index_from_json(e["j"], p + "/j");
            if (i < 1 || i > n) schema_error(p + "/i", "index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
            if (jj < 1 || jj > n) schema_error(p + "/j", "index " + std::to_string(jj) + " out of range 1.." + std::to_string(n));
            if (i >= jj) schema_error(p, "bracket (" + std::to_string(i) + "," + std::to_string(jj) + ") must have i < j");
            if (!seen.emplace(i, jj).second)
                schema_error(p, "duplicate bracket (" + std::to_string(i) + "," + std::to_string(jj) + ")");
            const Json& c = e["coeffs"];
            if (!c.is_object()) schema_error(p + "/coeffs", "expected an object");
            VectorQ value(n);
            for (const auto& [key, val] : c.items()) {
                const std::string cp = p + "/coeffs/" + key;
                std::size_t k = 0;
                try {
                    std::size_t used = 0;
                    k = std::stoul(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    schema_error(cp, "coefficient key must be a basis index");
                }
                if (k < 1 || k > n) schema_error(cp, "index " + key + " out of range 1.." + std::to_string(n));
                value[k - 1] = rational_from_json(val, cp);
            }
            brackets.push_back({i - 1, jj - 1, std::move(value)});
        }
    }
    return LieAlgebra::from_brackets(n, brackets, names);
}

LieAlgebra parse_algebra(std::string_view text, const std::string& source) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        // drop the library's own "[id] parse error at line L, column C: " prefix
        if (const auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }
    try {
        return algebra_from_json(j);
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    }
}

LieAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_algebra(ss.str(), path);
}

Json to_json(const MDVerdict& v, const RankProfile* profile) {
    Json out;
    out["verdict"] = verdict_kind(v);
    out["proof"] = nullptr;
    Json witnesses = Json::array();
    if (const auto* is = std::get_if<IsMD>(&v)) {
        out["max_dim"] = is->max_dim;
        out["proof"] = to_string(is->proof);
        if (profile)
            for (const auto& [rank, f] : profile->witnesses) witnesses.push_back(witness_json(f, rank));
    } else if (const auto* no = std::get_if<NotMD>(&v)) {
        out["max_dim"] = no->high.rank;
        witnesses.push_back(witness_json(no->low.f, no->low.rank));
        witnesses.push_back(witness_json(no->high.f, no->high.rank));
    } else {
        const auto& inc = std::get<Inconclusive>(v);
        out["max_dim"] = inc.max_rank_attained;
        if (profile)
            for (const auto& [rank, f] : profile->witnesses) witnesses.push_back(witness_json(f, rank));
    }
    out["witnesses"] = witnesses;
    Json hist = Json::object();
    if (profile)
        for (const auto& [rank, count] : profile->histogram) hist[std::to_string(rank)] = count;
    out["histogram"] = hist;
    return out;
}

Json to_json(const Fingerprint& fp) {
    Json hist = Json::object();
    for (const auto& [rank, count] : fp.kirillov.histogram) hist[std::to_string(rank)] = count;
    Json gen = nullptr;
    if (fp.spectral.generator) {
        Json entries = Json::array();
        for (const auto& e : fp.spectral.generator->normalized)
            entries.push_back(Json{{"factor", e.factor}, {"weight", e.weight}, {"value", to_json(e.value)}});
        gen = Json{{"factor_degrees", fp.spectral.generator->factor_degrees},
                   {"normalized", entries},
                   {"reference_sign", fp.spectral.generator->reference_sign}};
    }
    return Json{
        {"dims",
         {{"dim", fp.dims.dim},
          {"derived", fp.dims.derived},
          {"lower_central", fp.dims.lower_central},
          {"center", fp.dims.center},
          {"centralizer_of_derived", fp.dims.centralizer_of_derived}}},
        {"kirillov",
         {{"verdict", fp.kirillov.verdict},
          {"max_dim", fp.kirillov.max_dim ? Json(*fp.kirillov.max_dim) : Json(nullptr)},
          {"pfaffians_all_zero", fp.kirillov.pfaffians_all_zero},
          {"histogram", hist}}},
        {"spectral",
         {{"operator_space_dim", fp.spectral.operator_space_dim},
          {"joint_kernel_dim", fp.spectral.joint_kernel_dim},
          {"image_dim", fp.spectral.image_dim},
          {"generator", gen}}},
    };
}

Json to_json(const SeparationReport& r) {
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(Json{{"a", r.labels[p.a]}, {"b", r.labels[p.b]}, {"outcome", p.outcome}, {"field", p.field}});
    return Json{{"pairs", pairs}};
}

Json to_json(const IsoResult& r) {
    Json out{{"outcome", outcome_name(r)}};
    if (const auto* iso = std::get_if<Iso>(&r))
        out["witness"] = to_json(iso->witness);
    else if (const auto* no = std::get_if<NotIso>(&r)) {
        out["field"] = no->field;
        out["detail"] = no->detail;
    } else
        out["reason"] = std::get<IsoInconclusive>(r).reason;
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mdlie
