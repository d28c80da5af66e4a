#include "mdlie/polynomial.hpp"

#include "mdlie/errors.hpp"

#include <numeric>

namespace mdlie {

PolyQ PolyQ::constant(std::size_t variables, const Rational& c) {
    PolyQ p(variables);
    p.add_term(Exponents(variables, 0), c);
    return p;
}

PolyQ PolyQ::variable(std::size_t variables, std::size_t index) {
    if (index >= variables) throw InputError("polynomial variable index out of range");
    PolyQ p(variables);
    Exponents e(variables, 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

PolyQ PolyQ::linear(std::span<const Rational> coeffs) {
    PolyQ p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int PolyQ::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0U)));
    return d;
}

std::vector<Rational> PolyQ::linear_coefficients() const {
    std::vector<Rational> out(vars_);
    for (const auto& [e, c] : terms_) {
        std::size_t hits = 0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] != 1) throw PreconditionError("not a linear form: " + str());
            ++hits;
            at = i;
        }
        if (hits != 1) throw PreconditionError("not a homogeneous linear form: " + str());
        out[at] = c;
    }
    return out;
}

Rational PolyQ::eval(std::span<const Rational> point) const {
    if (point.size() != vars_) throw InputError("polynomial evaluation arity mismatch");
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i)
            if (e[i]) term *= point[i].pow(e[i]);
        sum += term;
    }
    return sum;
}

void PolyQ::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (vars_ == 0) vars_ = o.vars_;
    if (!o.is_zero() && o.vars_ != vars_) throw InputError("polynomial variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) { return *this += -o; }

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    const std::size_t vars = std::max(a.vars_, b.vars_);
    PolyQ p(vars);
    if (a.is_zero() || b.is_zero()) return p;
    if (a.vars_ != b.vars_) throw InputError("polynomial variable count mismatch");
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            PolyQ::Exponents e(vars);
            for (std::size_t i = 0; i < vars; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

PolyQ operator-(const PolyQ& a) { return a.scaled(Rational(-1)); }

PolyQ PolyQ::scaled(const Rational& s) const {
    PolyQ p(vars_);
    for (const auto& [e, c] : terms_) p.add_term(e, c * s);
    return p;
}

std::string PolyQ::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    // descending exponent order reads like f1^2 + f1*f2 + ...
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += "f" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        const bool neg = c.sign() < 0;
        const Rational mag = c.abs();
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (mono.empty())
            s += mag.str();
        else if (mag == Rational(1))
            s += mono;
        else
            s += mag.str() + "*" + mono;
    }
    return s;
}

}  // namespace mdlie
