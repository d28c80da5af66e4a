#include "mdlie/upoly.hpp"

#include "mdlie/errors.hpp"

#include <algorithm>

namespace mdlie {

UPoly::UPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Rational UPoly::eval(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

UPoly UPoly::rescaled(const Rational& c) const {
    if (c.is_zero()) throw PreconditionError("rescaling by zero");
    // coefficient of t^k picks up c^(deg - k)
    std::vector<Rational> out(c_.size());
    const int d = degree();
    for (int k = 0; k <= d; ++k) out[k] = c_[k] * c.pow(static_cast<unsigned>(d - k));
    return UPoly(std::move(out));
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return UPoly(std::move(out));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(Rational(-1)); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(out));
}

UPoly UPoly::scaled(const Rational& s) const {
    std::vector<Rational> out = c_;
    for (auto& x : out) x *= s;
    return UPoly(std::move(out));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
    if (divisor.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Rational> rem = c_;
    const int dd = divisor.degree();
    if (degree() < dd) return {UPoly(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rational inv_lead = divisor.leading().inverse();
    for (int k = degree(); k >= dd; --k) {
        const Rational q = rem[k] * inv_lead;
        if (q.is_zero()) continue;
        quot[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.c_[j];
    }
    return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

std::string UPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        const Rational& a = c_[k];
        if (a.is_zero()) continue;
        const bool neg = a.sign() < 0;
        const Rational mag = a.abs();
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (k == 0 || mag != Rational(1)) s += mag.str();
        if (k > 0) {
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
    constexpr unsigned long kTrialLimit = 100000;
    n = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (unsigned long d = 2; d <= kTrialLimit && mpz_class(d) * d <= n; ++d) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
            ++e;
        }
        if (e) factors.emplace_back(mpz_class(d), e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> out{1};
    for (const auto& [prime, e] : factors) {
        const std::size_t base = out.size();
        mpz_class pw = 1;
        for (unsigned k = 0; k < e; ++k) {
            pw *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
        }
    }
    return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    std::vector<Rational> c = p.coefficients();
    std::size_t low = 0;
    while (c[low].is_zero()) ++low;
    if (low > 0) roots.push_back(Rational(0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
    if (c.size() >= 2) {
        mpz_class den = 1;
        for (const auto& q : c) den = lcm(den, q.denominator());
        const mpz_class a0 = (c.front() * Rational(mpq_class(den))).numerator();
        const mpz_class an = (c.back() * Rational(mpq_class(den))).numerator();
        const UPoly reduced(c);
        for (const auto& num : divisors(a0))
            for (const auto& d : divisors(an))
                for (const int sign : {1, -1}) {
                    const Rational r(mpz_class(num * sign), d);
                    if (reduced.eval(r).is_zero()) roots.push_back(r);
                }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace mdlie
