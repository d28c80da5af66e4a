#pragma once

#include "mdlie/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mdlie {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree order with no trailing zeros. The zero polynomial has no coefficients.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> ascending);
    static UPoly constant(const Rational& c) { return UPoly({c}); }
    /// t - root
    static UPoly linear(const Rational& root) { return UPoly({-root, Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
    const Rational& leading() const { return c_.back(); }

    UPoly monic() const;
    Rational eval(const Rational& t) const;
    /// p(c t) / c^deg, i.e. the characteristic-polynomial transform under M -> c M
    /// applied to a monic polynomial.
    UPoly rescaled(const Rational& c) const;

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Rational& s) const;

    /// Euclidean division: returns (quotient, remainder).
    std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
    friend bool operator==(const UPoly&, const UPoly&) = default;

    std::string str(const char* var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// Distinct rational roots in increasing order, by the rational root theorem.
/// Integer factors beyond the trial-division limit are treated as prime, so
/// roots with huge numerators or denominators may be missed, never invented.
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace mdlie
