#pragma once

#include "mdlie/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mdlie {

/// Sparse multivariate polynomial over Q in a fixed number of variables
/// f1..fn. Zero coefficients are never stored.
class PolyQ {
public:
    using Exponents = std::vector<unsigned>;

    PolyQ() = default;
    explicit PolyQ(std::size_t variables) : vars_(variables) {}

    static PolyQ constant(std::size_t variables, const Rational& c);
    /// The variable f_{index+1}.
    static PolyQ variable(std::size_t variables, std::size_t index);
    /// sum_i coeffs[i] * f_{i+1}
    static PolyQ linear(std::span<const Rational> coeffs);

    std::size_t variables() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Coefficient vector of a homogeneous linear form; throws otherwise.
    std::vector<Rational> linear_coefficients() const;

    Rational eval(std::span<const Rational> point) const;

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a);
    PolyQ scaled(const Rational& s) const;

    friend bool operator==(const PolyQ&, const PolyQ&) = default;

    /// e.g. "f4*f5 - 2*f5^2"; "0" for zero.
    std::string str() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    std::size_t vars_ = 0;
    std::map<Exponents, Rational> terms_;
};

}  // namespace mdlie
