#include "mdlie/rational.hpp"

#include "mdlie/errors.hpp"

#include <cctype>

namespace mdlie {

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InputError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw InputError("not a rational number: \"" + std::string(whole) + "\"");
    mpz_class z(std::string(s), 10);
    return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text), mpz_class(1));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw InputError("denominator must be unsigned: \"" + std::string(text) + "\"");
    const mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw InputError("zero denominator: \"" + std::string(text) + "\"");
    return Rational(parse_integer(text.substr(0, slash), text), den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw PreconditionError("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(unsigned e) const {
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw PreconditionError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

bool rational_root(const Rational& value, unsigned k, Rational& root) {
    if (k == 0) return false;
    if (k % 2 == 0 && value.sign() < 0) return false;
    const mpz_class num = value.numerator();
    const mpz_class den = value.denominator();
    mpz_class abs_num = ::abs(num);
    mpz_class rn;
    mpz_class rd;
    if (mpz_root(rn.get_mpz_t(), abs_num.get_mpz_t(), k) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return false;
    if (num < 0) rn = -rn;
    root = Rational(rn, rd);
    return true;
}

}  // namespace mdlie
