#include "bang/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bang {

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (negative) {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const
{
    return value_.get_str(10);
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational binomial(unsigned long n, unsigned long k)
{
    if (k > n) {
        return Rational(0);
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

} // namespace bang
