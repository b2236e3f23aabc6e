#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bang {

/// Exact rational scalar, always in lowest terms with a positive denominator.
///
/// Backed by GMP. Every arithmetic operation is exact; division by zero
/// throws std::domain_error.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long numerator, long denominator);
    explicit Rational(const mpz_class& integer) : value_(integer) {}

    /// Parses "p" or "p/q" with an optional leading '-'.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    mpq_class value_;
};

/// n! as an exact integer.
Rational factorial(unsigned long n);

/// Binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned long n, unsigned long k);

} // namespace bang
