#pragma once

#include <map>
#include <set>
#include <span>
#include <string>

#include "bang/multiindex.hpp"
#include "bang/rational.hpp"
#include "bang/vector.hpp"

namespace bang {

/// Sparse multivariate polynomial in the dual coordinates x_i, i.e. an element
/// of R = Sym(V*). One variable per basis index.
class Polynomial {
public:
    using Terms = std::map<Multiindex, Rational>;
    using const_iterator = Terms::const_iterator;

    Polynomial() = default;
    Polynomial(const Rational& constant);

    static Polynomial variable(const BasisIndex& index);
    static Polynomial monomial(const Multiindex& exponents, const Rational& coefficient = Rational(1));

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Multiindex& exponents) const;
    Rational constant_term() const { return coefficient(Multiindex{}); }
    std::set<BasisIndex> variables() const;

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    void add_term(const Multiindex& exponents, const Rational& coefficient);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// f(P), with indices absent from P reading as 0.
Rational evaluate(const Polynomial& f, const Vector& point);

/// Formal partial derivative with respect to x_index.
Polynomial partial(const Polynomial& f, const BasisIndex& index);

/// Directional derivative d_nu = sum_i nu_i d_i.
Polynomial directional(const Polynomial& f, const Vector& nu);

/// d_{nu_1} ... d_{nu_l} f. The empty list is the identity.
Polynomial apply_diff_op(std::span<const Vector> nus, const Polynomial& f);

/// Source-compatible rendering, e.g. "x.e1^2*x.e2 - 3/2"; zero is "0".
std::string to_string(const Polynomial& f);

} // namespace bang
