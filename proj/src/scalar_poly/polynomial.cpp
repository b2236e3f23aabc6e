#include "bang/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace bang {

Polynomial::Polynomial(const Rational& constant)
{
    add_term(Multiindex{}, constant);
}

Polynomial Polynomial::variable(const BasisIndex& index)
{
    return monomial(Multiindex{{index, 1u}});
}

Polynomial Polynomial::monomial(const Multiindex& exponents, const Rational& coefficient)
{
    Polynomial p;
    p.add_term(exponents, coefficient);
    return p;
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto& term : terms_) {
        d = std::max(d, static_cast<int>(term.first.degree()));
    }
    return d;
}

Rational Polynomial::coefficient(const Multiindex& exponents) const
{
    const auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<BasisIndex> Polynomial::variables() const
{
    std::set<BasisIndex> vars;
    for (const auto& term : terms_) {
        for (const auto& e : term.first) {
            vars.insert(e.first);
        }
    }
    return vars;
}

void Polynomial::add_term(const Multiindex& exponents, const Rational& coefficient)
{
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    for (const auto& [exponents, c] : rhs.terms_) {
        add_term(exponents, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    for (const auto& [exponents, c] : rhs.terms_) {
        add_term(exponents, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) {
        term.second *= scalar;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial product;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            product.add_term(ea + eb, ca * cb);
        }
    }
    return product;
}

Polynomial pow(const Polynomial& base, unsigned exponent)
{
    Polynomial result(Rational(1));
    Polynomial square = base;
    while (exponent > 0) {
        if (exponent & 1u) {
            result = result * square;
        }
        exponent >>= 1u;
        if (exponent > 0) {
            square = square * square;
        }
    }
    return result;
}

namespace {

Rational power(const Rational& base, unsigned exponent)
{
    Rational result(1);
    for (unsigned k = 0; k < exponent; ++k) {
        result *= base;
    }
    return result;
}

} // namespace

Rational evaluate(const Polynomial& f, const Vector& point)
{
    Rational value(0);
    for (const auto& [exponents, c] : f) {
        Rational term = c;
        for (const auto& [index, times] : exponents) {
            term *= power(point[index], times);
            if (term.is_zero()) {
                break;
            }
        }
        value += term;
    }
    return value;
}

Polynomial partial(const Polynomial& f, const BasisIndex& index)
{
    Polynomial result;
    for (const auto& [exponents, c] : f) {
        const unsigned times = exponents.count(index);
        if (times == 0) {
            continue;
        }
        result.add_term(*exponents.with_removed(index), c * Rational(static_cast<long>(times)));
    }
    return result;
}

Polynomial directional(const Polynomial& f, const Vector& nu)
{
    Polynomial result;
    for (const auto& [index, component] : nu) {
        result += component * partial(f, index);
    }
    return result;
}

Polynomial apply_diff_op(std::span<const Vector> nus, const Polynomial& f)
{
    Polynomial result = f;
    for (const auto& nu : nus) {
        if (result.is_zero()) {
            break;
        }
        result = directional(result, nu);
    }
    return result;
}

std::string to_string(const Polynomial& f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::vector<std::pair<Multiindex, Rational>> terms(f.begin(), f.end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return graded_compare(a.first, b.first) < 0; });
    std::string out;
    bool first = true;
    for (const auto& [exponents, c] : terms) {
        Rational magnitude = c.sign() < 0 ? -c : c;
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (const auto& [index, times] : exponents) {
            if (!factors.empty()) {
                factors += "*";
            }
            factors += "x." + index.label;
            if (times > 1) {
                factors += "^" + std::to_string(times);
            }
        }
        if (factors.empty()) {
            out += magnitude.to_string();
        } else if (magnitude.is_one()) {
            out += factors;
        } else {
            out += magnitude.to_string() + "*" + factors;
        }
    }
    return out;
}

} // namespace bang
