#include "bang/bang_element.hpp"

#include <cassert>
#include <stdexcept>

namespace bang {

BangElement::BangElement(const CanonicalKet& ket, const Rational& coefficient)
{
    add(ket, coefficient);
}

Rational BangElement::coefficient(const CanonicalKet& ket) const
{
    const auto it = terms_.find(ket);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BangElement::add(const CanonicalKet& ket, const Rational& coefficient)
{
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(ket, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

BangElement& BangElement::operator+=(const BangElement& rhs)
{
    for (const auto& [ket, c] : rhs.terms_) {
        add(ket, c);
    }
    return *this;
}

BangElement& BangElement::operator-=(const BangElement& rhs)
{
    for (const auto& [ket, c] : rhs.terms_) {
        add(ket, -c);
    }
    return *this;
}

BangElement& BangElement::operator*=(const Rational& scalar)
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

TensorElement TensorElement::from_bang(const BangElement& element)
{
    TensorElement t(1);
    for (const auto& [ket, c] : element) {
        t.add({ket}, c);
    }
    return t;
}

BangElement TensorElement::to_bang() const
{
    if (rank_ != 1) {
        throw std::logic_error("to_bang requires a rank-1 tensor");
    }
    BangElement element;
    for (const auto& [key, c] : terms_) {
        element.add(key.front(), c);
    }
    return element;
}

Rational TensorElement::coefficient(const Key& key) const
{
    const auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add(const Key& key, const Rational& coefficient)
{
    assert(key.size() == rank_);
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs)
{
    if (rhs.rank_ != rank_) {
        throw std::logic_error("adding tensors of different rank");
    }
    for (const auto& [key, c] : rhs.terms_) {
        add(key, c);
    }
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs)
{
    if (rhs.rank_ != rank_) {
        throw std::logic_error("subtracting tensors of different rank");
    }
    for (const auto& [key, c] : rhs.terms_) {
        add(key, -c);
    }
    return *this;
}

} // namespace bang
