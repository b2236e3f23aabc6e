#include "bang/vector.hpp"

#include <algorithm>

#include "bang/errors.hpp"

namespace bang {

Vector::Vector(std::initializer_list<std::pair<BasisIndex, Rational>> entries)
{
    for (const auto& [index, value] : entries) {
        add(index, value);
    }
}

Vector::Vector(const Map& entries)
{
    for (const auto& [index, value] : entries) {
        add(index, value);
    }
}

Vector Vector::unit(const BasisIndex& index)
{
    Vector v;
    v.entries_.emplace(index, Rational(1));
    return v;
}

Rational Vector::operator[](const BasisIndex& index) const
{
    const auto it = entries_.find(index);
    return it == entries_.end() ? Rational(0) : it->second;
}

std::vector<BasisIndex> Vector::support() const
{
    std::vector<BasisIndex> labels;
    labels.reserve(entries_.size());
    for (const auto& entry : entries_) {
        labels.push_back(entry.first);
    }
    return labels;
}

void Vector::add(const BasisIndex& index, const Rational& scalar)
{
    if (scalar.is_zero()) {
        return;
    }
    auto [it, inserted] = entries_.try_emplace(index, scalar);
    if (!inserted) {
        it->second += scalar;
        if (it->second.is_zero()) {
            entries_.erase(it);
        }
    }
}

Vector& Vector::operator+=(const Vector& rhs)
{
    for (const auto& [index, value] : rhs.entries_) {
        add(index, value);
    }
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs)
{
    for (const auto& [index, value] : rhs.entries_) {
        add(index, -value);
    }
    return *this;
}

Vector& Vector::operator*=(const Rational& scalar)
{
    if (scalar.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& entry : entries_) {
        entry.second *= scalar;
    }
    return *this;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b)
{
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
}

std::string to_string(const Vector& v)
{
    std::string out = "{";
    bool first = true;
    for (const auto& [index, value] : v) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += index.label + ": " + value.to_string();
    }
    return out + "}";
}

void require_in_context(const Vector& v, const Basis& basis, const std::string& what)
{
    for (const auto& entry : v) {
        if (!basis.contains(entry.first)) {
            throw ContextError(what + " mentions '" + entry.first.label + "', which is not in basis '" +
                               basis.name() + "'");
        }
    }
}

std::string to_string(const Vector& v, const Basis& basis)
{
    require_in_context(v, basis, "vector");
    std::string out = "(";
    bool first = true;
    for (const auto& index : basis.indices()) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += v[index].to_string();
    }
    return out + ")";
}

} // namespace bang
