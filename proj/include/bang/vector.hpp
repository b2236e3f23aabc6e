#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bang/basis.hpp"
#include "bang/rational.hpp"

namespace bang {

/// Finitely supported vector: BasisIndex -> Rational with no stored zeros.
///
/// Doubles as a point P of V and as a tangent (creation) vector. Indices
/// absent from the map read as zero, so vectors over different finite sets
/// of labels live in one ambient space.
class Vector {
public:
    using Map = std::map<BasisIndex, Rational>;
    using const_iterator = Map::const_iterator;

    Vector() = default;
    Vector(std::initializer_list<std::pair<BasisIndex, Rational>> entries);
    explicit Vector(const Map& entries);

    static Vector unit(const BasisIndex& index);

    Rational operator[](const BasisIndex& index) const;
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::vector<BasisIndex> support() const;

    const_iterator begin() const { return entries_.begin(); }
    const_iterator end() const { return entries_.end(); }

    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    Vector& operator*=(const Rational& scalar);
    /// Adds scalar * e_index.
    void add(const BasisIndex& index, const Rational& scalar);

    friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
    friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
    friend Vector operator*(const Rational& scalar, Vector v) { return v *= scalar; }
    friend Vector operator-(Vector v) { return v *= Rational(-1); }

    friend bool operator==(const Vector&, const Vector&) = default;
    friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

private:
    Map entries_;
};

/// Label-sorted rendering, e.g. "{e1: 2, e3: -1/2}"; the zero vector is "{}".
std::string to_string(const Vector& v);

/// Positional rendering against a basis, e.g. "(2, 0)". Throws ContextError if
/// v has support outside the basis.
std::string to_string(const Vector& v, const Basis& basis);

/// Throws ContextError if v mentions an index outside basis.
void require_in_context(const Vector& v, const Basis& basis, const std::string& what);

} // namespace bang
