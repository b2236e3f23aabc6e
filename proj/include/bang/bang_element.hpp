#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "bang/multiindex.hpp"
#include "bang/rational.hpp"
#include "bang/vector.hpp"

namespace bang {

/// Canonical basis ket |e^a>_P of !V: the point P together with the
/// multiplicity a_i of each basis vector e_i among the creation vectors.
/// Empty content is the vacuum |0>_P.
struct CanonicalKet {
    Vector point;
    Multiindex content;

    unsigned degree() const { return content.degree(); }

    friend bool operator==(const CanonicalKet&, const CanonicalKet&) = default;
    /// Point first, then graded order on content (higher degree first).
    friend std::strong_ordering operator<=>(const CanonicalKet& a, const CanonicalKet& b)
    {
        if (const auto c = a.point <=> b.point; c != 0) {
            return c;
        }
        return graded_compare(a.content, b.content);
    }
};

/// Element of !V: a finite rational combination of canonical kets, with no
/// zero coefficients stored. The empty element is zero.
class BangElement {
public:
    using Terms = std::map<CanonicalKet, Rational>;
    using const_iterator = Terms::const_iterator;

    BangElement() = default;
    explicit BangElement(const CanonicalKet& ket, const Rational& coefficient = Rational(1));

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const CanonicalKet& ket) const;

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    void add(const CanonicalKet& ket, const Rational& coefficient);

    BangElement& operator+=(const BangElement& rhs);
    BangElement& operator-=(const BangElement& rhs);
    BangElement& operator*=(const Rational& scalar);

    friend BangElement operator+(BangElement a, const BangElement& b) { return a += b; }
    friend BangElement operator-(BangElement a, const BangElement& b) { return a -= b; }
    friend BangElement operator*(const Rational& s, BangElement a) { return a *= s; }

    friend bool operator==(const BangElement&, const BangElement&) = default;

private:
    Terms terms_;
};

/// Basis generalised fraction [1/(z_1^{a_1}, ..., z_n^{a_n}) dz/z] at P, with z_i = x_i - P_i.
struct GeneralizedFraction {
    Vector point;
    Multiindex exponents;

    friend bool operator==(const GeneralizedFraction&, const GeneralizedFraction&) = default;
    friend std::strong_ordering operator<=>(const GeneralizedFraction& a, const GeneralizedFraction& b)
    {
        if (const auto c = a.point <=> b.point; c != 0) {
            return c;
        }
        return graded_compare(a.exponents, b.exponents);
    }
};

using FractionTerms = std::vector<std::pair<GeneralizedFraction, Rational>>;

/// Element of the k-fold tensor power of !V, k = rank() >= 1, stored on
/// tuples of canonical kets. coproduct() yields rank 2.
class TensorElement {
public:
    using Key = std::vector<CanonicalKet>;
    using Terms = std::map<Key, Rational>;
    using const_iterator = Terms::const_iterator;

    explicit TensorElement(std::size_t rank) : rank_(rank) {}
    /// Rank-1 view of an element of !V.
    static TensorElement from_bang(const BangElement& element);
    /// Rank-1 tensor back to !V.
    BangElement to_bang() const;

    std::size_t rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Key& key) const;

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    /// Precondition: key.size() == rank().
    void add(const Key& key, const Rational& coefficient);

    TensorElement& operator+=(const TensorElement& rhs);
    TensorElement& operator-=(const TensorElement& rhs);

    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    std::size_t rank_;
    Terms terms_;
};

} // namespace bang
