#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bang/basis.hpp"
#include "bang/rational.hpp"

namespace bang {

/// Finitely supported map BasisIndex -> positive integer.
///
/// Serves as the exponent map of a monomial, the content a of a canonical
/// ket |e^a>_P, and the exponents of a generalised fraction. Entries are kept
/// sorted by label with no zero counts, so equality is structural.
class Multiindex {
public:
    using Entry = std::pair<BasisIndex, unsigned>;
    using const_iterator = std::vector<Entry>::const_iterator;

    Multiindex() = default;
    /// Repeated labels are merged and zero counts dropped.
    Multiindex(std::initializer_list<Entry> entries);
    explicit Multiindex(std::vector<Entry> entries);

    /// Counts occurrences: [e1, e2, e1] -> {e1:2, e2:1}.
    static Multiindex from_labels(std::span<const BasisIndex> labels);

    unsigned count(const BasisIndex& index) const;
    unsigned degree() const;
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    const_iterator begin() const { return entries_.begin(); }
    const_iterator end() const { return entries_.end(); }

    Multiindex with_added(const BasisIndex& index, unsigned times = 1) const;
    /// Removes one occurrence; nullopt when the index is absent.
    std::optional<Multiindex> with_removed(const BasisIndex& index) const;

    Multiindex operator+(const Multiindex& other) const;
    /// Precondition: other <= *this componentwise.
    Multiindex operator-(const Multiindex& other) const;
    bool contains(const Multiindex& other) const;

    /// Labels repeated by multiplicity, in label order.
    std::vector<BasisIndex> expand() const;

    /// Every b with 0 <= b <= *this, including the empty one and *this.
    std::vector<Multiindex> sub_multisets() const;

    /// Product of count! over the entries.
    Rational factorial() const;

    friend bool operator==(const Multiindex&, const Multiindex&) = default;
    friend auto operator<=>(const Multiindex&, const Multiindex&) = default;

private:
    void normalize();

    std::vector<Entry> entries_;
};

/// Graded order used for display: higher total degree first, then larger
/// exponent on the earliest label first (so e1^2 < e1 e2 < e2^2).
std::strong_ordering graded_compare(const Multiindex& a, const Multiindex& b);

} // namespace bang
