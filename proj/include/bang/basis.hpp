#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bang {

/// Opaque, totally ordered label naming one basis vector e_i (dual variable x_i).
struct BasisIndex {
    std::string label;

    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
    friend std::ostream& operator<<(std::ostream& os, const BasisIndex& i) { return os << i.label; }
};

/// A declared, ordered basis context. The order is the positional order used
/// for coordinate tuples; it does not affect the canonical (label-sorted)
/// storage of vectors and polynomials.
class Basis {
public:
    Basis() = default;
    /// Throws ContextError on duplicate labels.
    Basis(std::string name, std::vector<BasisIndex> indices);

    const std::string& name() const { return name_; }
    const std::vector<BasisIndex>& indices() const { return indices_; }
    std::size_t dimension() const { return indices_.size(); }

    bool contains(const BasisIndex& index) const { return position(index).has_value(); }
    std::optional<std::size_t> position(const BasisIndex& index) const;

    friend bool operator==(const Basis&, const Basis&) = default;

private:
    std::string name_;
    std::vector<BasisIndex> indices_;
};

} // namespace bang
