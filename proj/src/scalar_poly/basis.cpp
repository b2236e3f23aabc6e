#include "bang/basis.hpp"

#include <algorithm>
#include <set>

#include "bang/errors.hpp"

namespace bang {

Basis::Basis(std::string name, std::vector<BasisIndex> indices)
    : name_(std::move(name)), indices_(std::move(indices))
{
    std::set<BasisIndex> seen;
    for (const auto& index : indices_) {
        if (!seen.insert(index).second) {
            throw ContextError("basis '" + name_ + "' declares label '" + index.label + "' twice");
        }
    }
}

std::optional<std::size_t> Basis::position(const BasisIndex& index) const
{
    const auto it = std::find(indices_.begin(), indices_.end(), index);
    if (it == indices_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - indices_.begin());
}

} // namespace bang
