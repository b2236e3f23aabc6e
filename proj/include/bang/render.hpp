#pragma once

#include <functional>
#include <string>

#include "bang/bang_element.hpp"

namespace bang {

/// Renders the subscript point of a ket or fraction.
using PointFormatter = std::function<std::string(const Vector&)>;

/// Label-sorted point rendering, to_string(Vector).
PointFormatter label_points();
/// Positional point rendering against a basis.
PointFormatter positional_points(const Basis& basis);

// Deterministic text forms. Terms appear in container order, coefficients 1
// are omitted, and the zero element renders as "0".

/// "|e1^2 e3⟩_{P}", vacuum "|0⟩_{P}".
std::string to_string(const CanonicalKet& ket, const PointFormatter& point = label_points());
std::string to_string(const BangElement& element, const PointFormatter& point = label_points());
/// Slots joined by " ⊗ ".
std::string to_string(const TensorElement& tensor, const PointFormatter& point = label_points());
/// "[1/(z_{e1}^2 z_{e3}) dz/z]_{P}", exponent zero "[dz/z]_{P}".
std::string to_string(const GeneralizedFraction& fraction, const PointFormatter& point = label_points());
std::string to_string(const FractionTerms& fractions, const PointFormatter& point = label_points());

} // namespace bang
