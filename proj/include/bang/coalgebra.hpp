#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bang/bang_element.hpp"
#include "bang/polynomial.hpp"

namespace bang {

/// |0>_P.
BangElement vacuum(const Vector& point);

/// |nu_1, ..., nu_s>_P, expanded multilinearly into canonical kets.
/// Symmetric in the nu's; a zero nu makes the result zero.
BangElement ket(const Vector& point, std::span<const Vector> nus);

/// Action of d_nu: appends nu to every ket, so creation(nu, ket(P, vs)) = ket(P, vs ++ [nu]).
BangElement creation(const Vector& nu, const BangElement& element);

/// Coproduct: (P,a) -> sum over b <= a of prod_i C(a_i, b_i) (P,b) (x) (P,a-b).
TensorElement coproduct(const BangElement& element);

/// Counit: the residue, i.e. the total coefficient on vacua.
Rational counit(const BangElement& element);

/// Dereliction d: |0>_P -> P, |e_i>_P -> e_i, zero in degree >= 2.
Vector dereliction(const BangElement& element);

/// R-module action: x_i (P,a) = a_i (P, a - e_i) + P_i (P,a), extended to
/// monomials by iteration and to polynomials linearly.
BangElement r_action(const Polynomial& f, const BangElement& element);

/// res(f . eta), computed by differentiating f along the ket's vectors and
/// evaluating at its point.
Rational residue_pair(const Polynomial& f, const BangElement& element);

/// (P,a) with coefficient c becomes fraction (P,a) with coefficient c * a!.
FractionTerms to_fractions(const BangElement& element);
/// Inverse of to_fractions; repeated fractions are summed.
BangElement from_fractions(std::span<const std::pair<GeneralizedFraction, Rational>> fractions);

// Tensor helpers.

TensorElement tensor(const BangElement& left, const BangElement& right);
/// Applies the coproduct to one slot, raising the rank by one.
TensorElement coproduct_at(const TensorElement& t, std::size_t slot);
/// Applies the counit to one slot, lowering the rank by one. Precondition: rank >= 2.
TensorElement counit_at(const TensorElement& t, std::size_t slot);
/// Result slot i holds input slot order[i].
TensorElement permute(const TensorElement& t, std::span<const std::size_t> order);
/// Applies a linear map !V -> !W to every slot: (f (x) ... (x) f)(t).
TensorElement map_slots(const TensorElement& t, const std::function<BangElement(const CanonicalKet&)>& f);

} // namespace bang
