#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "bang/bang_element.hpp"
#include "bang/basis.hpp"
#include "bang/partitions.hpp"
#include "bang/polynomial.hpp"

namespace bang {

/// A linear map !W -> V given by its values on canonical kets.
using KetMap = std::function<Vector(const CanonicalKet&)>;

/// Finite table for a linear map phi: !W -> V. Kets absent from the table map
/// to zero.
///
/// promote(phi, eta) only reads phi on kets (P, b) where (P, a) is a ket of
/// eta and b <= a; lift_query_set() lists exactly those.
class LinearMapSpec {
public:
    using Table = std::map<CanonicalKet, Vector>;

    /// Throws ContextError if a key leaves the domain or a value leaves the codomain.
    LinearMapSpec(Basis domain, Basis codomain, const Table& table);

    const Basis& domain() const { return domain_; }
    const Basis& codomain() const { return codomain_; }
    const Table& table() const { return table_; }

    Vector operator()(const CanonicalKet& ket) const;
    KetMap as_ket_map() const;

    /// Throws ContextError unless every ket of element lies over the domain.
    void require_domain(const BangElement& element) const;

private:
    Basis domain_;
    Basis codomain_;
    Table table_;
};

/// The kets on which promote() evaluates phi for this element.
std::vector<CanonicalKet> lift_query_set(const BangElement& element);

Vector eval_map(const KetMap& phi, const BangElement& element);
Vector eval_map(const LinearMapSpec& phi, const BangElement& element);

/// One summand of the lifting of a single ket: the partition it came from and
/// the creation vectors phi|nu_{C_1}>, ..., phi|nu_{C_l}> applied at target = phi|0>_P.
struct LiftTerm {
    SetPartition partition;
    Vector target;
    std::vector<Vector> creators;
};

/// All Bell(s) unmerged summands for a degree-s ket, one per set partition,
/// including those a zero creator kills.
std::vector<LiftTerm> lift_terms(const KetMap& phi, const CanonicalKet& ket,
                                 std::size_t cap = default_partition_cap);

/// The coalgebra morphism Phi: !W -> !V lifting phi, i.e. the unique one with
/// d o Phi = phi:
///   Phi|nu_1..nu_s>_P = sum over partitions C of |phi|nu_{C_1}>, ..., phi|nu_{C_l}>>_Q,
/// Q = phi|0>_P. Throws SizeLimitError when a ket's degree exceeds cap.
BangElement promote(const KetMap& phi, const BangElement& element, std::size_t cap = default_partition_cap);
BangElement promote(const LinearMapSpec& phi, const BangElement& element,
                    std::size_t cap = default_partition_cap);

/// Linear map psi: W -> V by the images of the domain basis vectors.
class MatrixMapSpec {
public:
    using Images = std::map<BasisIndex, Vector>;

    /// Throws ContextError if an image key leaves the domain or a value leaves the codomain.
    MatrixMapSpec(Basis domain, Basis codomain, const Images& images);

    static MatrixMapSpec identity(const Basis& basis);

    const Basis& domain() const { return domain_; }
    const Basis& codomain() const { return codomain_; }
    const Images& images() const { return images_; }

    /// Throws ContextError if v leaves the domain.
    Vector operator()(const Vector& v) const;

private:
    Basis domain_;
    Basis codomain_;
    Images images_;
};

/// outer o inner. Throws ContextError unless inner's codomain fits outer's domain.
MatrixMapSpec compose(const MatrixMapSpec& outer, const MatrixMapSpec& inner);

/// !psi |nu_1..nu_s>_P = |psi nu_1, ..., psi nu_s>_{psi P}.
BangElement bang_map(const MatrixMapSpec& psi, const BangElement& element);

/// The dereliction d: !V -> V as a ket map.
KetMap dereliction_map();

/// psi o d, the degree <= 1 map whose lift is !psi.
KetMap derelict_then(const MatrixMapSpec& psi);

/// Contraction of f against (eps(eta), phi(eta), phi^{(x)2} Delta(eta), ...):
/// a monomial x_{k_1}...x_{k_q} pairs with sum phi(eta_(1))_{k_1} ... phi(eta_(q))_{k_q}
/// over the iterated coproduct; constants pair with the counit.
Rational coproduct_contraction(const Polynomial& f, const KetMap& phi, const BangElement& element);

/// Sum over set partitions C of (d_{phi|nu_{C_1}>} ... d_{phi|nu_{C_l}>} f)(Q),
/// Q = phi|0>_P, extended linearly over the kets of element.
Rational partition_pairing(const Polynomial& f, const KetMap& phi, const BangElement& element,
                           std::size_t cap = default_partition_cap);

} // namespace bang
