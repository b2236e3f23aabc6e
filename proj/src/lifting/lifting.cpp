#include "bang/lifting.hpp"

#include <algorithm>
#include <set>

#include "bang/coalgebra.hpp"
#include "bang/errors.hpp"

namespace bang {

namespace {

void require_ket_in_context(const CanonicalKet& ket, const Basis& basis, const std::string& what)
{
    require_in_context(ket.point, basis, what + " point");
    for (const auto& entry : ket.content) {
        if (!basis.contains(entry.first)) {
            throw ContextError(what + " mentions '" + entry.first.label + "', which is not in basis '" +
                               basis.name() + "'");
        }
    }
}

// Memoised phi on the sub-kets of one ket.
class SubKetValues {
public:
    SubKetValues(const KetMap& phi, const Vector& point) : phi_(phi), point_(point) {}

    const Vector& operator()(const Multiindex& content)
    {
        auto it = cache_.find(content);
        if (it == cache_.end()) {
            it = cache_.emplace(content, phi_(CanonicalKet{point_, content})).first;
        }
        return it->second;
    }

private:
    const KetMap& phi_;
    const Vector& point_;
    std::map<Multiindex, Vector> cache_;
};

// Content of the sub-ket |nu_B> for a block of positions into labels.
Multiindex block_content(const std::vector<std::size_t>& block, const std::vector<BasisIndex>& labels)
{
    std::vector<Multiindex::Entry> entries;
    entries.reserve(block.size());
    for (std::size_t position : block) {
        entries.emplace_back(labels[position], 1u);
    }
    return Multiindex(std::move(entries));
}

} // namespace

LinearMapSpec::LinearMapSpec(Basis domain, Basis codomain, const Table& table)
    : domain_(std::move(domain)), codomain_(std::move(codomain))
{
    for (const auto& [ket, value] : table) {
        require_ket_in_context(ket, domain_, "linear map table key");
        require_in_context(value, codomain_, "linear map table value");
        if (!value.is_zero()) {
            table_.emplace(ket, value);
        }
    }
}

Vector LinearMapSpec::operator()(const CanonicalKet& ket) const
{
    const auto it = table_.find(ket);
    return it == table_.end() ? Vector{} : it->second;
}

KetMap LinearMapSpec::as_ket_map() const
{
    return [table = table_](const CanonicalKet& ket) {
        const auto it = table.find(ket);
        return it == table.end() ? Vector{} : it->second;
    };
}

void LinearMapSpec::require_domain(const BangElement& element) const
{
    for (const auto& term : element) {
        require_ket_in_context(term.first, domain_, "argument ket");
    }
}

std::vector<CanonicalKet> lift_query_set(const BangElement& element)
{
    std::set<CanonicalKet> kets;
    for (const auto& term : element) {
        for (const auto& sub : term.first.content.sub_multisets()) {
            kets.insert(CanonicalKet{term.first.point, sub});
        }
    }
    return {kets.begin(), kets.end()};
}

Vector eval_map(const KetMap& phi, const BangElement& element)
{
    Vector result;
    for (const auto& [ket, c] : element) {
        result += c * phi(ket);
    }
    return result;
}

Vector eval_map(const LinearMapSpec& phi, const BangElement& element)
{
    phi.require_domain(element);
    return eval_map(phi.as_ket_map(), element);
}

std::vector<LiftTerm> lift_terms(const KetMap& phi, const CanonicalKet& ket, std::size_t cap)
{
    const std::vector<BasisIndex> labels = ket.content.expand();
    SubKetValues values(phi, ket.point);
    const Vector target = values(Multiindex{});
    std::vector<LiftTerm> terms;
    for_each_set_partition(labels.size(), cap, [&](const SetPartition& partition) {
        LiftTerm term{partition, target, {}};
        term.creators.reserve(partition.length());
        for (const auto& block : partition.blocks) {
            term.creators.push_back(values(block_content(block, labels)));
        }
        terms.push_back(std::move(term));
    });
    return terms;
}

BangElement promote(const KetMap& phi, const BangElement& element, std::size_t cap)
{
    BangElement result;
    for (const auto& [ket, c] : element) {
        const std::vector<BasisIndex> labels = ket.content.expand();
        SubKetValues values(phi, ket.point);
        const Vector target = values(Multiindex{});

        // Partitions with the same multiset of block contents give the same
        // summand, so count them and build each distinct ket once.
        std::map<std::vector<Multiindex>, long> shapes;
        for_each_set_partition(labels.size(), cap, [&](const SetPartition& partition) {
            std::vector<Multiindex> shape;
            shape.reserve(partition.length());
            for (const auto& block : partition.blocks) {
                shape.push_back(block_content(block, labels));
            }
            std::sort(shape.begin(), shape.end());
            ++shapes[shape];
        });

        for (const auto& [shape, multiplicity] : shapes) {
            std::vector<Vector> creators;
            creators.reserve(shape.size());
            bool killed = false;
            for (const auto& content : shape) {
                const Vector& v = values(content);
                if (v.is_zero()) {
                    killed = true;
                    break;
                }
                creators.push_back(v);
            }
            if (killed) {
                continue;
            }
            result += (c * Rational(multiplicity)) * bang::ket(target, creators);
        }
    }
    return result;
}

BangElement promote(const LinearMapSpec& phi, const BangElement& element, std::size_t cap)
{
    phi.require_domain(element);
    return promote(phi.as_ket_map(), element, cap);
}

MatrixMapSpec::MatrixMapSpec(Basis domain, Basis codomain, const Images& images)
    : domain_(std::move(domain)), codomain_(std::move(codomain))
{
    for (const auto& [index, image] : images) {
        if (!domain_.contains(index)) {
            throw ContextError("linear map image given for '" + index.label + "', which is not in basis '" +
                               domain_.name() + "'");
        }
        require_in_context(image, codomain_, "linear map image");
        if (!image.is_zero()) {
            images_.emplace(index, image);
        }
    }
}

MatrixMapSpec MatrixMapSpec::identity(const Basis& basis)
{
    Images images;
    for (const auto& index : basis.indices()) {
        images.emplace(index, Vector::unit(index));
    }
    return MatrixMapSpec(basis, basis, images);
}

Vector MatrixMapSpec::operator()(const Vector& v) const
{
    require_in_context(v, domain_, "linear map argument");
    Vector result;
    for (const auto& [index, component] : v) {
        const auto it = images_.find(index);
        if (it != images_.end()) {
            result += component * it->second;
        }
    }
    return result;
}

MatrixMapSpec compose(const MatrixMapSpec& outer, const MatrixMapSpec& inner)
{
    for (const auto& index : inner.codomain().indices()) {
        if (!outer.domain().contains(index)) {
            throw ContextError("cannot compose: '" + index.label + "' of basis '" + inner.codomain().name() +
                               "' is not in basis '" + outer.domain().name() + "'");
        }
    }
    MatrixMapSpec::Images images;
    for (const auto& [index, image] : inner.images()) {
        images.emplace(index, outer(image));
    }
    return MatrixMapSpec(inner.domain(), outer.codomain(), images);
}

BangElement bang_map(const MatrixMapSpec& psi, const BangElement& element)
{
    BangElement result;
    for (const auto& [k, c] : element) {
        std::vector<Vector> images;
        images.reserve(k.degree());
        for (const auto& index : k.content.expand()) {
            images.push_back(psi(Vector::unit(index)));
        }
        result += c * ket(psi(k.point), images);
    }
    return result;
}

KetMap dereliction_map()
{
    return [](const CanonicalKet& k) { return dereliction(BangElement(k)); };
}

KetMap derelict_then(const MatrixMapSpec& psi)
{
    return [psi](const CanonicalKet& k) { return psi(dereliction(BangElement(k))); };
}

Rational coproduct_contraction(const Polynomial& f, const KetMap& phi, const BangElement& element)
{
    std::map<CanonicalKet, Vector> phi_cache;
    auto value = [&](const CanonicalKet& k) -> const Vector& {
        auto it = phi_cache.find(k);
        if (it == phi_cache.end()) {
            it = phi_cache.emplace(k, phi(k)).first;
        }
        return it->second;
    };

    // powers[q-1] holds Delta^{q-1}(element), a rank-q tensor.
    std::vector<TensorElement> powers{TensorElement::from_bang(element)};
    auto iterated = [&](std::size_t q) -> const TensorElement& {
        while (powers.size() < q) {
            powers.push_back(coproduct_at(powers.back(), powers.back().rank() - 1));
        }
        return powers[q - 1];
    };

    Rational total(0);
    for (const auto& [exponents, coefficient] : f) {
        const std::vector<BasisIndex> factors = exponents.expand();
        if (factors.empty()) {
            total += coefficient * counit(element);
            continue;
        }
        Rational contraction(0);
        for (const auto& [key, c] : iterated(factors.size())) {
            Rational product = c;
            for (std::size_t j = 0; j < factors.size() && !product.is_zero(); ++j) {
                product *= value(key[j])[factors[j]];
            }
            contraction += product;
        }
        total += coefficient * contraction;
    }
    return total;
}

Rational partition_pairing(const Polynomial& f, const KetMap& phi, const BangElement& element, std::size_t cap)
{
    Rational total(0);
    for (const auto& [ket, c] : element) {
        const std::vector<BasisIndex> labels = ket.content.expand();
        SubKetValues values(phi, ket.point);
        const Vector target = values(Multiindex{});
        Rational sum(0);
        for_each_set_partition(labels.size(), cap, [&](const SetPartition& partition) {
            std::vector<Vector> creators;
            creators.reserve(partition.length());
            for (const auto& block : partition.blocks) {
                creators.push_back(values(block_content(block, labels)));
            }
            sum += evaluate(apply_diff_op(creators, f), target);
        });
        total += c * sum;
    }
    return total;
}

} // namespace bang
