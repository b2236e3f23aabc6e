#include "bang/coalgebra.hpp"

#include <map>
#include <stdexcept>

namespace bang {

BangElement vacuum(const Vector& point)
{
    return BangElement(CanonicalKet{point, Multiindex{}});
}

BangElement creation(const Vector& nu, const BangElement& element)
{
    BangElement result;
    for (const auto& [k, c] : element) {
        for (const auto& [index, component] : nu) {
            result.add(CanonicalKet{k.point, k.content.with_added(index)}, c * component);
        }
    }
    return result;
}

BangElement ket(const Vector& point, std::span<const Vector> nus)
{
    BangElement result = vacuum(point);
    for (const auto& nu : nus) {
        result = creation(nu, result);
        if (result.is_zero()) {
            break;
        }
    }
    return result;
}

TensorElement coproduct(const BangElement& element)
{
    TensorElement result(2);
    for (const auto& [k, c] : element) {
        for (const auto& left : k.content.sub_multisets()) {
            Rational weight = c;
            for (const auto& [index, times] : left) {
                weight *= binomial(k.content.count(index), times);
            }
            result.add({CanonicalKet{k.point, left}, CanonicalKet{k.point, k.content - left}}, weight);
        }
    }
    return result;
}

Rational counit(const BangElement& element)
{
    Rational total(0);
    for (const auto& [k, c] : element) {
        if (k.content.empty()) {
            total += c;
        }
    }
    return total;
}

Vector dereliction(const BangElement& element)
{
    Vector result;
    for (const auto& [k, c] : element) {
        if (k.content.empty()) {
            result += c * k.point;
        } else if (k.degree() == 1) {
            result.add(k.content.begin()->first, c);
        }
    }
    return result;
}

namespace {

// x_index acting on a single ket, accumulated into out with weight c.
void multiply_coordinate(const BasisIndex& index, const CanonicalKet& k, const Rational& c, BangElement& out)
{
    const unsigned times = k.content.count(index);
    if (times > 0) {
        out.add(CanonicalKet{k.point, *k.content.with_removed(index)}, c * Rational(static_cast<long>(times)));
    }
    out.add(k, c * k.point[index]);
}

BangElement multiply_coordinate(const BasisIndex& index, const BangElement& element)
{
    BangElement result;
    for (const auto& [k, c] : element) {
        multiply_coordinate(index, k, c, result);
    }
    return result;
}

} // namespace

BangElement r_action(const Polynomial& f, const BangElement& element)
{
    BangElement result;
    for (const auto& [exponents, coefficient] : f) {
        BangElement term = element;
        for (const auto& [index, times] : exponents) {
            for (unsigned t = 0; t < times && !term.is_zero(); ++t) {
                term = multiply_coordinate(index, term);
            }
        }
        term *= coefficient;
        result += term;
    }
    return result;
}

Rational residue_pair(const Polynomial& f, const BangElement& element)
{
    Rational total(0);
    for (const auto& [k, c] : element) {
        if (f.degree() < static_cast<int>(k.degree())) {
            continue;
        }
        std::vector<Vector> nus;
        for (const auto& index : k.content.expand()) {
            nus.push_back(Vector::unit(index));
        }
        total += c * evaluate(apply_diff_op(nus, f), k.point);
    }
    return total;
}

FractionTerms to_fractions(const BangElement& element)
{
    FractionTerms result;
    result.reserve(element.size());
    for (const auto& [k, c] : element) {
        result.emplace_back(GeneralizedFraction{k.point, k.content}, c * k.content.factorial());
    }
    return result;
}

BangElement from_fractions(std::span<const std::pair<GeneralizedFraction, Rational>> fractions)
{
    BangElement result;
    for (const auto& [fraction, c] : fractions) {
        result.add(CanonicalKet{fraction.point, fraction.exponents}, c / fraction.exponents.factorial());
    }
    return result;
}

TensorElement tensor(const BangElement& left, const BangElement& right)
{
    TensorElement result(2);
    for (const auto& [kl, cl] : left) {
        for (const auto& [kr, cr] : right) {
            result.add({kl, kr}, cl * cr);
        }
    }
    return result;
}

TensorElement coproduct_at(const TensorElement& t, std::size_t slot)
{
    if (slot >= t.rank()) {
        throw std::out_of_range("coproduct_at: slot out of range");
    }
    TensorElement result(t.rank() + 1);
    for (const auto& [key, c] : t) {
        const TensorElement split = coproduct(BangElement(key[slot]));
        for (const auto& [pair, weight] : split) {
            TensorElement::Key next;
            next.reserve(key.size() + 1);
            next.insert(next.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
            next.push_back(pair[0]);
            next.push_back(pair[1]);
            next.insert(next.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
            result.add(next, c * weight);
        }
    }
    return result;
}

TensorElement counit_at(const TensorElement& t, std::size_t slot)
{
    if (t.rank() < 2 || slot >= t.rank()) {
        throw std::out_of_range("counit_at: needs rank >= 2 and a valid slot");
    }
    TensorElement result(t.rank() - 1);
    for (const auto& [key, c] : t) {
        if (!key[slot].content.empty()) {
            continue;
        }
        TensorElement::Key next = key;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(slot));
        result.add(next, c);
    }
    return result;
}

TensorElement permute(const TensorElement& t, std::span<const std::size_t> order)
{
    if (order.size() != t.rank()) {
        throw std::invalid_argument("permute: order has wrong length");
    }
    TensorElement result(t.rank());
    for (const auto& [key, c] : t) {
        TensorElement::Key next;
        next.reserve(key.size());
        for (std::size_t source : order) {
            next.push_back(key.at(source));
        }
        result.add(next, c);
    }
    return result;
}

TensorElement map_slots(const TensorElement& t, const std::function<BangElement(const CanonicalKet&)>& f)
{
    std::map<CanonicalKet, BangElement> cache;
    auto image = [&](const CanonicalKet& k) -> const BangElement& {
        auto it = cache.find(k);
        if (it == cache.end()) {
            it = cache.emplace(k, f(k)).first;
        }
        return it->second;
    };

    TensorElement result(t.rank());
    for (const auto& [key, c] : t) {
        // Expand the product of the slot images one slot at a time.
        std::map<TensorElement::Key, Rational> partial{{TensorElement::Key{}, c}};
        for (const auto& k : key) {
            std::map<TensorElement::Key, Rational> next;
            for (const auto& [prefix, weight] : partial) {
                for (const auto& [target, coefficient] : image(k)) {
                    TensorElement::Key extended = prefix;
                    extended.push_back(target);
                    next[extended] += weight * coefficient;
                }
            }
            partial = std::move(next);
        }
        for (const auto& [full, weight] : partial) {
            result.add(full, weight);
        }
    }
    return result;
}

} // namespace bang
