#include "bang/render.hpp"

#include <vector>

namespace bang {

namespace {

std::string content_string(const Multiindex& content)
{
    if (content.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [index, times] : content) {
        if (!out.empty()) {
            out += " ";
        }
        out += index.label;
        if (times > 1) {
            out += "^" + std::to_string(times);
        }
    }
    return out;
}

// Joins (coefficient, body) pairs as "a·X + b·Y - Z".
template <typename Range, typename Body>
std::string linear_combination(const Range& terms, Body body)
{
    std::string out;
    bool first = true;
    for (const auto& [item, c] : terms) {
        const Rational magnitude = c.sign() < 0 ? -c : c;
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (!magnitude.is_one()) {
            out += magnitude.to_string() + "·";
        }
        out += body(item);
    }
    return first ? std::string("0") : out;
}

} // namespace

PointFormatter label_points()
{
    return [](const Vector& v) { return to_string(v); };
}

PointFormatter positional_points(const Basis& basis)
{
    return [basis](const Vector& v) { return to_string(v, basis); };
}

std::string to_string(const CanonicalKet& ket, const PointFormatter& point)
{
    return "|" + content_string(ket.content) + "⟩_{" + point(ket.point) + "}";
}

std::string to_string(const BangElement& element, const PointFormatter& point)
{
    return linear_combination(element, [&](const CanonicalKet& k) { return to_string(k, point); });
}

std::string to_string(const TensorElement& tensor, const PointFormatter& point)
{
    return linear_combination(tensor, [&](const TensorElement::Key& key) {
        std::string out;
        for (const auto& k : key) {
            if (!out.empty()) {
                out += " ⊗ ";
            }
            out += to_string(k, point);
        }
        return out;
    });
}

std::string to_string(const GeneralizedFraction& fraction, const PointFormatter& point)
{
    std::string denominator;
    for (const auto& [index, times] : fraction.exponents) {
        if (!denominator.empty()) {
            denominator += " ";
        }
        denominator += "z_{" + index.label + "}";
        if (times > 1) {
            denominator += "^" + std::to_string(times);
        }
    }
    const std::string body = denominator.empty() ? "dz/z" : "1/(" + denominator + ") dz/z";
    return "[" + body + "]_{" + point(fraction.point) + "}";
}

std::string to_string(const FractionTerms& fractions, const PointFormatter& point)
{
    return linear_combination(fractions, [&](const GeneralizedFraction& f) { return to_string(f, point); });
}

} // namespace bang
