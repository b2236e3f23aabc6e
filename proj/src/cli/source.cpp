#include <sstream>

#include "bang/cli/ast.hpp"

namespace bang::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string to_source(const Tuple& t)
{
    std::string out = t.basis.value_or("") + "(";
    for (std::size_t i = 0; i < t.coordinates.size(); ++i) {
        out += (i ? ", " : "") + t.coordinates[i].to_string();
    }
    return out + ")";
}

std::string to_source(const VecAtom& atom)
{
    return std::visit(overloaded{[](const std::string& name) { return name; },
                                 [](const Tuple& t) { return to_source(t); }},
                      atom.value);
}

std::string to_source(const PolyAtom& atom)
{
    return std::visit(overloaded{[](const std::string& name) { return name; },
                                 [](const PolyLiteral& p) {
                                     return "poly[" + p.basis + "]{ " + to_source(p.body) + " }";
                                 }},
                      atom.value);
}

std::string ket_key_source(const KetKey& key)
{
    std::string content;
    for (const auto& [label, times] : key.content) {
        content += (content.empty() ? "" : " ") + label + (times == 1 ? "" : "^" + std::to_string(times));
    }
    return "|" + (content.empty() ? std::string("0") : content) + "|_" + to_source(key.point);
}

using PKind = PolyNode::Kind;

std::string poly_wrapped(const PolyNode& node, bool wrap)
{
    return wrap ? "(" + to_source(node) + ")" : to_source(node);
}

using BKind = BangNode::Kind;

bool is_negative_scale(const BangNode& node)
{
    return node.kind == BKind::Scale && node.scalar.sign() < 0;
}

// Operand of a prefix operator or of a scale: must parse back as a primary.
std::string bang_primary_source(const BangNode& node)
{
    const bool wrap = node.kind == BKind::Sum || node.kind == BKind::Scale;
    return wrap ? "(" + to_source(node) + ")" : to_source(node);
}

// A summand written after an explicit sign; the node's own sign is dropped.
std::string bang_magnitude_source(const BangNode& node)
{
    if (node.kind != BKind::Scale) {
        return node.kind == BKind::Sum ? "(" + to_source(node) + ")" : to_source(node);
    }
    const Rational magnitude = node.scalar.sign() < 0 ? -node.scalar : node.scalar;
    if (node.scalar == Rational(-1)) {
        return bang_magnitude_source(node.children.front());
    }
    BangNode positive = node;
    positive.scalar = magnitude;
    return to_source(positive);
}

} // namespace

std::string to_source(const VecExpr& expr)
{
    std::string out;
    for (std::size_t i = 0; i < expr.terms.size(); ++i) {
        const VecTerm& term = expr.terms[i];
        const bool negative = term.coefficient.sign() < 0;
        const Rational magnitude = negative ? -term.coefficient : term.coefficient;
        if (i == 0) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!magnitude.is_one()) {
            out += magnitude.to_string() + "*";
        }
        out += to_source(term.atom);
    }
    return out;
}

std::string to_source(const PolyNode& node)
{
    switch (node.kind) {
    case PKind::Constant:
        return node.value.to_string();
    case PKind::Variable:
        return "x." + node.label;
    case PKind::Negate: {
        const PolyNode& inner = node.children.front();
        return "-" + poly_wrapped(inner, inner.kind == PKind::Sum || inner.kind == PKind::Negate);
    }
    case PKind::Sum: {
        std::string out;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            const PolyNode& child = node.children[i];
            if (child.kind == PKind::Negate) {
                const PolyNode& inner = child.children.front();
                out += (i == 0 ? "-" : " - ") +
                       poly_wrapped(inner, inner.kind == PKind::Sum || inner.kind == PKind::Negate);
            } else {
                out += (i == 0 ? "" : " + ") + poly_wrapped(child, child.kind == PKind::Sum);
            }
        }
        return out;
    }
    case PKind::Product: {
        std::string out;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            const PolyNode& child = node.children[i];
            const bool wrap =
                child.kind == PKind::Sum || child.kind == PKind::Negate || child.kind == PKind::Product;
            out += (i == 0 ? "" : "*") + poly_wrapped(child, wrap);
        }
        return out;
    }
    case PKind::Power: {
        const PolyNode& base = node.children.front();
        const bool wrap = base.kind != PKind::Variable &&
                          !(base.kind == PKind::Constant && base.value.is_integer());
        return poly_wrapped(base, wrap) + "^" + std::to_string(node.exponent);
    }
    }
    return {};
}

std::string to_source(const BangNode& node)
{
    switch (node.kind) {
    case BKind::Name:
        return node.name;
    case BKind::Ket: {
        std::string out = "ket[" + to_source(node.ket->point) + ";";
        for (std::size_t i = 0; i < node.ket->vectors.size(); ++i) {
            out += (i == 0 ? " " : ", ") + to_source(node.ket->vectors[i]);
        }
        return out + "]";
    }
    case BKind::Sum: {
        std::string out;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            const BangNode& child = node.children[i];
            if (is_negative_scale(child)) {
                out += (i == 0 ? "-" : " - ") + bang_magnitude_source(child);
            } else {
                out += (i == 0 ? "" : " + ") + bang_magnitude_source(child);
            }
        }
        return out;
    }
    case BKind::Scale: {
        const BangNode& child = node.children.front();
        if (node.scalar == Rational(-1)) {
            return "-" + bang_primary_source(child);
        }
        const std::string prefix = node.scalar.sign() < 0 ? "-" : "";
        const Rational magnitude = node.scalar.sign() < 0 ? -node.scalar : node.scalar;
        const bool wrap = child.kind == BKind::Sum || is_negative_scale(child);
        return prefix + magnitude.to_string() + "*" + (wrap ? "(" + to_source(child) + ")" : to_source(child));
    }
    case BKind::Promote:
        return "promote " + node.name + " " + bang_primary_source(node.children.front());
    case BKind::Map:
        return "map " + node.name + " " + bang_primary_source(node.children.front());
    case BKind::RAction:
        return "raction " + to_source(*node.poly) + " " + bang_primary_source(node.children.front());
    case BKind::Creation:
        return "creation " + to_source(*node.vector) + " " + bang_primary_source(node.children.front());
    }
    return {};
}

std::string to_source(const Command& command)
{
    return std::visit(
        overloaded{
            [](const DeclareBasis& b) {
                std::string out = "basis " + b.name + " = {";
                for (const auto& label : b.labels) {
                    out += " " + label;
                }
                return out + " };";
            },
            [](const LetVector& v) { return "let " + v.name + " : " + v.basis + " = " + to_source(v.value) + ";"; },
            [](const LetPoly& p) { return "let " + p.name + " = " + to_source(p.value) + ";"; },
            [](const LetBang& b) { return "let " + b.name + " = " + to_source(b.value) + ";"; },
            [](const LinMapDecl& m) {
                std::string out = "linmap " + m.name + " : !" + m.domain + " -> " + m.codomain + " {";
                for (const auto& [key, value] : m.entries) {
                    out += " " + ket_key_source(key) + " -> " + to_source(value) + ";";
                }
                return out + " }";
            },
            [](const LinearDecl& m) {
                std::string out = "linear " + m.name + " : " + m.domain + " -> " + m.codomain + " {";
                for (const auto& [label, value] : m.entries) {
                    out += " " + label + " -> " + to_source(value) + ";";
                }
                return out + " }";
            },
            [](const Query& q) {
                std::string head;
                switch (q.kind) {
                case QueryKind::Delta:
                    head = "delta";
                    break;
                case QueryKind::Counit:
                    head = "eps";
                    break;
                case QueryKind::Dereliction:
                    head = "d";
                    break;
                case QueryKind::Pair:
                    head = "pair " + to_source(*q.poly);
                    break;
                case QueryKind::RAction:
                    head = "raction " + to_source(*q.poly);
                    break;
                case QueryKind::Creation:
                    head = "creation " + to_source(*q.vector);
                    break;
                case QueryKind::Promote:
                    head = "promote " + q.map;
                    break;
                case QueryKind::Map:
                    head = "map " + q.map;
                    break;
                case QueryKind::Fractions:
                    head = "fractions";
                    break;
                }
                return head + " " + to_source(q.operand) + ";";
            },
            [](const SetOption& o) { return "set " + o.key + " = " + o.value + ";"; },
        },
        command);
}

std::string to_source(const Statement& statement)
{
    std::string out = to_source(statement.command);
    if (statement.expect) {
        out += " # expect: " + *statement.expect;
    }
    return out;
}

std::string to_source(const std::vector<Statement>& statements)
{
    std::string out;
    for (const auto& s : statements) {
        out += to_source(s) + "\n";
    }
    return out;
}

} // namespace bang::cli
