#include "bang/cli/session.hpp"

#include <algorithm>
#include <set>

#include "bang/coalgebra.hpp"
#include "bang/render.hpp"

namespace bang::cli {

namespace {

/// Ill-formed statements: unknown or redefined names, labels outside a basis,
/// tuples of the wrong length. Mismatched bases between values are context
/// errors instead and count as evaluation errors.
class ResolveError : public Error {
public:
    using Error::Error;
};

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <typename Map>
void require_fresh(const Map& bindings, const std::string& name, const std::string& kind)
{
    if (bindings.contains(name)) {
        throw ResolveError(kind + " '" + name + "' is already defined");
    }
}

void require_same_basis(const Basis& actual, const Basis& expected, const std::string& what)
{
    if (actual.name() != expected.name()) {
        throw ContextError(what + " is in basis '" + actual.name() + "', expected basis '" + expected.name() + "'");
    }
}

} // namespace

CommandError::CommandError(ExitCode code, SourceLoc loc, std::string command, const std::string& message)
    : Error("line " + std::to_string(loc.line) + ": " + message + " (in `" + command + "`)"),
      code_(code),
      loc_(loc),
      command_(std::move(command))
{
}

const Basis& Session::require_basis(const std::string& name) const
{
    const auto it = bases_.find(name);
    if (it == bases_.end()) {
        throw ResolveError("unknown basis '" + name + "'");
    }
    return it->second;
}

const Basis& Session::basis(const std::string& name) const
{
    return require_basis(name);
}

const VectorValue& Session::vector(const std::string& name) const
{
    const auto it = vectors_.find(name);
    if (it == vectors_.end()) {
        throw ResolveError("unknown vector '" + name + "'");
    }
    return it->second;
}

const BangValue& Session::element(const std::string& name) const
{
    const auto it = elements_.find(name);
    if (it == elements_.end()) {
        if (vectors_.contains(name) || polys_.contains(name)) {
            throw ResolveError("'" + name + "' is not an element of !V");
        }
        throw ResolveError("unknown element '" + name + "'");
    }
    return it->second;
}

const LinearMapSpec& Session::linmap(const std::string& name) const
{
    const auto it = linmaps_.find(name);
    if (it == linmaps_.end()) {
        throw ResolveError("unknown linmap '" + name + "'");
    }
    return it->second;
}

const MatrixMapSpec& Session::linear(const std::string& name) const
{
    const auto it = linears_.find(name);
    if (it == linears_.end()) {
        throw ResolveError("unknown linear map '" + name + "'");
    }
    return it->second;
}

Vector Session::resolve_atom(const VecAtom& atom, const Basis& basis) const
{
    return std::visit(
        overloaded{
            [&](const std::string& name) -> Vector {
                if (const auto it = vectors_.find(name); it != vectors_.end()) {
                    require_same_basis(it->second.basis, basis, "vector '" + name + "'");
                    return it->second.value;
                }
                if (basis.contains(BasisIndex{name})) {
                    return Vector::unit(BasisIndex{name});
                }
                throw ResolveError("'" + name + "' is neither a vector nor a label of basis '" + basis.name() + "'");
            },
            [&](const Tuple& t) -> Vector {
                if (t.basis && *t.basis != basis.name()) {
                    require_basis(*t.basis);
                    throw ContextError("tuple is in basis '" + *t.basis + "', expected basis '" + basis.name() + "'");
                }
                if (t.coordinates.size() != basis.dimension()) {
                    throw ResolveError("tuple has " + std::to_string(t.coordinates.size()) + " coordinates, basis '" +
                                       basis.name() + "' has dimension " + std::to_string(basis.dimension()));
                }
                Vector v;
                for (std::size_t i = 0; i < t.coordinates.size(); ++i) {
                    v.add(basis.indices()[i], t.coordinates[i]);
                }
                return v;
            },
        },
        atom.value);
}

Vector Session::resolve_vector(const VecExpr& expr, const Basis& basis) const
{
    Vector result;
    for (const auto& term : expr.terms) {
        result += term.coefficient * resolve_atom(term.atom, basis);
    }
    return result;
}

const Basis& Session::infer_basis(const VecExpr& expr) const
{
    for (const auto& term : expr.terms) {
        if (const auto* name = std::get_if<std::string>(&term.atom.value)) {
            if (const auto it = vectors_.find(*name); it != vectors_.end()) {
                return require_basis(it->second.basis.name());
            }
            const bool is_label = std::any_of(bases_.begin(), bases_.end(), [&](const auto& entry) {
                return entry.second.contains(BasisIndex{*name});
            });
            if (!is_label) {
                throw ResolveError("unknown vector '" + *name + "'");
            }
        } else if (const auto& t = std::get<Tuple>(term.atom.value); t.basis) {
            return require_basis(*t.basis);
        }
    }
    throw ResolveError("cannot infer the basis of '" + to_source(expr) +
                       "'; use a named vector or a typed tuple such as W(1, 0)");
}

Polynomial Session::build_poly(const PolyNode& node, const Basis& basis) const
{
    using Kind = PolyNode::Kind;
    switch (node.kind) {
    case Kind::Constant:
        return Polynomial(node.value);
    case Kind::Variable:
        if (!basis.contains(BasisIndex{node.label})) {
            throw ResolveError("variable x." + node.label + " is not a label of basis '" + basis.name() + "'");
        }
        return Polynomial::variable(BasisIndex{node.label});
    case Kind::Negate:
        return -build_poly(node.children.front(), basis);
    case Kind::Sum: {
        Polynomial sum;
        for (const auto& child : node.children) {
            sum += build_poly(child, basis);
        }
        return sum;
    }
    case Kind::Product: {
        Polynomial product(Rational(1));
        for (const auto& child : node.children) {
            product = product * build_poly(child, basis);
        }
        return product;
    }
    case Kind::Power:
        return pow(build_poly(node.children.front(), basis), node.exponent);
    }
    return {};
}

Session::PolyValue Session::resolve_poly(const PolyAtom& atom) const
{
    return std::visit(overloaded{
                          [&](const std::string& name) -> PolyValue {
                              const auto it = polys_.find(name);
                              if (it == polys_.end()) {
                                  throw ResolveError("unknown polynomial '" + name + "'");
                              }
                              return it->second;
                          },
                          [&](const PolyLiteral& literal) -> PolyValue {
                              const Basis& basis = require_basis(literal.basis);
                              return {build_poly(literal.body, basis), basis};
                          },
                      },
                      atom.value);
}

BangValue Session::evaluate(const BangNode& node) const
{
    using Kind = BangNode::Kind;
    switch (node.kind) {
    case Kind::Name:
        return element(node.name);
    case Kind::Ket: {
        const Basis& basis = infer_basis(node.ket->point);
        const Vector point = resolve_vector(node.ket->point, basis);
        std::vector<Vector> nus;
        for (const auto& v : node.ket->vectors) {
            nus.push_back(resolve_vector(v, basis));
        }
        return {ket(point, nus), basis};
    }
    case Kind::Sum: {
        BangValue sum = evaluate(node.children.front());
        for (std::size_t i = 1; i < node.children.size(); ++i) {
            const BangValue term = evaluate(node.children[i]);
            require_same_basis(term.basis, sum.basis, "summand '" + to_source(node.children[i]) + "'");
            sum.value += term.value;
        }
        return sum;
    }
    case Kind::Scale: {
        BangValue v = evaluate(node.children.front());
        v.value *= node.scalar;
        return v;
    }
    case Kind::Promote: {
        const BangValue arg = evaluate(node.children.front());
        if (linmaps_.contains(node.name)) {
            const LinearMapSpec& phi = linmaps_.at(node.name);
            require_same_basis(arg.basis, phi.domain(), "argument of '" + node.name + "'");
            return {promote(phi, arg.value, partition_cap_), phi.codomain()};
        }
        if (linears_.contains(node.name)) {
            const MatrixMapSpec& psi = linears_.at(node.name);
            require_same_basis(arg.basis, psi.domain(), "argument of '" + node.name + "'");
            return {promote(derelict_then(psi), arg.value, partition_cap_), psi.codomain()};
        }
        throw ResolveError("unknown map '" + node.name + "'");
    }
    case Kind::Map: {
        const MatrixMapSpec& psi = linear(node.name);
        const BangValue arg = evaluate(node.children.front());
        require_same_basis(arg.basis, psi.domain(), "argument of '" + node.name + "'");
        return {bang_map(psi, arg.value), psi.codomain()};
    }
    case Kind::RAction: {
        const PolyValue f = resolve_poly(*node.poly);
        const BangValue arg = evaluate(node.children.front());
        require_same_basis(f.basis, arg.basis, "polynomial");
        return {r_action(f.value, arg.value), arg.basis};
    }
    case Kind::Creation: {
        const BangValue arg = evaluate(node.children.front());
        return {creation(resolve_atom(*node.vector, arg.basis), arg.value), arg.basis};
    }
    }
    throw ResolveError("malformed expression");
}

std::optional<QueryResult> Session::run(const Statement& statement)
{
    return std::visit(
        overloaded{
            [&](const DeclareBasis& decl) -> std::optional<QueryResult> {
                require_fresh(bases_, decl.name, "basis");
                std::vector<BasisIndex> indices;
                for (const auto& label : decl.labels) {
                    indices.push_back(BasisIndex{label});
                }
                try {
                    bases_.emplace(decl.name, Basis(decl.name, indices));
                } catch (const ContextError& e) {
                    throw ResolveError(e.what());
                }
                return std::nullopt;
            },
            [&](const LetVector& let) -> std::optional<QueryResult> {
                require_fresh(vectors_, let.name, "vector");
                const Basis& basis = require_basis(let.basis);
                vectors_.emplace(let.name, VectorValue{resolve_vector(let.value, basis), basis});
                return std::nullopt;
            },
            [&](const LetPoly& let) -> std::optional<QueryResult> {
                require_fresh(polys_, let.name, "polynomial");
                polys_.emplace(let.name, resolve_poly(let.value));
                return std::nullopt;
            },
            [&](const LetBang& let) -> std::optional<QueryResult> {
                require_fresh(elements_, let.name, "element");
                elements_.emplace(let.name, evaluate(let.value));
                return std::nullopt;
            },
            [&](const LinMapDecl& decl) -> std::optional<QueryResult> {
                if (linmaps_.contains(decl.name) || linears_.contains(decl.name)) {
                    throw ResolveError("map '" + decl.name + "' is already defined");
                }
                const Basis& domain = require_basis(decl.domain);
                const Basis& codomain = require_basis(decl.codomain);
                LinearMapSpec::Table table;
                for (const auto& [key, value] : decl.entries) {
                    std::vector<Multiindex::Entry> content;
                    for (const auto& [label, times] : key.content) {
                        if (!domain.contains(BasisIndex{label})) {
                            throw ResolveError("'" + label + "' is not a label of basis '" + domain.name() + "'");
                        }
                        content.emplace_back(BasisIndex{label}, times);
                    }
                    CanonicalKet ket{resolve_atom(key.point, domain), Multiindex(std::move(content))};
                    if (!table.emplace(ket, resolve_vector(value, codomain)).second) {
                        throw ResolveError("linmap '" + decl.name + "' lists the ket " +
                                           to_string(ket, positional_points(domain)) + " twice");
                    }
                }
                linmaps_.emplace(decl.name, LinearMapSpec(domain, codomain, table));
                return std::nullopt;
            },
            [&](const LinearDecl& decl) -> std::optional<QueryResult> {
                if (linmaps_.contains(decl.name) || linears_.contains(decl.name)) {
                    throw ResolveError("map '" + decl.name + "' is already defined");
                }
                const Basis& domain = require_basis(decl.domain);
                const Basis& codomain = require_basis(decl.codomain);
                MatrixMapSpec::Images images;
                for (const auto& [label, value] : decl.entries) {
                    if (!domain.contains(BasisIndex{label})) {
                        throw ResolveError("'" + label + "' is not a label of basis '" + domain.name() + "'");
                    }
                    if (!images.emplace(BasisIndex{label}, resolve_vector(value, codomain)).second) {
                        throw ResolveError("linear map '" + decl.name + "' gives '" + label + "' twice");
                    }
                }
                linears_.emplace(decl.name, MatrixMapSpec(domain, codomain, images));
                return std::nullopt;
            },
            [&](const SetOption& option) -> std::optional<QueryResult> {
                if (option.key != "partition_cap") {
                    throw ResolveError("unknown option '" + option.key + "'");
                }
                if (option.value.empty() || option.value.size() > 6 ||
                    option.value.find_first_not_of("0123456789") != std::string::npos) {
                    throw ResolveError("partition_cap must be a non-negative integer");
                }
                partition_cap_ = std::stoul(option.value);
                return std::nullopt;
            },
            [&](const Query& q) -> std::optional<QueryResult> {
                QueryResult result{statement.loc, to_source(q), statement.expect, ScalarValue{}};
                if (q.kind == QueryKind::Promote || q.kind == QueryKind::Map || q.kind == QueryKind::RAction ||
                    q.kind == QueryKind::Creation) {
                    // Same evaluation as the corresponding expression form.
                    BangNode node;
                    node.kind = q.kind == QueryKind::Promote  ? BangNode::Kind::Promote
                                : q.kind == QueryKind::Map    ? BangNode::Kind::Map
                                : q.kind == QueryKind::RAction ? BangNode::Kind::RAction
                                                               : BangNode::Kind::Creation;
                    node.name = q.map;
                    node.poly = q.poly;
                    node.vector = q.vector;
                    node.children.push_back(q.operand);
                    result.value = evaluate(node);
                    return result;
                }
                const BangValue arg = evaluate(q.operand);
                switch (q.kind) {
                case QueryKind::Delta:
                    result.value = TensorValue{coproduct(arg.value), arg.basis};
                    break;
                case QueryKind::Counit:
                    result.value = ScalarValue{counit(arg.value)};
                    break;
                case QueryKind::Dereliction:
                    result.value = VectorValue{dereliction(arg.value), arg.basis};
                    break;
                case QueryKind::Pair: {
                    const PolyValue f = resolve_poly(*q.poly);
                    require_same_basis(f.basis, arg.basis, "polynomial");
                    result.value = ScalarValue{residue_pair(f.value, arg.value)};
                    break;
                }
                case QueryKind::Fractions:
                    result.value = FractionsValue{to_fractions(arg.value), arg.basis};
                    break;
                default:
                    break;
                }
                return result;
            },
        },
        statement.command);
}

std::vector<QueryResult> Session::execute(std::span<const Statement> statements)
{
    std::vector<QueryResult> results;
    for (const auto& statement : statements) {
        try {
            if (auto result = run(statement)) {
                results.push_back(std::move(*result));
            }
        } catch (const ResolveError& e) {
            throw CommandError(ExitCode::ParseError, statement.loc, to_source(statement.command), e.what());
        } catch (const SizeLimitError& e) {
            throw CommandError(ExitCode::SizeLimit, statement.loc, to_source(statement.command), e.what());
        } catch (const std::exception& e) {
            throw CommandError(ExitCode::EvaluationError, statement.loc, to_source(statement.command), e.what());
        }
    }
    return results;
}

std::string render_text(const Value& value)
{
    return std::visit(overloaded{
                          [](const ScalarValue& v) { return v.value.to_string(); },
                          [](const VectorValue& v) { return to_string(v.value, v.basis); },
                          [](const BangValue& v) { return to_string(v.value, positional_points(v.basis)); },
                          [](const TensorValue& v) { return to_string(v.value, positional_points(v.basis)); },
                          [](const FractionsValue& v) { return to_string(v.value, positional_points(v.basis)); },
                      },
                      value);
}

CheckReport check_expectations(std::span<const QueryResult> results)
{
    CheckReport report;
    for (const auto& result : results) {
        if (!result.expect) {
            continue;
        }
        ++report.checked;
        const std::string actual = render_text(result.value);
        const std::string where = "line " + std::to_string(result.loc.line) + ": " + result.command;
        if (actual == *result.expect) {
            report.log += "ok    " + where + "\n";
        } else {
            ++report.failed;
            report.log += "FAIL  " + where + "\n      expected: " + *result.expect + "\n      actual:   " + actual + "\n";
        }
    }
    report.log += std::to_string(report.checked - report.failed) + "/" + std::to_string(report.checked) +
                  " expectations passed\n";
    return report;
}

} // namespace bang::cli
