#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bang/rational.hpp"

namespace bang::cli {

struct SourceLoc {
    int line = 1;
    int column = 1;
};

/// "(1, -1/2)" or, with an explicit basis, "W(1, -1/2)" (no space before the parenthesis).
struct Tuple {
    std::optional<std::string> basis;
    std::vector<Rational> coordinates;

    friend bool operator==(const Tuple&, const Tuple&) = default;
};

/// A bound vector name, a basis label, or a coordinate tuple. Names shadow labels.
struct VecAtom {
    std::variant<std::string, Tuple> value;

    friend bool operator==(const VecAtom&, const VecAtom&) = default;
};

struct VecTerm {
    Rational coefficient{1};
    VecAtom atom;

    friend bool operator==(const VecTerm&, const VecTerm&) = default;
};

/// Linear combination of vector atoms, e.g. "2*e1 - P".
struct VecExpr {
    std::vector<VecTerm> terms;

    friend bool operator==(const VecExpr&, const VecExpr&) = default;
};

struct PolyNode {
    enum class Kind { Constant, Variable, Sum, Product, Power, Negate };

    Kind kind = Kind::Constant;
    Rational value;         // Constant
    std::string label;      // Variable
    unsigned exponent = 1;  // Power
    std::vector<PolyNode> children;

    friend bool operator==(const PolyNode&, const PolyNode&) = default;
};

/// "poly[W]{ ... }".
struct PolyLiteral {
    std::string basis;
    PolyNode body;

    friend bool operator==(const PolyLiteral&, const PolyLiteral&) = default;
};

struct PolyAtom {
    std::variant<std::string, PolyLiteral> value;

    friend bool operator==(const PolyAtom&, const PolyAtom&) = default;
};

/// "ket[P; v1, v2]".
struct KetLiteral {
    VecExpr point;
    std::vector<VecExpr> vectors;

    friend bool operator==(const KetLiteral&, const KetLiteral&) = default;
};

/// Expression denoting an element of !V.
struct BangNode {
    enum class Kind { Name, Ket, Sum, Scale, Promote, Map, RAction, Creation };

    Kind kind = Kind::Name;
    std::string name;  // Name; map name for Promote and Map
    std::optional<KetLiteral> ket;
    Rational scalar{1};
    std::optional<PolyAtom> poly;  // RAction
    std::optional<VecAtom> vector; // Creation
    std::vector<BangNode> children;

    friend bool operator==(const BangNode&, const BangNode&) = default;
};

struct DeclareBasis {
    std::string name;
    std::vector<std::string> labels;

    friend bool operator==(const DeclareBasis&, const DeclareBasis&) = default;
};

struct LetVector {
    std::string name;
    std::string basis;
    VecExpr value;

    friend bool operator==(const LetVector&, const LetVector&) = default;
};

struct LetPoly {
    std::string name;
    PolyAtom value;

    friend bool operator==(const LetPoly&, const LetPoly&) = default;
};

struct LetBang {
    std::string name;
    BangNode value;

    friend bool operator==(const LetBang&, const LetBang&) = default;
};

/// "|e1^2 e2|_P" as a table key; empty content is written "|0|".
struct KetKey {
    std::vector<std::pair<std::string, unsigned>> content;
    VecAtom point;

    friend bool operator==(const KetKey&, const KetKey&) = default;
};

/// "linmap phi : !W -> V { |e1|_P -> (1, 0); ... }".
struct LinMapDecl {
    std::string name;
    std::string domain;
    std::string codomain;
    std::vector<std::pair<KetKey, VecExpr>> entries;

    friend bool operator==(const LinMapDecl&, const LinMapDecl&) = default;
};

/// "linear psi : W -> V { e1 -> (0, 1); ... }".
struct LinearDecl {
    std::string name;
    std::string domain;
    std::string codomain;
    std::vector<std::pair<std::string, VecExpr>> entries;

    friend bool operator==(const LinearDecl&, const LinearDecl&) = default;
};

enum class QueryKind { Delta, Counit, Dereliction, Pair, RAction, Creation, Promote, Map, Fractions };

struct Query {
    QueryKind kind = QueryKind::Counit;
    std::string map;                // Promote, Map
    std::optional<PolyAtom> poly;   // Pair, RAction
    std::optional<VecAtom> vector;  // Creation
    BangNode operand;

    friend bool operator==(const Query&, const Query&) = default;
};

/// "set partition_cap = 8;".
struct SetOption {
    std::string key;
    std::string value;

    friend bool operator==(const SetOption&, const SetOption&) = default;
};

using Command = std::variant<DeclareBasis, LetVector, LetPoly, LetBang, LinMapDecl, LinearDecl, Query, SetOption>;

/// A parsed statement. Equality ignores the source location.
struct Statement {
    Command command;
    SourceLoc loc;
    /// Text of a trailing "# expect: ..." comment on the statement's last line.
    std::optional<std::string> expect;

    friend bool operator==(const Statement& a, const Statement& b)
    {
        return a.command == b.command && a.expect == b.expect;
    }
};

/// Canonical source text; parse(to_source(s)) reproduces s.
std::string to_source(const Command& command);
std::string to_source(const Statement& statement);
std::string to_source(const std::vector<Statement>& statements);

std::string to_source(const VecExpr& expr);
std::string to_source(const PolyNode& node);
std::string to_source(const BangNode& node);

} // namespace bang::cli
