#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bang/bang_element.hpp"
#include "bang/cli/ast.hpp"
#include "bang/errors.hpp"
#include "bang/lifting.hpp"
#include "bang/polynomial.hpp"

namespace bang::cli {

enum class OutputFormat { Text, Machine };

/// Process exit codes of the command-line front end.
enum class ExitCode : int {
    Success = 0,
    ParseError = 1,
    EvaluationError = 2,
    SizeLimit = 3,
    CheckFailed = 4,
};

struct ScalarValue {
    Rational value;
};
struct VectorValue {
    Vector value;
    Basis basis;
};
struct BangValue {
    BangElement value;
    Basis basis;
};
struct TensorValue {
    TensorElement value;
    Basis basis;
};
struct FractionsValue {
    FractionTerms value;
    Basis basis;
};

using Value = std::variant<ScalarValue, VectorValue, BangValue, TensorValue, FractionsValue>;

struct QueryResult {
    SourceLoc loc;
    std::string command;  // canonical source of the query
    std::optional<std::string> expect;
    Value value;
};

/// An error raised while executing one statement, with that statement attached.
class CommandError : public Error {
public:
    CommandError(ExitCode code, SourceLoc loc, std::string command, const std::string& message);

    ExitCode code() const { return code_; }
    SourceLoc loc() const { return loc_; }
    const std::string& command() const { return command_; }

private:
    ExitCode code_;
    SourceLoc loc_;
    std::string command_;
};

/// Named bases and bindings, plus configuration. Bindings are immutable once
/// defined; names are unique per kind.
class Session {
public:
    explicit Session(std::size_t partition_cap = default_partition_cap) : partition_cap_(partition_cap) {}

    std::size_t partition_cap() const { return partition_cap_; }

    /// Runs the statements in order and returns the query results. Throws
    /// CommandError on the first failing statement; bindings made before it
    /// are kept.
    std::vector<QueryResult> execute(std::span<const Statement> statements);

    const Basis& basis(const std::string& name) const;
    const VectorValue& vector(const std::string& name) const;
    const BangValue& element(const std::string& name) const;
    const LinearMapSpec& linmap(const std::string& name) const;
    const MatrixMapSpec& linear(const std::string& name) const;

private:
    struct PolyValue {
        Polynomial value;
        Basis basis;
    };

    std::optional<QueryResult> run(const Statement& statement);

    Vector resolve_vector(const VecExpr& expr, const Basis& basis) const;
    Vector resolve_atom(const VecAtom& atom, const Basis& basis) const;
    const Basis& infer_basis(const VecExpr& expr) const;
    PolyValue resolve_poly(const PolyAtom& atom) const;
    Polynomial build_poly(const PolyNode& node, const Basis& basis) const;
    BangValue evaluate(const BangNode& node) const;
    const Basis& require_basis(const std::string& name) const;

    std::size_t partition_cap_;
    std::map<std::string, Basis> bases_;
    std::map<std::string, VectorValue> vectors_;
    std::map<std::string, PolyValue> polys_;
    std::map<std::string, BangValue> elements_;
    std::map<std::string, LinearMapSpec> linmaps_;
    std::map<std::string, MatrixMapSpec> linears_;
};

/// Text rendering: scalars "p/q", vectors positional "(2, 0)", elements in the
/// ket notation with positional points.
std::string render_text(const Value& value);

/// Compact JSON with rationals as "p/q" strings, e.g.
/// {"kind":"bang","terms":[{"point":{},"content":{},"coeff":"1"}]}.
std::string render_machine(const Value& value);

/// Whole-run output in the requested format. Machine output is a document
/// {"schema":"bang/1","results":[...]} with one result per line.
std::string render_results(std::span<const QueryResult> results, OutputFormat format);

struct CheckReport {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::string log;
};

/// Compares each annotated result's text rendering with its "expect:" text.
CheckReport check_expectations(std::span<const QueryResult> results);

} // namespace bang::cli
