#include "bang/cli/parser.hpp"

#include <algorithm>
#include <set>

#include "lexer.hpp"

namespace bang::cli {

namespace {

std::string located(const std::string& message, SourceLoc loc)
{
    return "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": " + message;
}

const std::set<std::string, std::less<>> keywords = {
    "basis", "let",   "linmap", "linear",    "set",   "ket",      "poly", "delta", "eps",
    "d",     "pair",  "raction", "creation", "promote", "map",    "fractions",
};

using detail::Token;
using detail::TokenKind;

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    std::vector<Statement> statements()
    {
        std::vector<Statement> result;
        while (!at_end()) {
            Statement s;
            s.loc = peek().loc;
            s.command = command();
            last_lines_.push_back(previous().loc);
            result.push_back(std::move(s));
        }
        return result;
    }

    /// Location of the last token of each parsed statement.
    const std::vector<SourceLoc>& statement_ends() const { return last_lines_; }

private:
    const Token& peek(std::size_t ahead = 0) const
    {
        return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
    }
    const Token& previous() const { return tokens_[pos_ - 1]; }
    static bool adjacent(const Token& first, const Token& second)
    {
        return first.loc.line == second.loc.line &&
               second.loc.column == first.loc.column + static_cast<int>(first.text.size());
    }

    bool at_end() const { return peek().kind == TokenKind::End; }

    bool check_symbol(std::string_view s, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == TokenKind::Symbol && peek(ahead).text == s;
    }
    bool check_keyword(std::string_view k) const
    {
        return peek().kind == TokenKind::Identifier && peek().text == k;
    }

    [[noreturn]] void fail(const std::string& message) const
    {
        const Token& t = peek();
        const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(message + ", found " + found, t.loc);
    }

    const Token& advance() { return tokens_[pos_++]; }

    void expect_symbol(std::string_view s)
    {
        if (!check_symbol(s)) {
            fail("expected '" + std::string(s) + "'");
        }
        advance();
    }

    void expect_keyword(std::string_view k)
    {
        if (!check_keyword(k)) {
            fail("expected '" + std::string(k) + "'");
        }
        advance();
    }

    std::string identifier(const std::string& what)
    {
        if (peek().kind != TokenKind::Identifier) {
            fail("expected " + what);
        }
        if (keywords.contains(peek().text)) {
            fail("expected " + what + " (keywords are reserved)");
        }
        return advance().text;
    }

    unsigned small_integer(const std::string& what)
    {
        if (peek().kind != TokenKind::Integer) {
            fail("expected " + what);
        }
        const Token& t = peek();
        if (t.text.size() > 6) {
            fail(what + " is too large");
        }
        advance();
        return static_cast<unsigned>(std::stoul(t.text));
    }

    bool starts_rational() const { return peek().kind == TokenKind::Integer; }

    Rational unsigned_rational()
    {
        if (peek().kind != TokenKind::Integer) {
            fail("expected a number");
        }
        std::string text = advance().text;
        if (check_symbol("/")) {
            advance();
            if (peek().kind != TokenKind::Integer) {
                fail("expected a denominator");
            }
            const Token& den = peek();
            if (den.text.find_first_not_of('0') == std::string::npos) {
                throw ParseError("zero denominator", den.loc);
            }
            text += "/" + advance().text;
        }
        return Rational::parse(text);
    }

    Rational signed_rational()
    {
        if (check_symbol("-")) {
            advance();
            return -unsigned_rational();
        }
        return unsigned_rational();
    }

    void end_statement() { expect_symbol(";"); }

    Command command()
    {
        if (peek().kind != TokenKind::Identifier) {
            fail("expected a statement");
        }
        const std::string& head = peek().text;
        if (head == "basis") {
            return declare_basis();
        }
        if (head == "let") {
            return let();
        }
        if (head == "linmap") {
            return linmap();
        }
        if (head == "linear") {
            return linear();
        }
        if (head == "set") {
            return set_option();
        }
        return query();
    }

    Command declare_basis()
    {
        expect_keyword("basis");
        DeclareBasis decl;
        decl.name = identifier("a basis name");
        expect_symbol("=");
        expect_symbol("{");
        while (!check_symbol("}")) {
            decl.labels.push_back(identifier("a basis label or '}'"));
        }
        advance();
        end_statement();
        return decl;
    }

    Command let()
    {
        expect_keyword("let");
        const std::string name = identifier("a binding name");
        if (check_symbol(":")) {
            advance();
            LetVector v{name, identifier("a basis name"), {}};
            expect_symbol("=");
            v.value = vec_expr();
            end_statement();
            return v;
        }
        expect_symbol("=");
        if (check_keyword("poly")) {
            LetPoly p{name, poly_atom()};
            end_statement();
            return p;
        }
        LetBang b{name, bang_expr()};
        end_statement();
        return b;
    }

    KetKey ket_key()
    {
        expect_symbol("|");
        KetKey key;
        if (peek().kind == TokenKind::Integer && peek().text == "0") {
            advance();
        } else {
            while (!check_symbol("|")) {
                std::string label = identifier("a basis label, '0' or '|'");
                unsigned times = 1;
                if (check_symbol("^")) {
                    advance();
                    times = small_integer("an exponent");
                }
                key.content.emplace_back(std::move(label), times);
            }
        }
        expect_symbol("|");
        // The point follows an underscore, which the lexer glues onto the next identifier.
        if (peek().kind != TokenKind::Identifier || peek().text.front() != '_') {
            fail("expected '_' and a point after the ket");
        }
        const Token& t = advance();
        const std::string rest = t.text.substr(1);
        if (rest.empty()) {
            if (!check_symbol("(")) {
                fail("expected a point after '_'");
            }
            key.point = VecAtom{tuple(std::nullopt)};
        } else if (check_symbol("(")) {
            key.point = VecAtom{tuple(rest)};
        } else {
            key.point = VecAtom{rest};
        }
        return key;
    }

    Command linmap()
    {
        expect_keyword("linmap");
        LinMapDecl decl;
        decl.name = identifier("a map name");
        expect_symbol(":");
        expect_symbol("!");
        decl.domain = identifier("a domain basis");
        expect_symbol("->");
        decl.codomain = identifier("a codomain basis");
        expect_symbol("{");
        while (!check_symbol("}")) {
            KetKey key = ket_key();
            expect_symbol("->");
            VecExpr value = vec_expr();
            expect_symbol(";");
            decl.entries.emplace_back(std::move(key), std::move(value));
        }
        advance();
        if (check_symbol(";")) {
            advance();
        }
        return decl;
    }

    Command linear()
    {
        expect_keyword("linear");
        LinearDecl decl;
        decl.name = identifier("a map name");
        expect_symbol(":");
        decl.domain = identifier("a domain basis");
        expect_symbol("->");
        decl.codomain = identifier("a codomain basis");
        expect_symbol("{");
        while (!check_symbol("}")) {
            std::string label = identifier("a basis label");
            expect_symbol("->");
            VecExpr value = vec_expr();
            expect_symbol(";");
            decl.entries.emplace_back(std::move(label), std::move(value));
        }
        advance();
        if (check_symbol(";")) {
            advance();
        }
        return decl;
    }

    Command set_option()
    {
        expect_keyword("set");
        SetOption option;
        option.key = identifier("an option name");
        expect_symbol("=");
        if (peek().kind != TokenKind::Integer && peek().kind != TokenKind::Identifier) {
            fail("expected an option value");
        }
        option.value = advance().text;
        end_statement();
        return option;
    }

    Command query()
    {
        const Token& head = peek();
        Query q;
        if (head.text == "delta") {
            q.kind = QueryKind::Delta;
        } else if (head.text == "eps") {
            q.kind = QueryKind::Counit;
        } else if (head.text == "d") {
            q.kind = QueryKind::Dereliction;
        } else if (head.text == "pair") {
            q.kind = QueryKind::Pair;
        } else if (head.text == "raction") {
            q.kind = QueryKind::RAction;
        } else if (head.text == "creation") {
            q.kind = QueryKind::Creation;
        } else if (head.text == "promote") {
            q.kind = QueryKind::Promote;
        } else if (head.text == "map") {
            q.kind = QueryKind::Map;
        } else if (head.text == "fractions") {
            q.kind = QueryKind::Fractions;
        } else {
            fail("expected a statement");
        }
        advance();
        switch (q.kind) {
        case QueryKind::Pair:
        case QueryKind::RAction:
            q.poly = poly_atom();
            break;
        case QueryKind::Creation:
            q.vector = vec_atom();
            break;
        case QueryKind::Promote:
        case QueryKind::Map:
            q.map = identifier("a map name");
            break;
        default:
            break;
        }
        q.operand = bang_expr();
        end_statement();
        return q;
    }

    // Vectors.

    Tuple tuple(std::optional<std::string> basis)
    {
        expect_symbol("(");
        Tuple t{std::move(basis), {}};
        if (!check_symbol(")")) {
            t.coordinates.push_back(signed_rational());
            while (check_symbol(",")) {
                advance();
                t.coordinates.push_back(signed_rational());
            }
        }
        if (!check_symbol(")")) {
            fail("expected ',' or ')' in coordinate tuple");
        }
        advance();
        return t;
    }

    VecAtom vec_atom()
    {
        if (check_symbol("(")) {
            return VecAtom{tuple(std::nullopt)};
        }
        const Token& head = peek();
        std::string name = identifier("a vector, basis label or coordinate tuple");
        // "W(1, 0)" is a typed tuple only when the parenthesis touches the name.
        if (check_symbol("(") && adjacent(head, peek())) {
            return VecAtom{tuple(std::move(name))};
        }
        return VecAtom{std::move(name)};
    }

    VecTerm vec_term(Rational sign)
    {
        VecTerm term;
        if (starts_rational()) {
            term.coefficient = sign * unsigned_rational();
            expect_symbol("*");
        } else {
            term.coefficient = sign;
        }
        term.atom = vec_atom();
        return term;
    }

    VecExpr vec_expr()
    {
        VecExpr expr;
        Rational sign(1);
        if (check_symbol("-")) {
            advance();
            sign = Rational(-1);
        }
        expr.terms.push_back(vec_term(sign));
        while (check_symbol("+") || check_symbol("-")) {
            sign = advance().text == "-" ? Rational(-1) : Rational(1);
            expr.terms.push_back(vec_term(sign));
        }
        return expr;
    }

    // Polynomials.

    PolyAtom poly_atom()
    {
        if (check_keyword("poly")) {
            advance();
            expect_symbol("[");
            PolyLiteral literal;
            literal.basis = identifier("a basis name");
            expect_symbol("]");
            expect_symbol("{");
            literal.body = poly_expr();
            expect_symbol("}");
            return PolyAtom{std::move(literal)};
        }
        return PolyAtom{identifier("a polynomial")};
    }

    static PolyNode negate(PolyNode node)
    {
        PolyNode n;
        n.kind = PolyNode::Kind::Negate;
        n.children.push_back(std::move(node));
        return n;
    }

    PolyNode poly_expr()
    {
        std::vector<PolyNode> terms;
        if (check_symbol("-")) {
            advance();
            terms.push_back(negate(poly_term()));
        } else {
            terms.push_back(poly_term());
        }
        while (check_symbol("+") || check_symbol("-")) {
            const bool minus = advance().text == "-";
            PolyNode t = poly_term();
            terms.push_back(minus ? negate(std::move(t)) : std::move(t));
        }
        if (terms.size() == 1) {
            return std::move(terms.front());
        }
        PolyNode sum;
        sum.kind = PolyNode::Kind::Sum;
        sum.children = std::move(terms);
        return sum;
    }

    PolyNode poly_term()
    {
        std::vector<PolyNode> factors{poly_power()};
        while (check_symbol("*")) {
            advance();
            factors.push_back(poly_power());
        }
        if (factors.size() == 1) {
            return std::move(factors.front());
        }
        PolyNode product;
        product.kind = PolyNode::Kind::Product;
        product.children = std::move(factors);
        return product;
    }

    PolyNode poly_power()
    {
        PolyNode base = poly_factor();
        if (!check_symbol("^")) {
            return base;
        }
        advance();
        PolyNode power;
        power.kind = PolyNode::Kind::Power;
        power.exponent = small_integer("an exponent");
        power.children.push_back(std::move(base));
        return power;
    }

    PolyNode poly_factor()
    {
        if (starts_rational()) {
            PolyNode c;
            c.kind = PolyNode::Kind::Constant;
            c.value = unsigned_rational();
            return c;
        }
        if (check_symbol("(")) {
            advance();
            PolyNode inner = poly_expr();
            expect_symbol(")");
            return inner;
        }
        if (check_keyword("x") && check_symbol(".", 1)) {
            advance();
            advance();
            PolyNode v;
            v.kind = PolyNode::Kind::Variable;
            v.label = identifier("a variable label after 'x.'");
            return v;
        }
        fail("expected a number, 'x.<label>' or '('");
    }

    // Elements of !V.

    static BangNode negate(BangNode node)
    {
        if (node.kind == BangNode::Kind::Scale) {
            node.scalar = -node.scalar;
            return node;
        }
        BangNode scaled;
        scaled.kind = BangNode::Kind::Scale;
        scaled.scalar = Rational(-1);
        scaled.children.push_back(std::move(node));
        return scaled;
    }

    BangNode bang_expr()
    {
        std::vector<BangNode> terms;
        if (check_symbol("-")) {
            advance();
            terms.push_back(negate(bang_term()));
        } else {
            terms.push_back(bang_term());
        }
        while (check_symbol("+") || check_symbol("-")) {
            const bool minus = advance().text == "-";
            BangNode t = bang_term();
            terms.push_back(minus ? negate(std::move(t)) : std::move(t));
        }
        if (terms.size() == 1) {
            return std::move(terms.front());
        }
        BangNode sum;
        sum.kind = BangNode::Kind::Sum;
        sum.children = std::move(terms);
        return sum;
    }

    BangNode bang_term()
    {
        if (starts_rational()) {
            BangNode scaled;
            scaled.kind = BangNode::Kind::Scale;
            scaled.scalar = unsigned_rational();
            expect_symbol("*");
            scaled.children.push_back(bang_term());
            return scaled;
        }
        return bang_primary();
    }

    BangNode bang_primary()
    {
        BangNode node;
        if (check_symbol("(")) {
            advance();
            node = bang_expr();
            expect_symbol(")");
            return node;
        }
        if (check_keyword("ket")) {
            advance();
            expect_symbol("[");
            KetLiteral literal;
            literal.point = vec_expr();
            expect_symbol(";");
            if (!check_symbol("]")) {
                literal.vectors.push_back(vec_expr());
                while (check_symbol(",")) {
                    advance();
                    literal.vectors.push_back(vec_expr());
                }
            }
            expect_symbol("]");
            node.kind = BangNode::Kind::Ket;
            node.ket = std::move(literal);
            return node;
        }
        if (check_keyword("promote") || check_keyword("map")) {
            node.kind = advance().text == "promote" ? BangNode::Kind::Promote : BangNode::Kind::Map;
            node.name = identifier("a map name");
            node.children.push_back(bang_primary());
            return node;
        }
        if (check_keyword("raction")) {
            advance();
            node.kind = BangNode::Kind::RAction;
            node.poly = poly_atom();
            node.children.push_back(bang_primary());
            return node;
        }
        if (check_keyword("creation")) {
            advance();
            node.kind = BangNode::Kind::Creation;
            node.vector = vec_atom();
            node.children.push_back(bang_primary());
            return node;
        }
        node.kind = BangNode::Kind::Name;
        node.name = identifier("an element of !V");
        return node;
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
    std::vector<SourceLoc> last_lines_;
};

} // namespace

ParseError::ParseError(const std::string& message, SourceLoc loc)
    : Error(located(message, loc)), loc_(loc), detail_(message)
{
}

std::vector<Statement> parse(std::string_view source)
{
    const detail::LexResult lexed = detail::lex(source);
    Parser parser(lexed.tokens);
    std::vector<Statement> statements = parser.statements();
    const std::vector<SourceLoc>& ends = parser.statement_ends();

    for (const auto& annotation : lexed.expectations) {
        // Attach to the last statement that ended earlier on the same line.
        auto it = std::find_if(ends.rbegin(), ends.rend(), [&](const SourceLoc& end) {
            return end.line == annotation.loc.line && end.column < annotation.loc.column;
        });
        if (it == ends.rend()) {
            throw ParseError("'expect:' annotation must follow a statement on the same line", annotation.loc);
        }
        const auto index = static_cast<std::size_t>(ends.rend() - it - 1);
        if (!std::holds_alternative<Query>(statements[index].command)) {
            throw ParseError("'expect:' annotation must follow a query", annotation.loc);
        }
        statements[index].expect = annotation.text;
    }
    return statements;
}

} // namespace bang::cli
