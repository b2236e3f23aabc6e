#include "lexer.hpp"

#include <cctype>

#include "bang/cli/parser.hpp"

namespace bang::cli::detail {

namespace {

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

} // namespace

LexResult lex(std::string_view source)
{
    LexResult result;
    constexpr std::string_view symbols = ";,()[]{}|+-*/^=:!.";
    int line = 1;
    int column = 1;
    std::size_t i = 0;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (source[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };

    while (i < source.size()) {
        const char c = source[i];
        const SourceLoc loc{line, column};
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
        } else if (c == '#') {
            const auto end = source.find('\n', i);
            const std::string_view comment =
                source.substr(i + 1, (end == std::string_view::npos ? source.size() : end) - i - 1);
            const std::string body = trim(comment);
            if (body.rfind("expect:", 0) == 0) {
                result.expectations.push_back({loc, trim(std::string_view(body).substr(7))});
            }
            advance(comment.size() + 1);
        } else if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < source.size() && is_ident_char(source[j])) {
                ++j;
            }
            result.tokens.push_back({TokenKind::Identifier, std::string(source.substr(i, j - i)), loc});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < source.size() && std::isdigit(static_cast<unsigned char>(source[j]))) {
                ++j;
            }
            result.tokens.push_back({TokenKind::Integer, std::string(source.substr(i, j - i)), loc});
            advance(j - i);
        } else if (c == '-' && i + 1 < source.size() && source[i + 1] == '>') {
            result.tokens.push_back({TokenKind::Symbol, "->", loc});
            advance(2);
        } else if (symbols.find(c) != std::string_view::npos) {
            result.tokens.push_back({TokenKind::Symbol, std::string(1, c), loc});
            advance(1);
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", loc);
        }
    }
    result.tokens.push_back({TokenKind::End, "", SourceLoc{line, column}});
    return result;
}

} // namespace bang::cli::detail
