#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bang/cli/ast.hpp"

namespace bang::cli::detail {

enum class TokenKind { Identifier, Integer, Symbol, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    SourceLoc loc;
};

struct ExpectAnnotation {
    SourceLoc loc;
    std::string text;
};

struct LexResult {
    std::vector<Token> tokens;  // terminated by an End token
    std::vector<ExpectAnnotation> expectations;
};

/// Symbols are single characters from ";,()[]{}|+-*/^=:!." plus "->".
LexResult lex(std::string_view source);

} // namespace bang::cli::detail
