#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bang/cli/ast.hpp"
#include "bang/errors.hpp"

namespace bang::cli {

/// Syntax or name-resolution error, located in the source.
class ParseError : public Error {
public:
    ParseError(const std::string& message, SourceLoc loc);

    SourceLoc loc() const { return loc_; }
    const std::string& detail() const { return detail_; }

private:
    SourceLoc loc_;
    std::string detail_;
};

/// Parses a command file: one statement per ';' (braced map bodies may hold
/// inner ';'), '#' comments to end of line.
std::vector<Statement> parse(std::string_view source);

} // namespace bang::cli
