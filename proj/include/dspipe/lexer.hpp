#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dspipe/errors.hpp"

namespace dspipe {

enum class TokenType {
    Name,
    Keyword,
    Number,
    String,
    Op,
    Newline,
    Indent,
    Dedent,
    EndOfFile,
};

struct Token {
    TokenType type;
    std::string text;   // as written (for String: the inner text, decoded)
    std::string prefix; // string literals only: lowercased prefix (r, b, f, rb, ...)
    int line = 1;       // 1-based
    int col = 0;        // 0-based
};

// Tokenizes one Python source cell. Emits INDENT/DEDENT pairs from the
// indentation structure, suppresses newlines inside brackets and after
// backslash continuations, and drops comments. Throws SyntaxError on
// malformed input (bad indentation, unterminated strings, stray characters).
std::vector<Token> tokenize(std::string_view source);

bool is_python_keyword(std::string_view word);

} // namespace dspipe
