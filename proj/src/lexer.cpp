#include "dspipe/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace dspipe {

namespace {

const std::unordered_set<std::string_view>& keywords() {
    static const std::unordered_set<std::string_view> kw{
        "False", "None", "True", "and", "as", "assert", "async", "await",
        "break", "class", "continue", "def", "del", "elif", "else", "except",
        "finally", "for", "from", "global", "if", "import", "in", "is",
        "lambda", "nonlocal", "not", "or", "pass", "raise", "return", "try",
        "while", "with", "yield",
    };
    return kw;
}

bool ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c >= 0x80;
}

bool ident_continue(unsigned char c) {
    return std::isalnum(c) || c == '_' || c >= 0x80;
}

bool string_prefix_ok(std::string_view p) {
    if (p.size() > 2) return false;
    std::string low(p);
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    static const std::array<std::string_view, 9> allowed{
        "r", "b", "u", "f", "rb", "br", "fr", "rf", "bf"};
    return std::find(allowed.begin(), allowed.end(), low) != allowed.end();
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {
        // strip a UTF-8 BOM
        if (src_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    }

    std::vector<Token> run() {
        indents_.push_back(0);
        at_line_start_ = true;
        while (pos_ < src_.size()) {
            if (at_line_start_ && paren_depth_ == 0) {
                if (!handle_line_start()) continue;
            }
            if (pos_ >= src_.size()) break;
            lex_one();
        }
        finish();
        return std::move(tokens_);
    }

private:
    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 0;
    int paren_depth_ = 0;
    bool at_line_start_ = true;
    std::vector<int> indents_;
    std::vector<Token> tokens_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError("line " + std::to_string(line_) + ": " + msg, line_);
    }

    char peek(size_t off = 0) const {
        return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
    }

    void advance(size_t n = 1) {
        for (size_t i = 0; i < n && pos_ < src_.size(); ++i) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 0;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void emit(TokenType t, std::string text, int line, int col) {
        tokens_.push_back(Token{t, std::move(text), "", line, col});
    }

    // Measures indentation and emits INDENT/DEDENT. Returns false when the
    // line turned out blank (caller restarts the loop), true when lexing
    // should proceed on this line.
    bool handle_line_start() {
        int width = 0;
        size_t p = pos_;
        while (p < src_.size()) {
            char c = src_[p];
            if (c == ' ') {
                ++width;
            } else if (c == '\t') {
                width = (width / 8 + 1) * 8;
            } else if (c == '\f' || c == '\r') {
                // ignore
            } else {
                break;
            }
            ++p;
        }
        if (p >= src_.size()) {
            advance(p - pos_);
            return false;
        }
        char c = src_[p];
        if (c == '\n') {
            advance(p - pos_ + 1);
            return false; // blank line
        }
        if (c == '#') {
            while (p < src_.size() && src_[p] != '\n') ++p;
            advance(p - pos_);
            if (pos_ < src_.size()) advance(); // the newline
            return false; // comment-only line
        }
        advance(p - pos_);
        at_line_start_ = false;
        if (width > indents_.back()) {
            indents_.push_back(width);
            emit(TokenType::Indent, "", line_, 0);
        } else {
            while (width < indents_.back()) {
                indents_.pop_back();
                emit(TokenType::Dedent, "", line_, 0);
            }
            if (width != indents_.back()) {
                fail("unindent does not match any outer indentation level");
            }
        }
        return true;
    }

    void lex_one() {
        char c = peek();
        if (c == '\n') {
            if (paren_depth_ > 0) {
                advance();
            } else {
                emit(TokenType::Newline, "\n", line_, col_);
                advance();
                at_line_start_ = true;
            }
            return;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
            advance();
            return;
        }
        if (c == '#') {
            while (pos_ < src_.size() && peek() != '\n') advance();
            return;
        }
        if (c == '\\') {
            // explicit line continuation
            size_t q = pos_ + 1;
            while (q < src_.size() && src_[q] == '\r') ++q;
            if (q < src_.size() && src_[q] == '\n') {
                advance(q - pos_ + 1);
                return;
            }
            fail("unexpected character after line continuation character");
        }
        if (ident_start(static_cast<unsigned char>(c))) {
            lex_name_or_string();
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            lex_number();
            return;
        }
        if (c == '\'' || c == '"') {
            lex_string("");
            return;
        }
        lex_operator();
    }

    void lex_name_or_string() {
        const int line = line_, col = col_;
        size_t start = pos_;
        while (pos_ < src_.size() && ident_continue(static_cast<unsigned char>(peek()))) {
            advance();
        }
        std::string word(src_.substr(start, pos_ - start));
        if ((peek() == '\'' || peek() == '"') && string_prefix_ok(word)) {
            lex_string(word);
            return;
        }
        TokenType t = keywords().count(word) ? TokenType::Keyword : TokenType::Name;
        emit(t, std::move(word), line, col);
    }

    void lex_number() {
        const int line = line_, col = col_;
        size_t start = pos_;
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'o' ||
                              peek(1) == 'O' || peek(1) == 'b' || peek(1) == 'B')) {
            advance(2);
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
        } else {
            while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
            if (peek() == '.') {
                advance();
                while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
            }
            if (peek() == 'e' || peek() == 'E') {
                size_t save = pos_;
                advance();
                if (peek() == '+' || peek() == '-') advance();
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
                } else {
                    pos_ = save; // not an exponent, e.g. `1e` would be `1 e`
                }
            }
            if (peek() == 'j' || peek() == 'J') advance();
        }
        emit(TokenType::Number, std::string(src_.substr(start, pos_ - start)), line, col);
    }

    void lex_string(std::string prefix) {
        const int line = line_, col = col_;
        std::string low(prefix);
        std::transform(low.begin(), low.end(), low.begin(),
                       [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
        const bool raw = low.find('r') != std::string::npos;
        const char quote = peek();
        bool triple = false;
        if (peek(1) == quote && peek(2) == quote) {
            triple = true;
            advance(3);
        } else {
            advance(1);
        }
        std::string value;
        while (true) {
            if (pos_ >= src_.size()) fail("unterminated string literal");
            char c = peek();
            if (c == '\\') {
                // a backslash always shields the next character from ending
                // the literal, raw or not
                char n = peek(1);
                if (pos_ + 1 >= src_.size()) fail("unterminated string literal");
                if (raw) {
                    value += c;
                    value += n;
                } else {
                    switch (n) {
                    case 'n': value += '\n'; break;
                    case 't': value += '\t'; break;
                    case 'r': value += '\r'; break;
                    case '\\': value += '\\'; break;
                    case '\'': value += '\''; break;
                    case '"': value += '"'; break;
                    case '0': value += '\0'; break;
                    case '\n': break; // escaped newline disappears
                    default:
                        value += c;
                        value += n;
                    }
                }
                advance(2);
                continue;
            }
            if (triple) {
                if (c == quote && peek(1) == quote && peek(2) == quote) {
                    advance(3);
                    break;
                }
                value += c;
                advance();
            } else {
                if (c == quote) {
                    advance();
                    break;
                }
                if (c == '\n') fail("EOL while scanning string literal");
                value += c;
                advance();
            }
        }
        Token t{TokenType::String, std::move(value), low, line, col};
        tokens_.push_back(std::move(t));
    }

    void lex_operator() {
        const int line = line_, col = col_;
        static const std::array<std::string_view, 5> three{"**=", "//=", ">>=", "<<=", "..."};
        static const std::array<std::string_view, 19> two{
            "**", "//", ">>", "<<", "<=", ">=", "==", "!=", "->", ":=",
            "+=", "-=", "*=", "/=", "%=", "@=", "&=", "|=", "^="};
        std::string_view rest = src_.substr(pos_);
        for (auto op : three) {
            if (rest.substr(0, 3) == op) {
                emit(TokenType::Op, std::string(op), line, col);
                advance(3);
                return;
            }
        }
        for (auto op : two) {
            if (rest.substr(0, 2) == op) {
                emit(TokenType::Op, std::string(op), line, col);
                advance(2);
                return;
            }
        }
        char c = peek();
        static const std::string singles = "+-*/%@&|^~<>()[]{},:.;=";
        if (singles.find(c) != std::string::npos) {
            if (c == '(' || c == '[' || c == '{') ++paren_depth_;
            if (c == ')' || c == ']' || c == '}') paren_depth_ = std::max(0, paren_depth_ - 1);
            emit(TokenType::Op, std::string(1, c), line, col);
            advance();
            return;
        }
        fail(std::string("invalid character '") + c + "'");
    }

    void finish() {
        if (!tokens_.empty() && tokens_.back().type != TokenType::Newline &&
            !at_line_start_) {
            emit(TokenType::Newline, "\n", line_, col_);
        }
        while (indents_.size() > 1) {
            indents_.pop_back();
            emit(TokenType::Dedent, "", line_, 0);
        }
        emit(TokenType::EndOfFile, "", line_, col_);
    }
};

} // namespace

std::vector<Token> tokenize(std::string_view source) {
    return Lexer(source).run();
}

bool is_python_keyword(std::string_view word) {
    return keywords().count(word) > 0;
}

} // namespace dspipe
