#include "dspipe/parser.hpp"

#include <array>

#include "dspipe/lexer.hpp"

namespace dspipe {

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    NodePtr run() {
        auto module = make_node(NodeKind::Module, 1, 0);
        skip_newlines();
        while (!at_end()) {
            parse_statement(*module);
            skip_newlines();
        }
        return module;
    }

private:
    std::vector<Token> toks_;
    size_t i_ = 0;

    // ---- token helpers -------------------------------------------------

    const Token& cur() const { return toks_[i_]; }
    const Token& ahead(size_t n = 1) const {
        size_t j = i_ + n;
        return j < toks_.size() ? toks_[j] : toks_.back();
    }
    bool at_end() const { return cur().type == TokenType::EndOfFile; }

    bool at(TokenType t) const { return cur().type == t; }
    bool at_op(std::string_view text) const {
        return cur().type == TokenType::Op && cur().text == text;
    }
    bool at_kw(std::string_view text) const {
        return cur().type == TokenType::Keyword && cur().text == text;
    }

    Token take() { return toks_[i_++]; }

    bool accept_op(std::string_view text) {
        if (at_op(text)) {
            ++i_;
            return true;
        }
        return false;
    }
    bool accept_kw(std::string_view text) {
        if (at_kw(text)) {
            ++i_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        int line = cur().line;
        throw SyntaxError("line " + std::to_string(line) + ": " + msg, line);
    }

    void expect_op(std::string_view text) {
        if (!accept_op(text)) fail("expected '" + std::string(text) + "'");
    }
    void expect_kw(std::string_view text) {
        if (!accept_kw(text)) fail("expected '" + std::string(text) + "'");
    }
    std::string expect_name() {
        if (!at(TokenType::Name)) fail("expected identifier");
        return take().text;
    }
    void expect_newline() {
        if (at(TokenType::Newline)) {
            ++i_;
            return;
        }
        if (at_end() || at(TokenType::Dedent)) return;
        fail("expected end of line, got '" + cur().text + "'");
    }

    void skip_newlines() {
        while (at(TokenType::Newline)) ++i_;
    }

    NodePtr node_here(NodeKind k) const {
        return make_node(k, cur().line, cur().col);
    }

    // ---- statements ----------------------------------------------------

    void parse_statement(Node& into) {
        if (at(TokenType::Keyword)) {
            const std::string& kw = cur().text;
            if (kw == "if") return parse_if(into);
            if (kw == "while") return parse_while(into);
            if (kw == "for") return parse_for(into, false);
            if (kw == "try") return parse_try(into);
            if (kw == "with") return parse_with(into, false);
            if (kw == "def") return parse_def(into, {}, false);
            if (kw == "class") return parse_class(into, {});
            if (kw == "async") return parse_async(into);
        }
        if (at_op("@")) return parse_decorated(into);
        parse_simple_line(into);
    }

    void parse_async(Node& into) {
        expect_kw("async");
        if (at_kw("def")) return parse_def(into, {}, true);
        if (at_kw("for")) return parse_for(into, true);
        if (at_kw("with")) return parse_with(into, true);
        fail("expected 'def', 'for' or 'with' after 'async'");
    }

    void parse_decorated(Node& into) {
        std::vector<NodePtr> decorators;
        while (at_op("@")) {
            ++i_;
            decorators.push_back(parse_test());
            expect_newline();
            skip_newlines();
        }
        if (at_kw("def")) return parse_def(into, std::move(decorators), false);
        if (at_kw("class")) return parse_class(into, std::move(decorators));
        if (at_kw("async")) {
            ++i_;
            if (at_kw("def")) return parse_def(into, std::move(decorators), true);
        }
        fail("expected function or class after decorators");
    }

    void parse_if(Node& into) {
        auto node = node_here(NodeKind::If);
        Node& n = *node;
        into.add(std::move(node));
        expect_kw("if");
        n.add(parse_namedexpr());
        parse_suite(n);
        if (at_kw("elif")) {
            // an elif chain nests as an If in the else position
            auto nested = node_here(NodeKind::If);
            Node& m = n.add(std::move(nested));
            ++i_;
            m.add(parse_namedexpr());
            parse_suite(m);
            parse_elif_chain(m);
        } else if (accept_kw("else")) {
            parse_suite(n);
        }
    }

    void parse_elif_chain(Node& n) {
        if (at_kw("elif")) {
            auto nested = node_here(NodeKind::If);
            Node& m = n.add(std::move(nested));
            ++i_;
            m.add(parse_namedexpr());
            parse_suite(m);
            parse_elif_chain(m);
        } else if (accept_kw("else")) {
            parse_suite(n);
        }
    }

    void parse_while(Node& into) {
        auto node = node_here(NodeKind::While);
        Node& n = into.add(std::move(node));
        expect_kw("while");
        n.add(parse_namedexpr());
        parse_suite(n);
        if (accept_kw("else")) parse_suite(n);
    }

    void parse_for(Node& into, bool is_async) {
        auto node = node_here(NodeKind::For);
        if (is_async) node->extra = "async";
        Node& n = into.add(std::move(node));
        expect_kw("for");
        n.add(parse_for_targets());
        expect_kw("in");
        n.add(parse_testlist());
        parse_suite(n);
        if (accept_kw("else")) parse_suite(n);
    }

    void parse_try(Node& into) {
        auto node = node_here(NodeKind::Try);
        Node& n = into.add(std::move(node));
        expect_kw("try");
        parse_suite(n);
        while (at_kw("except")) {
            auto handler = node_here(NodeKind::ExceptHandler);
            Node& h = n.add(std::move(handler));
            ++i_;
            accept_op("*"); // except* groups
            if (!at_op(":")) {
                h.add(parse_test());
                if (accept_kw("as")) h.value = expect_name();
            }
            parse_suite(h);
        }
        if (accept_kw("else")) parse_suite(n);
        if (accept_kw("finally")) parse_suite(n);
    }

    void parse_with(Node& into, bool is_async) {
        auto node = node_here(NodeKind::With);
        if (is_async) node->extra = "async";
        Node& n = into.add(std::move(node));
        expect_kw("with");
        do {
            auto item = node_here(NodeKind::WithItem);
            Node& it = n.add(std::move(item));
            it.add(parse_test());
            if (accept_kw("as")) it.add(parse_postfix_target());
        } while (accept_op(","));
        parse_suite(n);
    }

    void parse_def(Node& into, std::vector<NodePtr> decorators, bool is_async) {
        auto node = node_here(NodeKind::FunctionDef);
        if (is_async) node->extra = "async";
        Node& n = into.add(std::move(node));
        for (auto& d : decorators) n.add(std::move(d));
        expect_kw("def");
        n.value = expect_name();
        expect_op("(");
        parse_params(n, true);
        expect_op(")");
        if (accept_op("->")) n.add(parse_test());
        parse_suite(n);
    }

    void parse_class(Node& into, std::vector<NodePtr> decorators) {
        auto node = node_here(NodeKind::ClassDef);
        Node& n = into.add(std::move(node));
        for (auto& d : decorators) n.add(std::move(d));
        expect_kw("class");
        n.value = expect_name();
        if (accept_op("(")) {
            parse_call_args(n); // bases and metaclass keywords
            expect_op(")");
        }
        parse_suite(n);
    }

    // parenthesized (def) or bare (lambda) parameter list
    void parse_params(Node& into, bool allow_annotations) {
        const std::string_view closer = allow_annotations ? ")" : ":";
        while (!at_op(closer)) {
            if (at_op("*") || at_op("**") || at_op("/")) {
                auto marker = node_here(NodeKind::Param);
                Node& p = into.add(std::move(marker));
                p.extra = take().text; // "*", "**" or "/"
                if (p.extra != "/" && at(TokenType::Name)) p.value = take().text;
                if (p.value.empty()) p.kind = NodeKind::ParamMarker;
            } else {
                auto param = node_here(NodeKind::Param);
                Node& p = into.add(std::move(param));
                p.value = expect_name();
                if (allow_annotations && accept_op(":")) p.add(parse_test());
                if (accept_op("=")) p.add(parse_test());
            }
            if (!accept_op(",")) break;
        }
    }

    void parse_simple_line(Node& into) {
        while (true) {
            parse_small_stmt(into);
            if (accept_op(";")) {
                if (at(TokenType::Newline) || at_end() || at(TokenType::Dedent)) break;
                continue;
            }
            break;
        }
        expect_newline();
    }

    void parse_small_stmt(Node& into) {
        if (at(TokenType::Keyword)) {
            const std::string& kw = cur().text;
            if (kw == "pass" || kw == "break" || kw == "continue") {
                NodeKind k = kw == "pass" ? NodeKind::Pass
                             : kw == "break" ? NodeKind::Break
                                             : NodeKind::Continue;
                into.add(node_here(k));
                ++i_;
                return;
            }
            if (kw == "return") {
                Node& n = into.add(node_here(NodeKind::Return));
                ++i_;
                if (!at(TokenType::Newline) && !at_op(";") && !at_end() &&
                    !at(TokenType::Dedent)) {
                    n.add(parse_testlist_star());
                }
                return;
            }
            if (kw == "raise") {
                Node& n = into.add(node_here(NodeKind::Raise));
                ++i_;
                if (!at(TokenType::Newline) && !at_op(";") && !at_end() &&
                    !at(TokenType::Dedent)) {
                    n.add(parse_test());
                    if (accept_kw("from")) n.add(parse_test());
                }
                return;
            }
            if (kw == "assert") {
                Node& n = into.add(node_here(NodeKind::Assert));
                ++i_;
                n.add(parse_test());
                if (accept_op(",")) n.add(parse_test());
                return;
            }
            if (kw == "del") {
                Node& n = into.add(node_here(NodeKind::Delete));
                ++i_;
                n.add(parse_target_list());
                return;
            }
            if (kw == "global" || kw == "nonlocal") {
                Node& n = into.add(
                    node_here(kw == "global" ? NodeKind::Global : NodeKind::Nonlocal));
                ++i_;
                do {
                    auto name = node_here(NodeKind::Name);
                    name->value = expect_name();
                    n.add(std::move(name));
                } while (accept_op(","));
                return;
            }
            if (kw == "import") return parse_import(into);
            if (kw == "from") return parse_import_from(into);
            if (kw == "yield") {
                Node& n = into.add(node_here(NodeKind::ExprStmt));
                n.add(parse_yield_expr());
                return;
            }
        }
        parse_expr_statement(into);
    }

    void parse_import(Node& into) {
        Node& n = into.add(node_here(NodeKind::Import));
        expect_kw("import");
        do {
            auto alias = node_here(NodeKind::ImportAlias);
            Node& a = n.add(std::move(alias));
            a.value = parse_dotted_name();
            if (accept_kw("as")) a.extra = expect_name();
        } while (accept_op(","));
    }

    void parse_import_from(Node& into) {
        Node& n = into.add(node_here(NodeKind::ImportFrom));
        expect_kw("from");
        int level = 0;
        while (at_op(".") || at_op("...")) {
            level += cur().text == "..." ? 3 : 1;
            ++i_;
        }
        n.aux = level;
        if (!at_kw("import")) n.value = parse_dotted_name();
        expect_kw("import");
        if (accept_op("*")) {
            auto star = node_here(NodeKind::ImportAlias);
            star->value = "*";
            n.add(std::move(star));
            return;
        }
        const bool parens = accept_op("(");
        do {
            if (parens && at_op(")")) break; // trailing comma
            auto alias = node_here(NodeKind::ImportAlias);
            Node& a = n.add(std::move(alias));
            a.value = expect_name();
            if (accept_kw("as")) a.extra = expect_name();
        } while (accept_op(","));
        if (parens) expect_op(")");
    }

    std::string parse_dotted_name() {
        std::string name = expect_name();
        while (at_op(".") && ahead().type == TokenType::Name) {
            ++i_;
            name += '.';
            name += expect_name();
        }
        return name;
    }

    static bool is_aug_op(const std::string& t) {
        static const std::array<std::string_view, 13> ops{
            "+=", "-=", "*=", "/=", "//=", "%=", "@=",
            "&=", "|=", "^=", ">>=", "<<=", "**="};
        for (auto o : ops)
            if (t == o) return true;
        return false;
    }

    void parse_expr_statement(Node& into) {
        const int line = cur().line, col = cur().col;
        NodePtr first = parse_testlist_star();
        if (at(TokenType::Op) && is_aug_op(cur().text)) {
            auto node = make_node(NodeKind::AugAssign, line, col);
            node->value = take().text;
            node->add(std::move(first));
            node->add(at_kw("yield") ? parse_yield_expr() : parse_testlist());
            into.add(std::move(node));
            return;
        }
        if (at_op(":") && !at(TokenType::Newline)) {
            // annotated assignment: target ':' annotation ['=' value]
            ++i_;
            auto node = make_node(NodeKind::AnnAssign, line, col);
            node->add(std::move(first));
            node->add(parse_test());
            if (accept_op("=")) node->add(parse_testlist_star());
            into.add(std::move(node));
            return;
        }
        if (at_op("=")) {
            auto node = make_node(NodeKind::Assign, line, col);
            node->add(std::move(first));
            while (accept_op("=")) {
                node->add(at_kw("yield") ? parse_yield_expr() : parse_testlist_star());
            }
            into.add(std::move(node));
            return;
        }
        auto node = make_node(NodeKind::ExprStmt, line, col);
        node->add(std::move(first));
        into.add(std::move(node));
    }

    // ---- suites ----------------------------------------------------------

    void parse_suite(Node& into) {
        expect_op(":");
        if (at(TokenType::Newline)) {
            ++i_;
            skip_newlines();
            if (!at(TokenType::Indent)) fail("expected an indented block");
            ++i_;
            skip_newlines();
            while (!at(TokenType::Dedent) && !at_end()) {
                parse_statement(into);
                skip_newlines();
            }
            if (at(TokenType::Dedent)) ++i_;
        } else {
            // inline suite: small_stmt (';' small_stmt)* NEWLINE
            parse_simple_line(into);
        }
    }

    // ---- expressions -------------------------------------------------

    NodePtr parse_yield_expr() {
        auto node = node_here(NodeKind::Yield);
        expect_kw("yield");
        if (accept_kw("from")) {
            node->kind = NodeKind::YieldFrom;
            node->add(parse_test());
        } else if (!at(TokenType::Newline) && !at_op(")") && !at_op(";") &&
                   !at_op("]") && !at_op("}") && !at(TokenType::Dedent) && !at_end()) {
            node->add(parse_testlist());
        }
        return node;
    }

    NodePtr parse_target_list() { return parse_testlist_star(); }
    NodePtr parse_postfix_target() { return parse_postfix(); }

    // expr (',' expr)* with star elements; a bare single expr stays itself
    NodePtr parse_testlist_star() {
        const int line = cur().line, col = cur().col;
        NodePtr first = parse_star_or_test();
        if (!at_op(",")) return first;
        auto tuple = make_node(NodeKind::Tuple, line, col);
        tuple->add(std::move(first));
        while (accept_op(",")) {
            if (starts_expression()) {
                tuple->add(parse_star_or_test());
            } else {
                break; // trailing comma
            }
        }
        return tuple;
    }

    NodePtr parse_testlist() {
        const int line = cur().line, col = cur().col;
        NodePtr first = parse_test();
        if (!at_op(",")) return first;
        auto tuple = make_node(NodeKind::Tuple, line, col);
        tuple->add(std::move(first));
        while (accept_op(",")) {
            if (starts_expression()) {
                tuple->add(parse_test());
            } else {
                break;
            }
        }
        return tuple;
    }

    NodePtr parse_star_or_test() {
        if (at_op("*")) {
            auto node = node_here(NodeKind::Starred);
            ++i_;
            node->add(parse_or_test());
            return node;
        }
        return parse_test();
    }

    bool starts_expression() const {
        switch (cur().type) {
        case TokenType::Name:
        case TokenType::Number:
        case TokenType::String:
            return true;
        case TokenType::Keyword:
            return cur().text == "lambda" || cur().text == "not" ||
                   cur().text == "None" || cur().text == "True" ||
                   cur().text == "False" || cur().text == "await" ||
                   cur().text == "yield";
        case TokenType::Op: {
            const std::string& t = cur().text;
            return t == "(" || t == "[" || t == "{" || t == "+" || t == "-" ||
                   t == "~" || t == "*" || t == "**" || t == "...";
        }
        default:
            return false;
        }
    }

    NodePtr parse_namedexpr() { return parse_test(); }

    NodePtr parse_test() {
        if (at_kw("lambda")) return parse_lambda();
        const int line = cur().line, col = cur().col;
        NodePtr expr = parse_or_test();
        if (at_kw("if")) {
            // conditional expression; condition child comes first
            ++i_;
            auto node = make_node(NodeKind::IfExp, line, col);
            NodePtr test = parse_or_test();
            expect_kw("else");
            NodePtr orelse = parse_test();
            node->add(std::move(test));
            node->add(std::move(expr));
            node->add(std::move(orelse));
            return node;
        }
        if (at_op(":=")) {
            ++i_;
            auto node = make_node(NodeKind::Walrus, line, col);
            node->add(std::move(expr));
            node->add(parse_test());
            return node;
        }
        return expr;
    }

    NodePtr parse_lambda() {
        auto node = node_here(NodeKind::Lambda);
        expect_kw("lambda");
        if (!at_op(":")) parse_params(*node, false);
        expect_op(":");
        node->add(parse_test());
        return node;
    }

    NodePtr parse_or_test() {
        NodePtr left = parse_and_test();
        if (!at_kw("or")) return left;
        auto node = make_node(NodeKind::BoolOp, left->line, left->col);
        node->value = "or";
        node->add(std::move(left));
        while (accept_kw("or")) node->add(parse_and_test());
        return node;
    }

    NodePtr parse_and_test() {
        NodePtr left = parse_not_test();
        if (!at_kw("and")) return left;
        auto node = make_node(NodeKind::BoolOp, left->line, left->col);
        node->value = "and";
        node->add(std::move(left));
        while (accept_kw("and")) node->add(parse_not_test());
        return node;
    }

    NodePtr parse_not_test() {
        if (at_kw("not")) {
            auto node = node_here(NodeKind::UnaryOp);
            node->value = "not";
            ++i_;
            node->add(parse_not_test());
            return node;
        }
        return parse_comparison();
    }

    bool at_comparison_op() const {
        if (at(TokenType::Op)) {
            const std::string& t = cur().text;
            return t == "<" || t == ">" || t == "<=" || t == ">=" || t == "==" ||
                   t == "!=";
        }
        return at_kw("in") || at_kw("is") ||
               (at_kw("not") && ahead().type == TokenType::Keyword &&
                ahead().text == "in");
    }

    NodePtr parse_comparison() {
        NodePtr left = parse_bit_or();
        if (!at_comparison_op()) return left;
        auto node = make_node(NodeKind::Compare, left->line, left->col);
        node->add(std::move(left));
        std::string ops;
        while (at_comparison_op()) {
            std::string op;
            if (at_kw("not")) {
                ++i_;
                expect_kw("in");
                op = "not in";
            } else if (at_kw("is")) {
                ++i_;
                op = accept_kw("not") ? "is not" : "is";
            } else if (at_kw("in")) {
                ++i_;
                op = "in";
            } else {
                op = take().text;
            }
            if (!ops.empty()) ops += ',';
            ops += op;
            node->add(parse_bit_or());
        }
        node->extra = ops;
        return node;
    }

    using Level = NodePtr (Parser::*)();

    NodePtr binary_level(std::initializer_list<std::string_view> ops, Level next) {
        NodePtr left = (this->*next)();
        while (at(TokenType::Op)) {
            bool matched = false;
            for (auto op : ops) {
                if (cur().text == op) {
                    matched = true;
                    break;
                }
            }
            if (!matched) break;
            auto node = make_node(NodeKind::BinOp, left->line, left->col);
            node->value = take().text;
            node->add(std::move(left));
            node->add((this->*next)());
            left = std::move(node);
        }
        return left;
    }

    NodePtr parse_bit_or() { return binary_level({"|"}, &Parser::parse_bit_xor); }
    NodePtr parse_bit_xor() { return binary_level({"^"}, &Parser::parse_bit_and); }
    NodePtr parse_bit_and() { return binary_level({"&"}, &Parser::parse_shift); }
    NodePtr parse_shift() { return binary_level({"<<", ">>"}, &Parser::parse_arith); }
    NodePtr parse_arith() { return binary_level({"+", "-"}, &Parser::parse_term); }
    NodePtr parse_term() {
        return binary_level({"*", "/", "//", "%", "@"}, &Parser::parse_factor);
    }

    NodePtr parse_factor() {
        if (at_op("+") || at_op("-") || at_op("~")) {
            auto node = node_here(NodeKind::UnaryOp);
            node->value = take().text;
            node->add(parse_factor());
            return node;
        }
        if (at_kw("await")) {
            auto node = node_here(NodeKind::Await);
            ++i_;
            node->add(parse_factor());
            return node;
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_postfix();
        if (at_op("**")) {
            auto node = make_node(NodeKind::BinOp, base->line, base->col);
            node->value = take().text;
            node->add(std::move(base));
            node->add(parse_factor()); // right associative
            return node;
        }
        return base;
    }

    NodePtr parse_postfix() {
        NodePtr expr = parse_atom();
        while (true) {
            if (at_op("(")) {
                auto call = make_node(NodeKind::Call, expr->line, expr->col);
                call->add(std::move(expr));
                ++i_;
                parse_call_args(*call);
                expect_op(")");
                expr = std::move(call);
            } else if (at_op("[")) {
                auto sub = make_node(NodeKind::Subscript, expr->line, expr->col);
                sub->add(std::move(expr));
                ++i_;
                do {
                    if (at_op("]")) break;
                    sub->add(parse_subscript_item());
                } while (accept_op(","));
                expect_op("]");
                expr = std::move(sub);
            } else if (at_op(".") && ahead().type == TokenType::Name) {
                auto attr = make_node(NodeKind::Attribute, cur().line, cur().col);
                ++i_;
                attr->value = take().text;
                attr->add(std::move(expr));
                // keep position of the attribute chain root
                attr->line = attr->children[0]->line;
                attr->col = attr->children[0]->col;
                expr = std::move(attr);
            } else {
                break;
            }
        }
        return expr;
    }

    void parse_call_args(Node& call) {
        bool first_arg = true;
        while (!at_op(")")) {
            if (at_op("*")) {
                auto star = node_here(NodeKind::Starred);
                ++i_;
                star->add(parse_test());
                call.add(std::move(star));
            } else if (at_op("**")) {
                auto star = node_here(NodeKind::DoubleStarred);
                ++i_;
                star->add(parse_test());
                call.add(std::move(star));
            } else if (at(TokenType::Name) && ahead().type == TokenType::Op &&
                       ahead().text == "=") {
                auto kwarg = node_here(NodeKind::Keyword);
                kwarg->value = take().text;
                ++i_; // '='
                kwarg->add(parse_test());
                call.add(std::move(kwarg));
            } else {
                NodePtr arg = parse_test();
                if (first_arg && at_kw("for")) {
                    // sole generator-expression argument
                    auto gen = make_node(NodeKind::GeneratorExp, arg->line, arg->col);
                    parse_comp_clauses(*gen);
                    gen->add(std::move(arg));
                    call.add(std::move(gen));
                } else {
                    call.add(std::move(arg));
                }
            }
            first_arg = false;
            if (!accept_op(",")) break;
        }
    }

    NodePtr parse_subscript_item() {
        auto maybe_bound = [&]() -> NodePtr {
            if (at_op(":") || at_op("]") || at_op(",")) return nullptr;
            return parse_test();
        };
        const int line = cur().line, col = cur().col;
        NodePtr lower = maybe_bound();
        if (!at_op(":")) {
            if (!lower) fail("expected subscript expression");
            return lower;
        }
        auto slice = make_node(NodeKind::Slice, line, col);
        if (lower) slice->add(std::move(lower));
        ++i_; // first ':'
        if (NodePtr upper = maybe_bound()) slice->add(std::move(upper));
        if (accept_op(":")) {
            if (NodePtr step = maybe_bound()) slice->add(std::move(step));
        }
        return slice;
    }

    // comprehension clauses: ('for' targets 'in' or_test ('if' cond)*)+
    void parse_comp_clauses(Node& comp) {
        while (at_kw("for") || (at_kw("async") && ahead().type == TokenType::Keyword &&
                                ahead().text == "for")) {
            accept_kw("async");
            auto clause = node_here(NodeKind::CompFor);
            Node& c = comp.add(std::move(clause));
            expect_kw("for");
            c.add(parse_for_targets());
            expect_kw("in");
            c.add(parse_or_test());
            while (at_kw("if")) {
                ++i_;
                c.add(parse_or_test());
            }
        }
    }

    // assignment targets are postfix expressions; parsing them as tests
    // would swallow the 'in' keyword as a comparison
    NodePtr parse_target_item() {
        if (at_op("*")) {
            auto node = node_here(NodeKind::Starred);
            ++i_;
            node->add(parse_postfix());
            return node;
        }
        return parse_postfix();
    }

    NodePtr parse_for_targets() {
        const int line = cur().line, col = cur().col;
        NodePtr first = parse_target_item();
        if (!at_op(",")) return first;
        auto tuple = make_node(NodeKind::Tuple, line, col);
        tuple->add(std::move(first));
        while (accept_op(",")) {
            if (at_kw("in")) break; // trailing comma
            tuple->add(parse_target_item());
        }
        return tuple;
    }

    NodePtr parse_atom() {
        const Token& t = cur();
        switch (t.type) {
        case TokenType::Name: {
            auto node = node_here(NodeKind::Name);
            node->value = take().text;
            return node;
        }
        case TokenType::Number: {
            auto node = node_here(NodeKind::Number);
            node->value = take().text;
            return node;
        }
        case TokenType::String: {
            auto node = node_here(NodeKind::String);
            node->value = cur().text;
            node->extra = cur().prefix;
            ++i_;
            // implicit concatenation of adjacent literals
            while (at(TokenType::String)) {
                node->value += cur().text;
                if (node->extra.empty()) node->extra = cur().prefix;
                ++i_;
            }
            return node;
        }
        case TokenType::Keyword: {
            const std::string& kw = t.text;
            if (kw == "None" || kw == "True" || kw == "False") {
                auto node = node_here(NodeKind::Constant);
                node->value = take().text;
                return node;
            }
            if (kw == "lambda") return parse_lambda();
            if (kw == "yield") return parse_yield_expr();
            if (kw == "not") return parse_not_test();
            break;
        }
        case TokenType::Op: {
            if (t.text == "(") return parse_paren_atom();
            if (t.text == "[") return parse_list_atom();
            if (t.text == "{") return parse_brace_atom();
            if (t.text == "...") {
                auto node = node_here(NodeKind::Constant);
                node->value = take().text;
                return node;
            }
            break;
        }
        default:
            break;
        }
        fail("unexpected token '" + (t.text.empty() ? "<eol>" : t.text) + "'");
    }

    NodePtr parse_paren_atom() {
        const int line = cur().line, col = cur().col;
        expect_op("(");
        if (accept_op(")")) return make_node(NodeKind::Tuple, line, col);
        if (at_kw("yield")) {
            NodePtr y = parse_yield_expr();
            expect_op(")");
            return y;
        }
        NodePtr first = parse_star_or_test();
        if (at_kw("for")) {
            auto gen = make_node(NodeKind::GeneratorExp, line, col);
            parse_comp_clauses(*gen);
            gen->add(std::move(first));
            expect_op(")");
            return gen;
        }
        if (at_op(",")) {
            auto tuple = make_node(NodeKind::Tuple, line, col);
            tuple->add(std::move(first));
            while (accept_op(",")) {
                if (at_op(")")) break;
                tuple->add(parse_star_or_test());
            }
            expect_op(")");
            return tuple;
        }
        expect_op(")");
        return first; // plain parenthesized expression
    }

    NodePtr parse_list_atom() {
        const int line = cur().line, col = cur().col;
        expect_op("[");
        auto list = make_node(NodeKind::List, line, col);
        if (accept_op("]")) return list;
        NodePtr first = parse_star_or_test();
        if (at_kw("for") || at_kw("async")) {
            auto comp = make_node(NodeKind::ListComp, line, col);
            parse_comp_clauses(*comp);
            comp->add(std::move(first));
            expect_op("]");
            return comp;
        }
        list->add(std::move(first));
        while (accept_op(",")) {
            if (at_op("]")) break;
            list->add(parse_star_or_test());
        }
        expect_op("]");
        return list;
    }

    NodePtr parse_brace_atom() {
        const int line = cur().line, col = cur().col;
        expect_op("{");
        if (accept_op("}")) return make_node(NodeKind::Dict, line, col);
        if (at_op("**")) {
            auto dict = make_node(NodeKind::Dict, line, col);
            parse_dict_rest(*dict, nullptr, nullptr);
            return dict;
        }
        NodePtr first = parse_star_or_test();
        if (accept_op(":")) {
            NodePtr value = parse_test();
            if (at_kw("for") || at_kw("async")) {
                auto comp = make_node(NodeKind::DictComp, line, col);
                parse_comp_clauses(*comp);
                comp->add(std::move(first));
                comp->add(std::move(value));
                expect_op("}");
                return comp;
            }
            auto dict = make_node(NodeKind::Dict, line, col);
            parse_dict_rest(*dict, std::move(first), std::move(value));
            return dict;
        }
        if (at_kw("for") || at_kw("async")) {
            auto comp = make_node(NodeKind::SetComp, line, col);
            parse_comp_clauses(*comp);
            comp->add(std::move(first));
            expect_op("}");
            return comp;
        }
        auto set = make_node(NodeKind::Set, line, col);
        set->add(std::move(first));
        while (accept_op(",")) {
            if (at_op("}")) break;
            set->add(parse_star_or_test());
        }
        expect_op("}");
        return set;
    }

    void parse_dict_rest(Node& dict, NodePtr first_key, NodePtr first_value) {
        if (first_key) {
            dict.add(std::move(first_key));
            dict.add(std::move(first_value));
            if (!accept_op(",")) {
                expect_op("}");
                return;
            }
        }
        while (!at_op("}")) {
            if (at_op("**")) {
                auto star = node_here(NodeKind::DoubleStarred);
                ++i_;
                star->add(parse_or_test());
                dict.add(std::move(star));
            } else {
                dict.add(parse_test());
                expect_op(":");
                dict.add(parse_test());
            }
            if (!accept_op(",")) break;
        }
        expect_op("}");
    }
};

} // namespace

NodePtr parse_python(std::string_view source) {
    return Parser(tokenize(source)).run();
}

} // namespace dspipe
