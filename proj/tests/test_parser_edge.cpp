#include <doctest.h>

#include <random>
#include <sstream>

#include "dspipe/calls.hpp"
#include "dspipe/lexer.hpp"
#include "dspipe/parser.hpp"
#include "dspipe/source.hpp"

using namespace dspipe;

namespace {

long count_nodes(const Node& n) {
    long total = 1;
    for (const auto& c : n.children) total += count_nodes(*c);
    return total;
}

std::vector<std::string> call_names(const std::string& code) {
    std::vector<std::string> out;
    for (const auto& e :
         extract_calls(source_from_string("t.py", code, false))) {
        out.push_back(e.resolved_name);
    }
    return out;
}

} // namespace

TEST_SUITE("parser_edge") {

TEST_CASE("inline suites") {
    CHECK_NOTHROW(parse_python("if x: y = 1\n"));
    CHECK_NOTHROW(parse_python("if x: y = 1; z = 2\n"));
    CHECK_NOTHROW(parse_python("while f(): g()\n"));
    CHECK_NOTHROW(parse_python("for i in r: h(i)\n"));
    CHECK_NOTHROW(parse_python("def f(): return 1\n"));
    CHECK_NOTHROW(parse_python("try: f()\nexcept: pass\n"));
    CHECK_NOTHROW(parse_python("with open(p) as f: g(f)\n"));
    CHECK_NOTHROW(parse_python("class C: pass\n"));
}

TEST_CASE("nested comprehensions and generators") {
    CHECK(call_names("m = [f(i) for row in g() for i in h(row) if i]\n") ==
          std::vector<std::string>{"g", "h", "f"});
    CHECK_NOTHROW(parse_python("d = {k(): v() for k, v in items}\n"));
    CHECK_NOTHROW(parse_python("s = {x for x in xs}\n"));
    CHECK_NOTHROW(parse_python("total = sum(x * x for x in xs)\n"));
    CHECK_NOTHROW(parse_python("nested = [[y for y in row] for row in grid]\n"));
}

TEST_CASE("slices, ellipsis and tuple subscripts") {
    CHECK_NOTHROW(parse_python("a = m[1:2, ::3]\n"));
    CHECK_NOTHROW(parse_python("a = m[..., None]\n"));
    CHECK_NOTHROW(parse_python("a = m[:, 0]\n"));
    CHECK_NOTHROW(parse_python("a = m[::-1]\n"));
    CHECK_NOTHROW(parse_python("a = m[i:j:k, l:]\n"));
}

TEST_CASE("string literal shapes") {
    CHECK_NOTHROW(parse_python("s = 'a' \"b\" r'c\\d' f\"{x!r:>10}\" b'bytes'\n"));
    CHECK_NOTHROW(parse_python("s = '''multi\nline'''\n"));
    CHECK_NOTHROW(parse_python("s = \"\"\"doc \"quote\" inside\"\"\"\n"));
    CHECK_NOTHROW(parse_python("s = 'esc\\'aped'\n"));
    CHECK_THROWS_AS(parse_python("s = 'unterminated\n"), SyntaxError);
    CHECK_THROWS_AS(parse_python("s = '''never closed\n"), SyntaxError);
}

TEST_CASE("number literal shapes") {
    CHECK_NOTHROW(parse_python("n = 0x1F + 0o17 + 0b1010 + 1_000 + .5 + 1. + 2e-3 + 3j\n"));
}

TEST_CASE("operator precedence spot checks") {
    NodePtr tree = parse_python("r = 2 ** 3 ** 2\n"); // right associative
    const Node& assign = *tree->children[0];
    const Node& outer = *assign.children[1];
    REQUIRE(outer.kind == NodeKind::BinOp);
    CHECK(outer.value == "**");
    CHECK(outer.children[1]->kind == NodeKind::BinOp);
    CHECK_NOTHROW(parse_python("x = a @ b + c * -d // e % f\n"));
    CHECK_NOTHROW(parse_python("x = a < b <= c != d in e not in f is g is not h\n"));
    CHECK_NOTHROW(parse_python("x = not a or b and not c\n"));
}

TEST_CASE("decorated nested definitions") {
    const std::string code =
        "@outer.register(name=\"x\")\n"
        "@staticmethod\n"
        "def f():\n"
        "    @inner\n"
        "    def g():\n"
        "        pass\n"
        "    return g\n";
    CHECK(call_names(code) == std::vector<std::string>{"outer.register"});
}

TEST_CASE("async constructs") {
    CHECK_NOTHROW(parse_python(
        "async def fetch():\n"
        "    async with session.get(url) as resp:\n"
        "        data = await resp.json()\n"
        "    async for chunk in stream:\n"
        "        handle(chunk)\n"));
}

TEST_CASE("try chains with else and except groups") {
    CHECK_NOTHROW(parse_python(
        "try:\n    f()\nexcept ValueError:\n    a()\nexcept (IOError, OSError) as e:\n"
        "    b()\nelse:\n    c()\nfinally:\n    d()\n"));
    CHECK_NOTHROW(parse_python("try:\n    f()\nexcept* ValueError:\n    pass\n"));
}

TEST_CASE("soft keywords stay identifiers") {
    CHECK(call_names("m = re.match(pattern, text)\n") ==
          std::vector<std::string>{"re.match"});
    CHECK_NOTHROW(parse_python("match = 1\ntype = 2\nprint = 3\n"));
}

TEST_CASE("walrus targets") {
    CHECK_NOTHROW(parse_python("if (n := len(a)) > 10:\n    pass\n"));
    CHECK_NOTHROW(parse_python("while (chunk := read(8192)):\n    handle(chunk)\n"));
}

TEST_CASE("yield forms") {
    CHECK_NOTHROW(parse_python(
        "def gen():\n    yield\n    yield 1\n    yield 1, 2\n    yield from other()\n"
        "    x = yield v\n"));
}

TEST_CASE("unpacking in calls and displays") {
    CHECK_NOTHROW(parse_python("f(*args, **kwargs, key=1)\n"));
    CHECK_NOTHROW(parse_python("merged = {**a, 'k': 1, **b}\n"));
    CHECK_NOTHROW(parse_python("lst = [*xs, *ys]\n"));
    CHECK_NOTHROW(parse_python("a, *rest = items\n"));
    CHECK_NOTHROW(parse_python("first, (second, third) = pairs\n"));
}

TEST_CASE("dedent errors are reported with a line") {
    try {
        parse_python("if x:\n        a = 1\n    b = 2\n");
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("deep nesting stays linear") {
    std::ostringstream code;
    for (int i = 0; i < 60; ++i) {
        for (int s = 0; s < i; ++s) code << "    ";
        code << "if x" << i << ":\n";
    }
    for (int s = 0; s < 60; ++s) code << "    ";
    code << "pass\n";
    NodePtr tree = parse_python(code.str());
    CHECK(count_nodes(*tree) == 1 + 60 * 2 + 1);
}

TEST_CASE("garbage input throws SyntaxError instead of crashing") {
    std::mt19937 rng(0xC0FFEE);
    const std::string alphabet =
        "abcdef (){}[]=+-*/%:.,#'\"\n\t 0123456789_<>!|&^~@;\\";
    std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 200);
    int parsed_ok = 0;
    for (int round = 0; round < 500; ++round) {
        std::string soup;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) soup += alphabet[pick(rng)];
        try {
            NodePtr tree = parse_python(soup);
            ++parsed_ok;
            CHECK(count_nodes(*tree) >= 1);
        } catch (const SyntaxError&) {
            // expected for most inputs
        }
    }
    CHECK(parsed_ok >= 0);
}

TEST_CASE("token soup never crashes the parser either") {
    // strings assembled from valid tokens in random order
    std::mt19937 rng(424242);
    const std::vector<std::string> tokens{
        "def",  "f",  "(",  ")",  ":",  "\n", "    ", "return", "if",
        "else", "x",  "=",  "1",  "+",  "[",  "]",    "{",      "}",
        ",",    ".",  "*",  "**", "for", "in", "while", "import", "as",
        "lambda", "yield", "'s'", "2.5", "@", "->", ":=", "not", "and"};
    std::uniform_int_distribution<size_t> pick(0, tokens.size() - 1);
    std::uniform_int_distribution<int> len(0, 60);
    for (int round = 0; round < 500; ++round) {
        std::string soup;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) soup += tokens[pick(rng)];
        try {
            parse_python(soup);
        } catch (const SyntaxError&) {
        }
    }
    CHECK(true);
}

TEST_CASE("lexer emits dedents for every open indent at EOF") {
    auto tokens = tokenize("if a:\n    if b:\n        c()");
    int indents = 0, dedents = 0;
    for (const auto& t : tokens) {
        if (t.type == TokenType::Indent) ++indents;
        if (t.type == TokenType::Dedent) ++dedents;
    }
    CHECK(indents == 2);
    CHECK(dedents == 2);
}

TEST_CASE("carriage returns and BOM are tolerated") {
    CHECK_NOTHROW(parse_python("\xEF\xBB\xBFimport os\r\nx = 1\r\n"));
    auto events =
        extract_calls(source_from_string("t.py", "f()\r\ng()\r\n", false));
    CHECK(events.size() == 2);
}

} // TEST_SUITE
