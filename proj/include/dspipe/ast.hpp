#pragma once

#include <memory>
#include <string>
#include <vector>

namespace dspipe {

// Homogeneous syntax tree. One node kind covers statements, expressions and
// a few structural helpers (import aliases, comprehension clauses, ...).
// Child order follows source order except where noted in the parser, so a
// plain pre/post-order walk reproduces the document.
enum class NodeKind {
    Module,

    // statements
    FunctionDef,
    ClassDef,
    Return,
    Delete,
    Assign,
    AugAssign,
    AnnAssign,
    For,
    While,
    If,
    With,
    WithItem,
    Raise,
    Try,
    ExceptHandler,
    Assert,
    Import,
    ImportFrom,
    ImportAlias,
    Global,
    Nonlocal,
    ExprStmt,
    Pass,
    Break,
    Continue,

    // expressions
    BoolOp,
    BinOp,
    UnaryOp,
    Lambda,
    IfExp, // conditional expression
    Dict,
    Set,
    List,
    Tuple,
    ListComp,
    SetComp,
    DictComp,
    GeneratorExp,
    CompFor, // one `for target in iter [if cond]*` clause
    Await,
    Yield,
    YieldFrom,
    Compare,
    Call,
    Keyword, // name=value argument
    Starred,
    DoubleStarred,
    Attribute,
    Subscript,
    Slice,
    Name,
    Number,
    String,
    Constant, // True / False / None / Ellipsis
    Walrus,
    Param, // formal parameter (value = name); may hold annotation/default
    ParamMarker, // bare * or / separator in a parameter list
};

struct Node {
    NodeKind kind;
    // Identifier / attribute / operator / literal text, depending on kind.
    std::string value;
    // Secondary payload: import asname, string prefix, comparison ops, ...
    std::string extra;
    int line = 0; // 1-based within the cell
    int col = 0;  // 0-based
    int aux = 0;  // relative-import level for ImportFrom
    std::vector<std::unique_ptr<Node>> children;

    Node(NodeKind k, int line, int col) : kind(k), line(line), col(col) {}

    Node& add(std::unique_ptr<Node> child) {
        children.push_back(std::move(child));
        return *children.back();
    }
};

using NodePtr = std::unique_ptr<Node>;

inline NodePtr make_node(NodeKind k, int line = 0, int col = 0) {
    return std::make_unique<Node>(k, line, col);
}

const char* node_kind_name(NodeKind k);

} // namespace dspipe
