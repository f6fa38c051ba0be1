#include "dspipe/calls.hpp"

#include <unordered_set>

#include "dspipe/parser.hpp"

namespace dspipe {

namespace {

// Notebook magics and shell escapes ('%', '!') are not part of the grammar;
// blank those lines so line numbers survive.
std::string blank_magic_lines(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    size_t pos = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        size_t len = (eol == std::string::npos ? text.size() : eol) - pos;
        std::string_view line(text.data() + pos, len);
        size_t first = line.find_first_not_of(" \t\r");
        bool magic = first != std::string_view::npos &&
                     (line[first] == '%' || line[first] == '!') &&
                     !(line[first] == '!' && first + 1 < line.size() &&
                       line[first + 1] == '=');
        if (!magic) out.append(line);
        if (eol != std::string::npos) out += '\n';
        pos = (eol == std::string::npos) ? text.size() : eol + 1;
    }
    return out;
}

struct ChainInfo {
    std::vector<std::string> segments; // attribute chain, outermost last
    bool rooted = false;               // chain bottoms out at a plain name
};

// Collects the trailing name/attribute chain of a callee expression.
// `pd.read_csv` -> {pd, read_csv} rooted; `df.groupby(...).sum` -> {sum}
// unrooted (receiver is a call result).
ChainInfo callee_chain(const Node& callee) {
    ChainInfo info;
    const Node* n = &callee;
    std::vector<const Node*> attrs;
    while (n->kind == NodeKind::Attribute) {
        attrs.push_back(n);
        n = n->children[0].get();
    }
    if (n->kind == NodeKind::Name) {
        info.rooted = true;
        info.segments.push_back(n->value);
    }
    for (auto it = attrs.rbegin(); it != attrs.rend(); ++it) {
        info.segments.push_back((*it)->value);
    }
    if (!info.rooted && !attrs.empty()) {
        // unknown receiver: keep only the final attribute segment for
        // method-suffix matching
        info.segments = {attrs.front()->value};
    }
    return info;
}

class CallWalker {
public:
    CallWalker(AliasEnv& env, std::vector<CallEvent>& out, int cell_index)
        : env_(env), out_(out), cell_(cell_index) {}

    void walk(const Node& n) {
        switch (n.kind) {
        case NodeKind::Import:
        case NodeKind::ImportFrom:
            env_.apply_import(n);
            return;
        case NodeKind::Call: {
            for (const auto& child : n.children) walk(*child);
            emit(n);
            return;
        }
        default:
            for (const auto& child : n.children) walk(*child);
        }
    }

private:
    AliasEnv& env_;
    std::vector<CallEvent>& out_;
    int cell_;

    void emit(const Node& call) {
        ChainInfo chain = callee_chain(*call.children[0]);
        if (chain.segments.empty()) return; // e.g. layer(...)(x) outer call
        std::string raw;
        for (const auto& s : chain.segments) {
            if (!raw.empty()) raw += '.';
            raw += s;
        }
        CallEvent ev;
        ev.raw_name = raw;
        ev.resolved_name = chain.rooted ? env_.resolve(raw) : raw;
        size_t dot = ev.resolved_name.rfind('.');
        ev.method_name =
            dot == std::string::npos ? ev.resolved_name : ev.resolved_name.substr(dot + 1);
        ev.line = call.children[0]->line;
        ev.cell_index = cell_;
        ev.order_index = static_cast<int>(out_.size());
        out_.push_back(std::move(ev));
    }
};

void count_nodes(const Node& n, long& total, long& control) {
    ++total;
    if (is_control_node(n.kind)) ++control;
    for (const auto& child : n.children) count_nodes(*child, total, control);
}

} // namespace

bool is_control_node(NodeKind k) {
    return k == NodeKind::If || k == NodeKind::IfExp || k == NodeKind::For ||
           k == NodeKind::While;
}

void AliasEnv::bind(const std::string& alias, const std::string& target) {
    if (alias.empty() || alias == target) return; // identity carries no information
    aliases_[alias] = target;
}

void AliasEnv::apply_import(const Node& import_node) {
    if (import_node.kind == NodeKind::Import) {
        for (const auto& child : import_node.children) {
            const Node& a = *child;
            if (a.kind != NodeKind::ImportAlias) continue;
            if (!a.extra.empty()) {
                // import pandas.io as pio
                bind(a.extra, a.value);
            }
            // a bare `import x.y` binds the name x to module x: identity
        }
        return;
    }
    if (import_node.kind == NodeKind::ImportFrom) {
        if (import_node.aux > 0) return; // relative imports stay unresolved
        const std::string& module = import_node.value;
        if (module.empty()) return;
        for (const auto& child : import_node.children) {
            const Node& a = *child;
            if (a.kind != NodeKind::ImportAlias) continue;
            if (a.value == "*") {
                note_star_import();
                continue;
            }
            const std::string& local = a.extra.empty() ? a.value : a.extra;
            bind(local, module + "." + a.value);
        }
    }
}

std::string AliasEnv::resolve(const std::string& dotted_name) const {
    std::string name = dotted_name;
    std::unordered_set<std::string> seen;
    while (true) {
        size_t dot = name.find('.');
        std::string root = dot == std::string::npos ? name : name.substr(0, dot);
        auto it = aliases_.find(root);
        if (it == aliases_.end() || !seen.insert(root).second) break;
        name = dot == std::string::npos ? it->second : it->second + name.substr(dot);
    }
    return name;
}

ParsedUnit parse_unit(const SourceUnit& unit) {
    ParsedUnit parsed;
    for (const Cell& cell : unit.cells) {
        if (cell.kind != CellKind::Code) continue;
        const std::string text = blank_magic_lines(cell.text);
        try {
            parsed.trees.push_back(parse_python(text));
            parsed.cell_indices.push_back(cell.index);
        } catch (const SyntaxError& e) {
            if (unit.kind == SourceKind::Script) throw;
            parsed.diagnostics.push_back(
                CellDiagnostic{cell.index, e.line, e.what()});
        }
    }
    return parsed;
}

std::vector<CallEvent> extract_calls(const ParsedUnit& parsed) {
    std::vector<CallEvent> events;
    AliasEnv env;
    for (size_t i = 0; i < parsed.trees.size(); ++i) {
        CallWalker walker(env, events, parsed.cell_indices[i]);
        walker.walk(*parsed.trees[i]);
    }
    return events;
}

std::vector<CallEvent> extract_calls(const SourceUnit& unit) {
    return extract_calls(parse_unit(unit));
}

AstMetrics ast_metrics(const ParsedUnit& parsed) {
    AstMetrics m;
    for (const auto& tree : parsed.trees) {
        count_nodes(*tree, m.total_nodes, m.control_nodes);
    }
    m.linearity_ratio =
        m.total_nodes == 0 ? 0.0
                           : static_cast<double>(m.control_nodes) /
                                 static_cast<double>(m.total_nodes);
    return m;
}

AstMetrics ast_metrics(const SourceUnit& unit) {
    return ast_metrics(parse_unit(unit));
}

} // namespace dspipe
