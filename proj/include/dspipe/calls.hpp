#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "dspipe/ast.hpp"
#include "dspipe/source.hpp"

namespace dspipe {

// One extracted API call.
struct CallEvent {
    std::string raw_name;      // attribute chain as written, e.g. "pd.read_csv"
    std::string resolved_name; // after import-alias substitution, e.g. "pandas.read_csv"
    std::string method_name;   // final dotted segment of resolved_name
    int line = 0;              // 1-based within the cell
    int cell_index = 0;
    int order_index = 0;       // dense 0..n-1 evaluation-order position
};

struct AstMetrics {
    long total_nodes = 0;
    long control_nodes = 0; // if statements, conditional exprs, for and while loops
    double linearity_ratio = 0.0;
};

struct CellDiagnostic {
    int cell_index;
    int line;
    std::string message;
};

// Per-cell parse results for one SourceUnit. Notebook cells that fail to
// parse are skipped and reported in `diagnostics`; magic/shell lines are
// blanked before parsing. A script that fails to parse throws SyntaxError.
struct ParsedUnit {
    std::vector<int> cell_indices; // parallel to trees
    std::vector<NodePtr> trees;
    std::vector<CellDiagnostic> diagnostics;
};

ParsedUnit parse_unit(const SourceUnit& unit);

// Import-alias environment; persists across cells within one SourceUnit.
class AliasEnv {
public:
    void bind(const std::string& alias, const std::string& target);
    void apply_import(const Node& import_node);

    // Substitutes the root segment through the alias map to a fixed point
    // (cycle-guarded), so resolving an already-resolved name is a no-op.
    std::string resolve(const std::string& dotted_name) const;

    bool has_star_import() const { return saw_star_import_; }
    void note_star_import() { saw_star_import_ = true; }

private:
    std::unordered_map<std::string, std::string> aliases_;
    bool saw_star_import_ = false;
};

std::vector<CallEvent> extract_calls(const ParsedUnit& parsed);
std::vector<CallEvent> extract_calls(const SourceUnit& unit);

AstMetrics ast_metrics(const ParsedUnit& parsed);
AstMetrics ast_metrics(const SourceUnit& unit);

bool is_control_node(NodeKind k);

} // namespace dspipe
