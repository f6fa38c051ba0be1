#pragma once

#include <string>
#include <vector>

#include "dspipe/errors.hpp"

namespace dspipe {

enum class SourceKind { Script, Notebook };
enum class CellKind { Code, Markdown };

struct Cell {
    int index = 0;
    CellKind kind = CellKind::Code;
    std::string text;
    std::vector<std::string> headings; // markdown cells only, in document order
};

struct SourceUnit {
    std::string path;
    SourceKind kind = SourceKind::Script;
    std::vector<Cell> cells;
};

// Loads a script (single synthetic code cell) or an nbformat-4 notebook.
// Throws IoError when the file cannot be read and NotebookFormatError citing
// the JSON path when the notebook shape is wrong.
SourceUnit load_source(const std::string& path);

// Builds a SourceUnit from in-memory text; `notebook` selects nbformat
// parsing. Path is recorded verbatim.
SourceUnit source_from_string(const std::string& path, const std::string& text,
                              bool notebook);

struct Heading {
    int cell_index;
    std::string text;
};

// All markdown headings ('#'-prefixed lines, markup stripped) in document order.
std::vector<Heading> extract_headings(const SourceUnit& unit);

} // namespace dspipe
