#include "dspipe/source.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dspipe {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) throw IoError("cannot read file: " + path);
    return out.str();
}

bool has_suffix(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// nbformat "source" is either a string or an array of strings joined verbatim
std::string join_source(const json& source, const std::string& json_path) {
    if (source.is_string()) return source.get<std::string>();
    if (source.is_array()) {
        std::string text;
        for (size_t i = 0; i < source.size(); ++i) {
            if (!source[i].is_string()) {
                throw NotebookFormatError("notebook defect at " + json_path + "[" +
                                          std::to_string(i) + "]: expected string");
            }
            text += source[i].get<std::string>();
        }
        return text;
    }
    throw NotebookFormatError("notebook defect at " + json_path +
                              ": expected string or array of strings");
}

SourceUnit parse_notebook(const std::string& path, const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw NotebookFormatError("notebook defect at $: not valid JSON (" +
                                  std::string(e.what()) + ")");
    }
    if (!doc.is_object()) {
        throw NotebookFormatError("notebook defect at $: expected object");
    }
    if (!doc.contains("cells")) {
        throw NotebookFormatError("notebook defect at $.cells: missing");
    }
    const json& cells = doc["cells"];
    if (!cells.is_array()) {
        throw NotebookFormatError("notebook defect at $.cells: expected array");
    }

    SourceUnit unit;
    unit.path = path;
    unit.kind = SourceKind::Notebook;
    for (size_t i = 0; i < cells.size(); ++i) {
        const std::string at = "$.cells[" + std::to_string(i) + "]";
        const json& c = cells[i];
        if (!c.is_object()) {
            throw NotebookFormatError("notebook defect at " + at + ": expected object");
        }
        if (!c.contains("cell_type") || !c["cell_type"].is_string()) {
            throw NotebookFormatError("notebook defect at " + at +
                                      ".cell_type: expected string");
        }
        const std::string type = c["cell_type"].get<std::string>();
        Cell cell;
        cell.index = static_cast<int>(i);
        if (type == "code") {
            cell.kind = CellKind::Code;
        } else if (type == "markdown") {
            cell.kind = CellKind::Markdown;
        } else {
            // raw and other cell types carry no analyzable content; keep the
            // slot so indices stay aligned with the document
            cell.kind = CellKind::Markdown;
            unit.cells.push_back(std::move(cell));
            continue;
        }
        if (!c.contains("source")) {
            throw NotebookFormatError("notebook defect at " + at + ".source: missing");
        }
        cell.text = join_source(c["source"], at + ".source");
        if (cell.kind == CellKind::Markdown) {
            // collect '#'-prefixed heading lines, markup stripped
            std::istringstream lines(cell.text);
            std::string line;
            while (std::getline(lines, line)) {
                size_t p = line.find_first_not_of(" \t");
                if (p == std::string::npos || line[p] != '#') continue;
                while (p < line.size() && line[p] == '#') ++p;
                while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) ++p;
                std::string h = line.substr(p);
                while (!h.empty() && (h.back() == ' ' || h.back() == '\t' ||
                                      h.back() == '\r' || h.back() == '#')) {
                    h.pop_back();
                }
                if (!h.empty()) cell.headings.push_back(h);
            }
        }
        unit.cells.push_back(std::move(cell));
    }
    return unit;
}

} // namespace

SourceUnit source_from_string(const std::string& path, const std::string& text,
                              bool notebook) {
    if (notebook) return parse_notebook(path, text);
    SourceUnit unit;
    unit.path = path;
    unit.kind = SourceKind::Script;
    Cell cell;
    cell.index = 0;
    cell.kind = CellKind::Code;
    cell.text = text;
    unit.cells.push_back(std::move(cell));
    return unit;
}

SourceUnit load_source(const std::string& path) {
    const std::string text = read_file(path);
    return source_from_string(path, text, has_suffix(path, ".ipynb"));
}

std::vector<Heading> extract_headings(const SourceUnit& unit) {
    std::vector<Heading> out;
    for (const Cell& cell : unit.cells) {
        for (const std::string& h : cell.headings) {
            out.push_back(Heading{cell.index, h});
        }
    }
    return out;
}

} // namespace dspipe
