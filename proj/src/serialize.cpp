#include "dspipe/serialize.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace dspipe {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json pipeline_body(const Pipeline& p) {
    ordered_json j;
    j["source"] = p.source;
    j["level"] = p.level == PipelineLevel::Low ? "low" : "high";
    ordered_json seq = ordered_json::array();
    for (const StageOccurrence& occ : p.sequence) {
        ordered_json o;
        o["stage"] = std::string(stage_code(occ.stage));
        o["occurrence"] = occ.occurrence_index;
        o["calls"] = occ.call_count;
        o["span"] = {occ.span_first, occ.span_last};
        seq.push_back(std::move(o));
    }
    j["sequence"] = std::move(seq);
    ordered_json edges = ordered_json::array();
    // report order keeps edge listings stable across runs
    for (Stage from : report_order()) {
        for (Stage to : report_order()) {
            auto it = p.edges.find({from, to});
            if (it == p.edges.end()) continue;
            ordered_json e;
            e["from"] = std::string(stage_code(from));
            e["to"] = std::string(stage_code(to));
            e["count"] = it->second;
            edges.push_back(std::move(e));
        }
    }
    j["edges"] = std::move(edges);
    j["dropped"] = {{"GEN", p.dropped_generic}, {"NoMatch", p.dropped_nomatch}};
    return j;
}

} // namespace

std::string pipeline_to_json(const Pipeline& p) { return dump(pipeline_body(p)); }

std::string pipeline_to_json(const Pipeline& p, const std::vector<CallEvent>& calls,
                             const ApiDictionary& dict) {
    ordered_json j = pipeline_body(p);
    ordered_json arr = ordered_json::array();
    for (const CallEvent& c : calls) {
        ordered_json e;
        e["raw"] = c.raw_name;
        e["resolved"] = c.resolved_name;
        e["method"] = c.method_name;
        e["line"] = c.line;
        e["cell"] = c.cell_index;
        e["order"] = c.order_index;
        auto stage = dict.lookup(c);
        if (stage) {
            e["stage"] = std::string(stage_code(*stage));
        } else {
            e["stage"] = nullptr;
        }
        arr.push_back(std::move(e));
    }
    j["calls"] = std::move(arr);
    return dump(j);
}

std::string pipeline_to_dot(const Pipeline& p, bool merged) {
    std::ostringstream out;
    out << "digraph pipeline {\n  rankdir=LR;\n  node [shape=box];\n";
    if (merged) {
        std::vector<Stage> seen;
        for (const StageOccurrence& occ : p.sequence) {
            if (std::find(seen.begin(), seen.end(), occ.stage) == seen.end()) {
                seen.push_back(occ.stage);
            }
        }
        for (Stage s : seen) {
            out << "  " << stage_code(s) << " [label=\"" << stage_code(s) << "\"];\n";
        }
        for (Stage from : report_order()) {
            for (Stage to : report_order()) {
                auto it = p.edges.find({from, to});
                if (it == p.edges.end()) continue;
                out << "  " << stage_code(from) << " -> " << stage_code(to)
                    << " [label=\"" << it->second << "\"];\n";
            }
        }
    } else {
        for (size_t i = 0; i < p.sequence.size(); ++i) {
            const StageOccurrence& occ = p.sequence[i];
            out << "  n" << i << " [label=\"" << stage_code(occ.stage) << "#"
                << occ.occurrence_index << "\"];\n";
        }
        for (size_t i = 1; i < p.sequence.size(); ++i) {
            out << "  n" << i - 1 << " -> n" << i << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string pipeline_to_text(const Pipeline& p) {
    std::ostringstream out;
    out << p.source << " [" << (p.level == PipelineLevel::Low ? "low" : "high")
        << "]: ";
    if (p.sequence.empty()) {
        out << "(empty)";
    } else {
        for (size_t i = 0; i < p.sequence.size(); ++i) {
            if (i) out << " -> ";
            out << stage_code(p.sequence[i].stage);
        }
    }
    out << "\n";
    if (p.dropped_generic || p.dropped_nomatch) {
        out << "  dropped: GEN " << p.dropped_generic << ", NoMatch "
            << p.dropped_nomatch << "\n";
    }
    return out.str();
}

std::vector<Finding> sorted_findings(std::vector<Finding> findings) {
    std::stable_sort(findings.begin(), findings.end(),
                     [](const Finding& a, const Finding& b) {
                         if (a.source != b.source) return a.source < b.source;
                         if (a.rule != b.rule) return a.rule < b.rule;
                         return a.detail < b.detail;
                     });
    return findings;
}

namespace {

ordered_json finding_json(const Finding& f) {
    ordered_json j;
    j["source"] = f.source;
    j["rule"] = std::string(lint_rule_name(f.rule));
    j["severity"] = std::string(severity_name(f.severity));
    j["detail"] = f.detail;
    return j;
}

} // namespace

std::string corpus_report_to_json(const CorpusReport& report) {
    ordered_json j;
    j["n_pipelines"] = report.n_pipelines;
    ordered_json freq;
    for (Stage s : report_order()) {
        auto it = report.stage_presence.find(s);
        if (it == report.stage_presence.end() || it->second == 0) continue;
        freq[std::string(stage_code(s))] = report.frequency(s);
    }
    j["stage_frequency"] = std::move(freq);
    ordered_json transitions = ordered_json::array();
    for (Stage from : report_order()) {
        for (Stage to : report_order()) {
            const long c = report.transition.at(from, to);
            if (c == 0) continue;
            ordered_json e;
            e["from"] = std::string(stage_code(from));
            e["to"] = std::string(stage_code(to));
            e["count"] = c;
            transitions.push_back(std::move(e));
        }
    }
    j["transition"] = std::move(transitions);
    ordered_json lint = ordered_json::array();
    for (const Finding& f : sorted_findings(report.lint)) {
        lint.push_back(finding_json(f));
    }
    j["lint"] = std::move(lint);
    return dump(j);
}

std::string transition_to_csv(const TransitionMatrix& m) {
    std::ostringstream out;
    out << "stage";
    for (Stage to : report_order()) out << "," << stage_code(to);
    out << "\n";
    for (Stage from : report_order()) {
        out << stage_code(from);
        for (Stage to : report_order()) out << "," << m.at(from, to);
        out << "\n";
    }
    return out.str();
}

std::string findings_to_text(const std::vector<Finding>& findings) {
    std::ostringstream out;
    for (const Finding& f : sorted_findings(findings)) {
        out << f.source << ": " << lint_rule_name(f.rule) << ": " << f.detail
            << "\n";
    }
    return out.str();
}

std::string findings_to_json(const std::vector<Finding>& findings) {
    ordered_json arr = ordered_json::array();
    for (const Finding& f : sorted_findings(findings)) {
        arr.push_back(finding_json(f));
    }
    return dump(arr);
}

std::string agreement_to_json(const AgreementReport& report) {
    ordered_json j;
    j["n"] = report.n;
    j["po"] = report.po;
    j["pe"] = report.pe;
    j["kappa"] = report.kappa;
    j["interpretation"] = report.interpretation;
    return dump(j);
}

std::string project_to_json(const ProjectModel& model) {
    ordered_json j;
    j["root"] = model.root;
    ordered_json files = ordered_json::array();
    for (const FileAnalysis& f : model.files) {
        ordered_json e;
        e["path"] = f.path;
        e["metrics"] = {{"total_nodes", f.metrics.total_nodes},
                        {"control_nodes", f.metrics.control_nodes},
                        {"linearity_ratio", f.metrics.linearity_ratio}};
        e["pipeline"] = ordered_json::parse(pipeline_to_json(f.pipeline));
        e["entry_point"] =
            std::find(model.entry_points.begin(), model.entry_points.end(), f.path) !=
            model.entry_points.end();
        files.push_back(std::move(e));
    }
    j["files"] = std::move(files);
    ordered_json modules;
    for (const auto& [dir, paths] : model.modules) {
        modules[dir] = paths;
    }
    j["modules"] = std::move(modules);
    j["entry_points"] = model.entry_points;
    ordered_json artifacts = ordered_json::array();
    for (const Artifact& a : model.artifacts) {
        artifacts.push_back(
            {{"path", a.path}, {"kind", std::string(artifact_kind_name(a.kind))}});
    }
    j["artifacts"] = std::move(artifacts);
    if (model.contributors) {
        j["contributors"] = *model.contributors;
    } else {
        j["contributors"] = nullptr;
    }
    j["coupling"] =
        model.coupling ? std::string(coupling_name(*model.coupling)) : "unknown";
    if (!model.coupling_note.empty()) j["coupling_note"] = model.coupling_note;
    j["phases"] = {{"development", model.development_phase},
                   {"post_development", model.post_development_phase}};
    j["high_level"] = ordered_json::parse(pipeline_to_json(model.high_level));
    j["high_level_method"] = "heuristic";
    if (!model.skipped.empty()) {
        ordered_json skipped = ordered_json::array();
        for (const auto& [path, reason] : model.skipped) {
            skipped.push_back({{"path", path}, {"reason", reason}});
        }
        j["skipped"] = std::move(skipped);
    }
    return dump(j);
}

std::string project_to_text(const ProjectModel& model) {
    std::ostringstream out;
    out << "project " << model.root << "\n";
    out << "  files: " << model.files.size() << ", modules: " << model.modules.size()
        << "\n";
    out << "  entry points:";
    if (model.entry_points.empty()) out << " (none)";
    for (const auto& e : model.entry_points) out << " " << e;
    out << "\n  artifacts:";
    if (model.artifacts.empty()) out << " (none)";
    for (const auto& a : model.artifacts) {
        out << " " << a.path << "(" << artifact_kind_name(a.kind) << ")";
    }
    out << "\n  coupling: "
        << (model.coupling ? coupling_name(*model.coupling) : "unknown");
    if (!model.coupling_note.empty()) out << " [" << model.coupling_note << "]";
    out << "\n  phases: development "
        << (model.development_phase ? "present" : "absent") << ", post-development "
        << (model.post_development_phase ? "present" : "absent") << "\n";
    out << "  high-level (heuristic): ";
    if (model.high_level.sequence.empty()) {
        out << "(empty)";
    } else {
        for (size_t i = 0; i < model.high_level.sequence.size(); ++i) {
            if (i) out << " -> ";
            out << stage_code(model.high_level.sequence[i].stage);
        }
    }
    out << "\n";
    return out.str();
}

} // namespace dspipe
