#include "dspipe/analytics.hpp"

#include <algorithm>
#include <sstream>

namespace dspipe {

std::string_view lint_rule_name(LintRule r) {
    switch (r) {
    case LintRule::MissingEvaluation: return "MissingEvaluation";
    case LintRule::FeedbackLoop: return "FeedbackLoop";
    case LintRule::PipelineJungle: return "PipelineJungle";
    case LintRule::TangledStages: return "TangledStages";
    }
    return "?";
}

std::string_view severity_name(Severity s) {
    return s == Severity::Info ? "info" : "warn";
}

TransitionMatrix::TransitionMatrix() {
    for (auto& row : counts_) row.fill(0);
}

long& TransitionMatrix::at(Stage from, Stage to) {
    return counts_[static_cast<size_t>(from)][static_cast<size_t>(to)];
}

long TransitionMatrix::at(Stage from, Stage to) const {
    return counts_[static_cast<size_t>(from)][static_cast<size_t>(to)];
}

long TransitionMatrix::total() const {
    long sum = 0;
    for (const auto& row : counts_) {
        for (long c : row) sum += c;
    }
    return sum;
}

void TransitionMatrix::merge(const TransitionMatrix& other) {
    for (size_t i = 0; i < counts_.size(); ++i) {
        for (size_t j = 0; j < counts_.size(); ++j) {
            counts_[i][j] += other.counts_[i][j];
        }
    }
}

double CorpusReport::frequency(Stage s) const {
    if (n_pipelines == 0) return 0.0;
    auto it = stage_presence.find(s);
    if (it == stage_presence.end()) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(n_pipelines);
}

void CorpusReport::merge(const CorpusReport& other) {
    n_pipelines += other.n_pipelines;
    for (const auto& [stage, count] : other.stage_presence) {
        stage_presence[stage] += count;
    }
    transition.merge(other.transition);
    lint.insert(lint.end(), other.lint.begin(), other.lint.end());
}

std::map<Stage, double> stage_frequency(const std::vector<Pipeline>& pipelines) {
    if (pipelines.empty()) throw InputError("empty corpus: no pipelines to summarize");
    std::map<Stage, double> freq;
    for (Stage s : all_stages()) {
        long present = 0;
        for (const Pipeline& p : pipelines) {
            if (p.contains(s)) ++present;
        }
        if (present > 0) {
            freq[s] = static_cast<double>(present) / static_cast<double>(pipelines.size());
        }
    }
    return freq;
}

TransitionMatrix transition_matrix(const std::vector<Pipeline>& pipelines) {
    TransitionMatrix m;
    for (const Pipeline& p : pipelines) {
        for (const auto& [edge, count] : p.edges) {
            m.at(edge.first, edge.second) += count;
        }
    }
    return m;
}

std::vector<Finding> lint_missing_stage(const Pipeline& p,
                                        const std::set<Stage>& required) {
    std::vector<Finding> findings;
    for (Stage s : required) {
        if (p.contains(s)) continue;
        Finding f;
        f.rule = LintRule::MissingEvaluation;
        f.source = p.source;
        f.severity = Severity::Warn;
        f.detail = "required stage " + std::string(stage_code(s)) + " (" +
                   std::string(stage_display_name(s)) + ") never occurs";
        findings.push_back(std::move(f));
        if (s == Stage::EVL && p.contains(Stage::VIS)) {
            Finding note;
            note.rule = LintRule::MissingEvaluation;
            note.source = p.source;
            note.severity = Severity::Info;
            note.detail =
                "visualization calls present without EVL; plotting may be "
                "standing in for evaluation";
            findings.push_back(std::move(note));
        }
    }
    return findings;
}

std::vector<Finding> lint_feedback_loops(const Pipeline& p) {
    std::vector<Finding> findings;
    for (const auto& [edge, count] : p.edges) {
        const auto [from, to] = edge;
        if (stage_ordinal(from) == 0 || stage_ordinal(to) == 0) continue;
        if (!is_feedback_edge(from, to)) continue;
        Finding f;
        f.rule = LintRule::FeedbackLoop;
        f.source = p.source;
        f.severity = Severity::Info;
        std::ostringstream detail;
        detail << stage_code(from) << "->" << stage_code(to) << " x" << count;
        f.detail = detail.str();
        findings.push_back(std::move(f));
    }
    return findings;
}

std::vector<Finding> lint_pipeline_jungle(const Pipeline& p, int min_runs) {
    const long runs = p.occurrences(Stage::PRP);
    if (runs < min_runs) return {};
    // collect the distinct ordered (before, after) pairs around PRP runs
    std::set<std::pair<Stage, Stage>> surroundings;
    for (size_t i = 0; i < p.sequence.size(); ++i) {
        if (p.sequence[i].stage != Stage::PRP) continue;
        if (i == 0 || i + 1 == p.sequence.size()) continue;
        const Stage before = p.sequence[i - 1].stage;
        const Stage after = p.sequence[i + 1].stage;
        if (before == Stage::PRP || after == Stage::PRP) continue;
        surroundings.insert({before, after});
    }
    if (surroundings.size() < 2) return {};
    Finding f;
    f.rule = LintRule::PipelineJungle;
    f.source = p.source;
    f.severity = Severity::Warn;
    std::ostringstream detail;
    detail << "PRP scattered across " << runs << " runs between ";
    bool first = true;
    for (const auto& [before, after] : surroundings) {
        if (!first) detail << ", ";
        detail << "(" << stage_code(before) << "," << stage_code(after) << ")";
        first = false;
    }
    f.detail = detail.str();
    return {std::move(f)};
}

std::vector<Finding> lint_tangled(const Pipeline& p, int threshold) {
    std::map<Stage, long> scatter;
    long score = 0;
    for (Stage s : all_stages()) {
        long occ = p.occurrences(s);
        if (occ > 1) {
            scatter[s] = occ - 1;
            score += occ - 1;
        }
    }
    if (score < threshold) return {};
    Finding f;
    f.rule = LintRule::TangledStages;
    f.source = p.source;
    f.severity = Severity::Warn;
    std::ostringstream detail;
    detail << "tangling score " << score << " (";
    bool first = true;
    for (const auto& [stage, n] : scatter) {
        if (!first) detail << ", ";
        detail << stage_code(stage) << " +" << n;
        first = false;
    }
    detail << ")";
    f.detail = detail.str();
    return {std::move(f)};
}

std::vector<Finding> run_lints(const Pipeline& p, const LintConfig& config) {
    std::vector<Finding> findings;
    auto enabled = [&](LintRule r) { return config.enabled.count(r) > 0; };
    if (enabled(LintRule::MissingEvaluation)) {
        findings = lint_missing_stage(p, config.required);
    }
    if (enabled(LintRule::FeedbackLoop)) {
        for (auto& f : lint_feedback_loops(p)) findings.push_back(std::move(f));
    }
    if (enabled(LintRule::PipelineJungle)) {
        for (auto& f : lint_pipeline_jungle(p, config.jungle_min_runs)) {
            findings.push_back(std::move(f));
        }
    }
    if (enabled(LintRule::TangledStages)) {
        for (auto& f : lint_tangled(p, config.tangle_threshold)) {
            findings.push_back(std::move(f));
        }
    }
    return findings;
}

CorpusReport corpus_report(const std::vector<Pipeline>& pipelines,
                           const LintConfig& config) {
    if (pipelines.empty()) throw InputError("empty corpus: no pipelines to summarize");
    CorpusReport report;
    report.n_pipelines = static_cast<long>(pipelines.size());
    for (const Pipeline& p : pipelines) {
        for (Stage s : all_stages()) {
            if (p.contains(s)) ++report.stage_presence[s];
        }
        for (auto& f : run_lints(p, config)) report.lint.push_back(std::move(f));
    }
    report.transition = transition_matrix(pipelines);
    return report;
}

} // namespace dspipe
