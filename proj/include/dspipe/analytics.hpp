#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dspipe/pipeline.hpp"
#include "dspipe/taxonomy.hpp"

namespace dspipe {

enum class LintRule { MissingEvaluation, FeedbackLoop, PipelineJungle, TangledStages };
enum class Severity { Info, Warn };

std::string_view lint_rule_name(LintRule r);
std::string_view severity_name(Severity s);

struct Finding {
    LintRule rule;
    std::string source;
    std::string detail;
    Severity severity = Severity::Warn;
};

struct LintConfig {
    std::set<Stage> required{Stage::EVL};
    int jungle_min_runs = 3;
    int tangle_threshold = 3;
    std::set<LintRule> enabled{LintRule::MissingEvaluation, LintRule::FeedbackLoop,
                               LintRule::PipelineJungle, LintRule::TangledStages};
};

// Stage x Stage adjacency counts, indexed by Stage declaration order.
class TransitionMatrix {
public:
    TransitionMatrix();

    long& at(Stage from, Stage to);
    long at(Stage from, Stage to) const;
    long total() const;
    void merge(const TransitionMatrix& other);
    bool operator==(const TransitionMatrix& other) const = default;

private:
    std::array<std::array<long, kStageCount>, kStageCount> counts_;
};

// Aggregated corpus view. Presence is stored as integer counts so that
// partial reports merge associatively; frequencies are derived on demand.
struct CorpusReport {
    long n_pipelines = 0;
    std::map<Stage, long> stage_presence;
    TransitionMatrix transition;
    std::vector<Finding> lint;

    double frequency(Stage s) const;
    void merge(const CorpusReport& other);
};

// frequency(s) = fraction of pipelines whose sequence contains s.
// Throws InputError on an empty corpus.
std::map<Stage, double> stage_frequency(const std::vector<Pipeline>& pipelines);

TransitionMatrix transition_matrix(const std::vector<Pipeline>& pipelines);

// One Warn finding per required stage absent from the sequence, plus an
// Info note when EVL is missing but visualization calls are present
// (developers often evaluate by plotting).
std::vector<Finding> lint_missing_stage(const Pipeline& p,
                                        const std::set<Stage>& required = {Stage::EVL});

// One Info finding per backward edge; unordered stages (VIS) are skipped.
std::vector<Finding> lint_feedback_loops(const Pipeline& p);

// Warn when PRP runs >= min_runs and the runs sit between >= 2 distinct
// ordered pairs of non-PRP stages.
std::vector<Finding> lint_pipeline_jungle(const Pipeline& p, int min_runs = 3);

// scatter(s) = occurrences(s) - 1; Warn when the summed scatter reaches the
// threshold.
std::vector<Finding> lint_tangled(const Pipeline& p, int threshold = 3);

std::vector<Finding> run_lints(const Pipeline& p, const LintConfig& config);

CorpusReport corpus_report(const std::vector<Pipeline>& pipelines,
                           const LintConfig& config);

} // namespace dspipe
