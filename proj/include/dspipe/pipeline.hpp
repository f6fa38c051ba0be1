#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dspipe/calls.hpp"
#include "dspipe/dictionary.hpp"
#include "dspipe/source.hpp"
#include "dspipe/taxonomy.hpp"

namespace dspipe {

enum class PipelineLevel { Low, High };

// One maximal run of equal-stage calls (or headings), collapsed.
struct StageOccurrence {
    Stage stage = Stage::GEN;
    int occurrence_index = 1; // k-th occurrence of this stage, 1-based
    int span_first = 0;       // order_index (or heading index) of first merged item
    int span_last = 0;
    int call_count = 1;
};

struct Pipeline {
    std::string source;
    PipelineLevel level = PipelineLevel::Low;
    std::vector<StageOccurrence> sequence;
    std::map<std::pair<Stage, Stage>, long> edges; // adjacent-pair multiset
    long dropped_generic = 0;                      // calls mapped to GEN
    long dropped_nomatch = 0;                      // calls with no dictionary hit

    bool contains(Stage s) const;
    long occurrences(Stage s) const;
};

// Maps events through the dictionary, filters GEN/NoMatch into the dropped
// counters, merges maximal equal-stage runs and derives the adjacency edges.
Pipeline build_low_level(const std::vector<CallEvent>& events,
                         const ApiDictionary& dict,
                         const std::string& source = "");

// Keyword classification of one notebook section heading; first matching
// keyword in the fixed priority order wins.
std::optional<Stage> classify_heading(const std::string& heading);

struct HighLevelLabel {
    int cell_index = 0;
    std::string heading;
    std::optional<Stage> stage; // nullopt = unclassified
};

std::vector<HighLevelLabel> classify_headings(const SourceUnit& unit);

// Heading-derived pipeline: classify, drop unclassified, collapse adjacent
// duplicates, derive edges.
Pipeline build_high_level(const SourceUnit& unit);

// Collapses an already-mapped stage sequence; shared by low/high builders
// and the project-level assembly.
Pipeline collapse_stages(const std::vector<Stage>& stages,
                         const std::vector<int>& positions,
                         PipelineLevel level, const std::string& source);

} // namespace dspipe
