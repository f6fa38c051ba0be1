#include "dspipe/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace dspipe {

bool Pipeline::contains(Stage s) const {
    return std::any_of(sequence.begin(), sequence.end(),
                       [s](const StageOccurrence& o) { return o.stage == s; });
}

long Pipeline::occurrences(Stage s) const {
    long n = 0;
    for (const auto& o : sequence) {
        if (o.stage == s) ++n;
    }
    return n;
}

Pipeline collapse_stages(const std::vector<Stage>& stages,
                         const std::vector<int>& positions,
                         PipelineLevel level, const std::string& source) {
    Pipeline p;
    p.source = source;
    p.level = level;
    std::map<Stage, int> occurrence_counter;
    for (size_t i = 0; i < stages.size(); ++i) {
        const int pos = i < positions.size() ? positions[i] : static_cast<int>(i);
        if (!p.sequence.empty() && p.sequence.back().stage == stages[i]) {
            p.sequence.back().span_last = pos;
            ++p.sequence.back().call_count;
            continue;
        }
        StageOccurrence occ;
        occ.stage = stages[i];
        occ.occurrence_index = ++occurrence_counter[stages[i]];
        occ.span_first = pos;
        occ.span_last = pos;
        occ.call_count = 1;
        p.sequence.push_back(occ);
    }
    for (size_t i = 1; i < p.sequence.size(); ++i) {
        ++p.edges[{p.sequence[i - 1].stage, p.sequence[i].stage}];
    }
    return p;
}

Pipeline build_low_level(const std::vector<CallEvent>& events,
                         const ApiDictionary& dict, const std::string& source) {
    std::vector<Stage> stages;
    std::vector<int> positions;
    long dropped_generic = 0, dropped_nomatch = 0;
    for (const CallEvent& ev : events) {
        std::optional<Stage> stage = dict.lookup(ev);
        if (!stage) {
            ++dropped_nomatch;
            continue;
        }
        if (*stage == Stage::GEN) {
            ++dropped_generic;
            continue;
        }
        stages.push_back(*stage);
        positions.push_back(ev.order_index);
    }
    Pipeline p = collapse_stages(stages, positions, PipelineLevel::Low, source);
    p.dropped_generic = dropped_generic;
    p.dropped_nomatch = dropped_nomatch;
    return p;
}

namespace {

struct HeadingKeyword {
    std::string_view keyword;
    Stage stage;
};

// Priority-ordered keyword table; first hit wins.
constexpr std::array<HeadingKeyword, 22> kHeadingKeywords{{
    {"exploratory", Stage::EDA},
    {"eda", Stage::EDA},
    {"load librar", Stage::LIB},
    {"import", Stage::LIB},
    {"visuali", Stage::VIS},
    {"plot", Stage::VIS},
    {"feature", Stage::FTR},
    {"model", Stage::MDL},
    {"train", Stage::TRN},
    {"evaluat", Stage::EVL},
    {"validation", Stage::EVL},
    {"predict", Stage::PRD},
    {"submission", Stage::PRD},
    {"clean", Stage::PRP},
    {"preprocess", Stage::PRP},
    {"preparation", Stage::PRP},
    {"load data", Stage::ACQ},
    {"read data", Stage::ACQ},
    {"acquisition", Stage::ACQ},
    {"interpret", Stage::INT},
    {"deploy", Stage::DPL},
    {"storage", Stage::STR},
}};

} // namespace

std::optional<Stage> classify_heading(const std::string& heading) {
    std::string low(heading);
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const auto& [keyword, stage] : kHeadingKeywords) {
        if (low.find(keyword) != std::string::npos) return stage;
    }
    return std::nullopt;
}

std::vector<HighLevelLabel> classify_headings(const SourceUnit& unit) {
    std::vector<HighLevelLabel> labels;
    for (const Heading& h : extract_headings(unit)) {
        labels.push_back(HighLevelLabel{h.cell_index, h.text, classify_heading(h.text)});
    }
    return labels;
}

Pipeline build_high_level(const SourceUnit& unit) {
    std::vector<Stage> stages;
    std::vector<int> positions;
    int heading_index = 0;
    for (const HighLevelLabel& label : classify_headings(unit)) {
        if (label.stage) {
            stages.push_back(*label.stage);
            positions.push_back(heading_index);
        }
        ++heading_index;
    }
    return collapse_stages(stages, positions, PipelineLevel::High, unit.path);
}

} // namespace dspipe
