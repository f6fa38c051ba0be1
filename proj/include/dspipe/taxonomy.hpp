#pragma once

#include <array>
#include <string>
#include <string_view>

#include "dspipe/errors.hpp"

namespace dspipe {

// Pipeline stage vocabulary. Eleven canonical stages plus the in-the-small
// extensions (LIB, EDA, VIS) and GEN, the sink for recognized-but-excluded
// generic APIs. GEN never appears in a pipeline sequence.
enum class Stage {
    ACQ, // data acquisition
    PRP, // data preparation
    STR, // storage
    FTR, // feature engineering
    MDL, // modeling
    TRN, // training
    EVL, // evaluation
    PRD, // prediction
    INT, // interpretation
    CMN, // communication
    DPL, // deployment
    LIB, // library loading / environment setup
    EDA, // exploratory data analysis
    VIS, // visualization (deliberately unordered)
    GEN, // generic API, excluded from pipelines
};

inline constexpr int kStageCount = 15;

enum class Layer { Preprocessing, ModelBuilding, Postprocessing, Auxiliary };

std::string_view stage_code(Stage s);
std::string_view stage_display_name(Stage s);
Layer stage_layer(Stage s);

// Canonical position. The 11-stage chain carries 10,20,...,110; LIB slots in
// at 5 and EDA at 25. VIS and GEN return 0, meaning "unordered".
int stage_ordinal(Stage s);

std::string_view layer_name(Layer l);

// All stages, in declaration order.
const std::array<Stage, kStageCount>& all_stages();

// Stable ordering used in every report: ordered stages by ordinal, then the
// unordered ones (GEN, VIS) last.
const std::array<Stage, kStageCount>& report_order();

// Case-insensitive code lookup; throws UnknownStageError naming the input.
Stage stage_from_code(std::string_view code);

// True iff `to` precedes `from` in the canonical order. Throws
// UnorderedStageError when either side has no canonical position.
bool is_feedback_edge(Stage from, Stage to);

} // namespace dspipe
