#include "dspipe/taxonomy.hpp"

#include <algorithm>
#include <cctype>

namespace dspipe {

namespace {

struct StageInfo {
    Stage stage;
    std::string_view code;
    std::string_view display;
    Layer layer;
    int ordinal;
};

constexpr std::array<StageInfo, kStageCount> kStages{{
    {Stage::ACQ, "ACQ", "Data Acquisition", Layer::Preprocessing, 10},
    {Stage::PRP, "PRP", "Data Preparation", Layer::Preprocessing, 20},
    {Stage::STR, "STR", "Storage", Layer::Preprocessing, 30},
    {Stage::FTR, "FTR", "Feature Engineering", Layer::ModelBuilding, 40},
    {Stage::MDL, "MDL", "Modeling", Layer::ModelBuilding, 50},
    {Stage::TRN, "TRN", "Training", Layer::ModelBuilding, 60},
    {Stage::EVL, "EVL", "Evaluation", Layer::ModelBuilding, 70},
    {Stage::PRD, "PRD", "Prediction", Layer::ModelBuilding, 80},
    {Stage::INT, "INT", "Interpretation", Layer::Postprocessing, 90},
    {Stage::CMN, "CMN", "Communication", Layer::Postprocessing, 100},
    {Stage::DPL, "DPL", "Deployment", Layer::Postprocessing, 110},
    {Stage::LIB, "LIB", "Library Loading", Layer::Auxiliary, 5},
    {Stage::EDA, "EDA", "Exploratory Data Analysis", Layer::Auxiliary, 25},
    {Stage::VIS, "VIS", "Visualization", Layer::Auxiliary, 0},
    {Stage::GEN, "GEN", "Generic", Layer::Auxiliary, 0},
}};

const StageInfo& info(Stage s) {
    return kStages[static_cast<size_t>(s)];
}

} // namespace

std::string_view stage_code(Stage s) { return info(s).code; }
std::string_view stage_display_name(Stage s) { return info(s).display; }
Layer stage_layer(Stage s) { return info(s).layer; }
int stage_ordinal(Stage s) { return info(s).ordinal; }

std::string_view layer_name(Layer l) {
    switch (l) {
    case Layer::Preprocessing: return "preprocessing";
    case Layer::ModelBuilding: return "model-building";
    case Layer::Postprocessing: return "postprocessing";
    case Layer::Auxiliary: return "auxiliary";
    }
    return "?";
}

const std::array<Stage, kStageCount>& all_stages() {
    static const std::array<Stage, kStageCount> order = [] {
        std::array<Stage, kStageCount> a{};
        for (int i = 0; i < kStageCount; ++i) a[i] = kStages[i].stage;
        return a;
    }();
    return order;
}

const std::array<Stage, kStageCount>& report_order() {
    static const std::array<Stage, kStageCount> order = [] {
        std::array<Stage, kStageCount> a = all_stages();
        std::stable_sort(a.begin(), a.end(), [](Stage x, Stage y) {
            int ox = stage_ordinal(x), oy = stage_ordinal(y);
            if (ox == 0) ox = 1000;
            if (oy == 0) oy = 1000;
            if (ox != oy) return ox < oy;
            return stage_code(x) < stage_code(y);
        });
        return a;
    }();
    return order;
}

Stage stage_from_code(std::string_view code) {
    std::string upper(code);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const auto& s : kStages) {
        if (s.code == upper) return s.stage;
    }
    throw UnknownStageError("unknown stage code: \"" + std::string(code) + "\"");
}

bool is_feedback_edge(Stage from, Stage to) {
    const int of = stage_ordinal(from);
    const int ot = stage_ordinal(to);
    if (of == 0 || ot == 0) {
        throw UnorderedStageError(
            std::string("stage without canonical position in feedback query: ") +
            std::string(stage_code(of == 0 ? from : to)));
    }
    return ot < of;
}

} // namespace dspipe
