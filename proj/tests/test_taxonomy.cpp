#include <doctest.h>

#include <set>

#include "dspipe/taxonomy.hpp"

using namespace dspipe;

TEST_SUITE("taxonomy") {

TEST_CASE("fifteen stages with unique codes") {
    std::set<std::string_view> codes;
    for (Stage s : all_stages()) codes.insert(stage_code(s));
    CHECK(codes.size() == 15);
    CHECK(all_stages().size() == 15);
}

TEST_CASE("stage_from_code finds MDL") {
    const Stage s = stage_from_code("MDL");
    CHECK(s == Stage::MDL);
    CHECK(stage_display_name(s) == "Modeling");
    CHECK(stage_layer(s) == Layer::ModelBuilding);
    CHECK(stage_ordinal(s) == 50);
}

TEST_CASE("stage_from_code is case-insensitive") {
    CHECK(stage_from_code("acq") == Stage::ACQ);
    CHECK(stage_from_code("Acq") == Stage::ACQ);
}

TEST_CASE("stage_from_code rejects unknown codes") {
    CHECK_THROWS_AS(stage_from_code("XYZ"), UnknownStageError);
    try {
        stage_from_code("XYZ");
    } catch (const UnknownStageError& e) {
        CHECK(std::string(e.what()).find("XYZ") != std::string::npos);
    }
}

TEST_CASE("canonical ordinals") {
    CHECK(stage_ordinal(Stage::ACQ) == 10);
    CHECK(stage_ordinal(Stage::PRP) == 20);
    CHECK(stage_ordinal(Stage::STR) == 30);
    CHECK(stage_ordinal(Stage::FTR) == 40);
    CHECK(stage_ordinal(Stage::MDL) == 50);
    CHECK(stage_ordinal(Stage::TRN) == 60);
    CHECK(stage_ordinal(Stage::EVL) == 70);
    CHECK(stage_ordinal(Stage::PRD) == 80);
    CHECK(stage_ordinal(Stage::INT) == 90);
    CHECK(stage_ordinal(Stage::CMN) == 100);
    CHECK(stage_ordinal(Stage::DPL) == 110);
    CHECK(stage_ordinal(Stage::LIB) == 5);
    CHECK(stage_ordinal(Stage::EDA) == 25);
    CHECK(stage_ordinal(Stage::VIS) == 0);
    CHECK(stage_ordinal(Stage::GEN) == 0);
}

TEST_CASE("layer partition is total and fixed") {
    CHECK(stage_layer(Stage::ACQ) == Layer::Preprocessing);
    CHECK(stage_layer(Stage::PRP) == Layer::Preprocessing);
    CHECK(stage_layer(Stage::STR) == Layer::Preprocessing);
    CHECK(stage_layer(Stage::FTR) == Layer::ModelBuilding);
    CHECK(stage_layer(Stage::TRN) == Layer::ModelBuilding);
    CHECK(stage_layer(Stage::EVL) == Layer::ModelBuilding);
    CHECK(stage_layer(Stage::PRD) == Layer::ModelBuilding);
    CHECK(stage_layer(Stage::INT) == Layer::Postprocessing);
    CHECK(stage_layer(Stage::CMN) == Layer::Postprocessing);
    CHECK(stage_layer(Stage::DPL) == Layer::Postprocessing);
    CHECK(stage_layer(Stage::LIB) == Layer::Auxiliary);
    CHECK(stage_layer(Stage::EDA) == Layer::Auxiliary);
    CHECK(stage_layer(Stage::VIS) == Layer::Auxiliary);
    CHECK(stage_layer(Stage::GEN) == Layer::Auxiliary);
}

TEST_CASE("feedback edges point backwards") {
    CHECK(is_feedback_edge(stage_from_code("EVL"), stage_from_code("MDL")));
    CHECK_FALSE(is_feedback_edge(Stage::MDL, Stage::MDL));
    CHECK_FALSE(is_feedback_edge(Stage::PRP, Stage::EVL));
    CHECK(is_feedback_edge(Stage::PRD, Stage::MDL));
}

TEST_CASE("feedback query rejects unordered stages") {
    CHECK_THROWS_AS(is_feedback_edge(Stage::VIS, Stage::MDL), UnorderedStageError);
    CHECK_THROWS_AS(is_feedback_edge(Stage::MDL, Stage::GEN), UnorderedStageError);
}

TEST_CASE("exactly one direction is a feedback edge for distinct ordered stages") {
    for (Stage a : all_stages()) {
        for (Stage b : all_stages()) {
            if (stage_ordinal(a) == 0 || stage_ordinal(b) == 0) continue;
            if (a == b) {
                CHECK_FALSE(is_feedback_edge(a, b));
            } else if (stage_ordinal(a) != stage_ordinal(b)) {
                CHECK(is_feedback_edge(a, b) != is_feedback_edge(b, a));
            }
        }
    }
}

TEST_CASE("ordinals strictly increase along the canonical chain") {
    const Stage chain[] = {Stage::ACQ, Stage::PRP, Stage::STR, Stage::FTR,
                           Stage::MDL, Stage::TRN, Stage::EVL, Stage::PRD,
                           Stage::INT, Stage::CMN, Stage::DPL};
    for (size_t i = 1; i < std::size(chain); ++i) {
        CHECK(stage_ordinal(chain[i - 1]) < stage_ordinal(chain[i]));
    }
}

} // TEST_SUITE
