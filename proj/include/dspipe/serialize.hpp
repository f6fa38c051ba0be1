#pragma once

#include <string>
#include <vector>

#include "dspipe/analytics.hpp"
#include "dspipe/kappa.hpp"
#include "dspipe/pipeline.hpp"
#include "dspipe/project.hpp"

namespace dspipe {

// All emitters produce canonical output: fixed key order, stages in report
// order, paths and findings sorted, two-space indentation, trailing newline.
// Byte-identical inputs give byte-identical text.

std::string pipeline_to_json(const Pipeline& p);
std::string pipeline_to_json(const Pipeline& p, const std::vector<CallEvent>& calls,
                             const ApiDictionary& dict);

// One node per StageOccurrence ("STAGE#k") with sequential edges; merged
// mode emits one node per distinct stage and count-labeled edges.
std::string pipeline_to_dot(const Pipeline& p, bool merged = false);

std::string pipeline_to_text(const Pipeline& p);

std::string corpus_report_to_json(const CorpusReport& report);
std::string transition_to_csv(const TransitionMatrix& m);

std::string findings_to_text(const std::vector<Finding>& findings);
std::string findings_to_json(const std::vector<Finding>& findings);

std::string agreement_to_json(const AgreementReport& report);

std::string project_to_json(const ProjectModel& model);
std::string project_to_text(const ProjectModel& model);

// Canonical sort used by all finding emitters: (source, rule, detail).
std::vector<Finding> sorted_findings(std::vector<Finding> findings);

} // namespace dspipe
