#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dspipe/analytics.hpp"
#include "dspipe/calls.hpp"
#include "dspipe/dictionary.hpp"
#include "dspipe/pipeline.hpp"

namespace dspipe {

enum class ArtifactKind { Checkpoint, JsonModel, SavedSource };
enum class Coupling { Loose, Tight };

std::string_view artifact_kind_name(ArtifactKind k);
std::string_view coupling_name(Coupling c);

struct FileAnalysis {
    std::string path; // relative to the project root, '/' separators
    AstMetrics metrics;
    Pipeline pipeline;
    std::vector<CallEvent> calls;
    bool has_main_guard = false;
    bool calls_arg_parser = false;
};

struct Artifact {
    std::string path;
    ArtifactKind kind;
};

struct ProjectModel {
    std::string root;
    std::vector<FileAnalysis> files; // sorted by path
    std::map<std::string, std::vector<std::string>> modules; // directory -> files
    std::vector<std::string> entry_points;
    std::vector<Artifact> artifacts;
    std::vector<std::pair<std::string, std::string>> skipped; // path, reason
    std::optional<int> contributors;
    std::optional<Coupling> coupling;
    std::string coupling_note;
    bool development_phase = false;      // artifacts plus training code
    bool post_development_phase = false; // artifact-loading calls
    Pipeline high_level;
};

// contributors >= 6 -> Loose, 1..5 -> Tight; anything below 1 is invalid.
Coupling classify_coupling(int contributors);

bool detect_main_guard(const Node& tree);
bool detect_arg_parser_call(const std::vector<CallEvent>& calls);

// Entry points: main-guard files, argument-parser callers, and files whose
// basename appears in a shell script of the repository.
std::vector<std::string> detect_entry_points(const std::vector<FileAnalysis>& files,
                                             const std::vector<std::string>& shell_texts);

std::vector<Artifact> detect_artifacts(const std::vector<FileAnalysis>& files,
                                       const std::vector<std::string>& data_files);

// Orders files by role score (filename keyword, else dominant-stage ordinal,
// then path), restricted to entry points when any exist, and collapses the
// concatenated per-file sequences into the project pipeline.
Pipeline order_high_level(const std::vector<FileAnalysis>& files,
                          const std::vector<std::string>& entry_points,
                          const std::string& root);

std::optional<Stage> filename_role(const std::string& path);
std::optional<Stage> dominant_stage(const Pipeline& p);

// Walks root for .py/.ipynb sources, builds per-file pipelines and the
// project-level report. Throws InputError when no source file exists.
ProjectModel analyze_project(const std::string& root,
                             std::optional<int> contributors,
                             const ApiDictionary& dict, int jobs = 1);

} // namespace dspipe
