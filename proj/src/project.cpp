#include "dspipe/project.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "dspipe/parallel.hpp"

namespace fs = std::filesystem;

namespace dspipe {

namespace {

bool is_source_file(const fs::path& p) {
    const std::string ext = p.extension().string();
    return ext == ".py" || ext == ".ipynb";
}

bool is_shell_file(const fs::path& p) { return p.extension() == ".sh"; }

std::string basename_of(const std::string& path) {
    const size_t pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::string dirname_of(const std::string& path) {
    const size_t pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// ordinal used for ordering; unordered stages sort after the canonical chain
int ordering_ordinal(Stage s) {
    const int o = stage_ordinal(s);
    return o == 0 ? 900 : o;
}

bool is_string_value(const Node& n, std::string_view text) {
    return n.kind == NodeKind::String && n.value == text;
}

bool is_name_value(const Node& n, std::string_view text) {
    return n.kind == NodeKind::Name && n.value == text;
}

bool is_main_guard_test(const Node& test) {
    if (test.kind != NodeKind::Compare || test.extra != "==") return false;
    if (test.children.size() != 2) return false;
    const Node& lhs = *test.children[0];
    const Node& rhs = *test.children[1];
    return (is_name_value(lhs, "__name__") && is_string_value(rhs, "__main__")) ||
           (is_string_value(lhs, "__main__") && is_name_value(rhs, "__name__"));
}

bool tree_has_main_guard(const Node& n) {
    if (n.kind == NodeKind::If && !n.children.empty() &&
        is_main_guard_test(*n.children[0])) {
        return true;
    }
    for (const auto& child : n.children) {
        if (tree_has_main_guard(*child)) return true;
    }
    return false;
}

bool has_dotted_root(const std::string& name, std::string_view root) {
    if (name.compare(0, root.size(), root) != 0) return false;
    return name.size() == root.size() || name[root.size()] == '.';
}

const std::set<std::string>& artifact_loading_methods() {
    static const std::set<std::string> methods{
        "load_model", "load_weights", "restore", "from_pretrained"};
    return methods;
}

} // namespace

std::string_view artifact_kind_name(ArtifactKind k) {
    switch (k) {
    case ArtifactKind::Checkpoint: return "checkpoint";
    case ArtifactKind::JsonModel: return "json-model";
    case ArtifactKind::SavedSource: return "saved-source";
    }
    return "?";
}

std::string_view coupling_name(Coupling c) {
    return c == Coupling::Loose ? "loose" : "tight";
}

Coupling classify_coupling(int contributors) {
    if (contributors < 1) {
        throw InputError("contributor count must be at least 1, got " +
                         std::to_string(contributors));
    }
    return contributors >= 6 ? Coupling::Loose : Coupling::Tight;
}

bool detect_main_guard(const Node& tree) { return tree_has_main_guard(tree); }

bool detect_arg_parser_call(const std::vector<CallEvent>& calls) {
    static const std::array<std::string_view, 5> roots{
        "argparse", "click", "optparse", "absl", "gflags"};
    for (const CallEvent& c : calls) {
        for (auto root : roots) {
            if (has_dotted_root(c.resolved_name, root)) return true;
        }
        if (c.method_name == "parse_args" || c.method_name == "ArgumentParser") {
            return true;
        }
    }
    return false;
}

std::vector<std::string> detect_entry_points(const std::vector<FileAnalysis>& files,
                                             const std::vector<std::string>& shell_texts) {
    std::vector<std::string> entries;
    for (const FileAnalysis& f : files) {
        bool entry = f.has_main_guard || f.calls_arg_parser;
        if (!entry) {
            const std::string base = basename_of(f.path);
            for (const std::string& sh : shell_texts) {
                if (sh.find(base) != std::string::npos) {
                    entry = true;
                    break;
                }
            }
        }
        if (entry) entries.push_back(f.path);
    }
    return entries;
}

std::vector<Artifact> detect_artifacts(const std::vector<FileAnalysis>& files,
                                       const std::vector<std::string>& data_files) {
    std::vector<Artifact> artifacts;
    for (const std::string& path : data_files) {
        const std::string base = lowercase(basename_of(path));
        const size_t dot = base.find_last_of('.');
        const std::string ext = dot == std::string::npos ? "" : base.substr(dot);
        if (ext == ".ckpt" || ext == ".h5" || ext == ".pb" || ext == ".onnx") {
            artifacts.push_back(Artifact{path, ArtifactKind::Checkpoint});
        } else if (ext == ".json" && base.find("model") != std::string::npos) {
            artifacts.push_back(Artifact{path, ArtifactKind::JsonModel});
        }
    }
    for (const FileAnalysis& f : files) {
        if (f.pipeline.contains(Stage::MDL) && !f.pipeline.contains(Stage::TRN) &&
            !f.pipeline.contains(Stage::PRD)) {
            artifacts.push_back(Artifact{f.path, ArtifactKind::SavedSource});
        }
    }
    std::sort(artifacts.begin(), artifacts.end(),
              [](const Artifact& a, const Artifact& b) { return a.path < b.path; });
    return artifacts;
}

std::optional<Stage> filename_role(const std::string& path) {
    static const std::array<std::pair<std::string_view, Stage>, 11> keywords{{
        {"download", Stage::ACQ},
        {"data", Stage::ACQ},
        {"preprocess", Stage::PRP},
        {"prep", Stage::PRP},
        {"model", Stage::MDL},
        {"train", Stage::TRN},
        {"eval", Stage::EVL},
        {"test", Stage::EVL},
        {"predict", Stage::PRD},
        {"infer", Stage::PRD},
        {"demo", Stage::PRD},
    }};
    const std::string base = lowercase(basename_of(path));
    for (const auto& [keyword, stage] : keywords) {
        if (base.find(keyword) != std::string::npos) return stage;
    }
    return std::nullopt;
}

std::optional<Stage> dominant_stage(const Pipeline& p) {
    std::map<Stage, long> weight;
    for (const StageOccurrence& occ : p.sequence) {
        weight[occ.stage] += occ.call_count;
    }
    std::optional<Stage> best;
    long best_weight = 0;
    for (const auto& [stage, w] : weight) {
        if (!best || w > best_weight ||
            (w == best_weight && ordering_ordinal(stage) < ordering_ordinal(*best))) {
            best = stage;
            best_weight = w;
        }
    }
    return best;
}

Pipeline order_high_level(const std::vector<FileAnalysis>& files,
                          const std::vector<std::string>& entry_points,
                          const std::string& root) {
    // execution sequence: entry points when the repo names them, else all files
    std::set<std::string> entry_set(entry_points.begin(), entry_points.end());
    std::vector<const FileAnalysis*> candidates;
    for (const FileAnalysis& f : files) {
        if (entry_set.empty() || entry_set.count(f.path)) candidates.push_back(&f);
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const FileAnalysis* a, const FileAnalysis* b) {
                  auto score = [](const FileAnalysis& f) {
                      if (auto role = filename_role(f.path)) {
                          return ordering_ordinal(*role);
                      }
                      if (auto dom = dominant_stage(f.pipeline)) {
                          return ordering_ordinal(*dom);
                      }
                      return 998; // empty pipelines sort last
                  };
                  const int sa = score(*a), sb = score(*b);
                  if (sa != sb) return sa < sb;
                  return a->path < b->path;
              });
    std::vector<Stage> stages;
    std::vector<int> positions;
    for (const FileAnalysis* f : candidates) {
        for (const StageOccurrence& occ : f->pipeline.sequence) {
            stages.push_back(occ.stage);
            positions.push_back(static_cast<int>(positions.size()));
        }
    }
    return collapse_stages(stages, positions, PipelineLevel::High, root);
}

ProjectModel analyze_project(const std::string& root,
                             std::optional<int> contributors,
                             const ApiDictionary& dict, int jobs) {
    const fs::path root_path(root);
    if (!fs::exists(root_path) || !fs::is_directory(root_path)) {
        throw IoError("project root is not a directory: " + root);
    }

    std::vector<fs::path> sources;
    std::vector<std::string> shell_texts;
    std::vector<std::string> data_files;
    for (auto it = fs::recursive_directory_iterator(root_path);
         it != fs::recursive_directory_iterator(); ++it) {
        const fs::path& p = it->path();
        const std::string name = p.filename().string();
        if (it->is_directory()) {
            if (!name.empty() && name[0] == '.') it.disable_recursion_pending();
            continue;
        }
        if (!it->is_regular_file() || (!name.empty() && name[0] == '.')) continue;
        if (is_source_file(p)) {
            sources.push_back(p);
        } else if (is_shell_file(p)) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream text;
            text << in.rdbuf();
            shell_texts.push_back(text.str());
        } else {
            data_files.push_back(fs::relative(p, root_path).generic_string());
        }
    }
    if (sources.empty()) {
        throw InputError("no source files under " + root);
    }
    std::sort(sources.begin(), sources.end());
    std::sort(data_files.begin(), data_files.end());

    struct PerFile {
        FileAnalysis analysis;
        bool ok = false;
        std::string error;
    };
    std::vector<PerFile> analyzed = parallel_map<PerFile>(
        sources.size(), jobs, [&](size_t i) {
            PerFile result;
            const fs::path& p = sources[i];
            result.analysis.path = fs::relative(p, root_path).generic_string();
            try {
                SourceUnit unit = load_source(p.string());
                ParsedUnit parsed = parse_unit(unit);
                result.analysis.metrics = ast_metrics(parsed);
                result.analysis.calls = extract_calls(parsed);
                result.analysis.pipeline =
                    build_low_level(result.analysis.calls, dict, result.analysis.path);
                for (const auto& tree : parsed.trees) {
                    if (detect_main_guard(*tree)) {
                        result.analysis.has_main_guard = true;
                        break;
                    }
                }
                result.analysis.calls_arg_parser =
                    detect_arg_parser_call(result.analysis.calls);
                result.ok = true;
            } catch (const Error& e) {
                result.error = e.what();
            }
            return result;
        });

    ProjectModel model;
    model.root = root;
    model.contributors = contributors;
    for (PerFile& pf : analyzed) {
        if (pf.ok) {
            model.files.push_back(std::move(pf.analysis));
        } else {
            model.skipped.emplace_back(pf.analysis.path, pf.error);
        }
    }
    if (model.files.empty()) {
        throw InputError("no parseable source files under " + root);
    }

    for (const FileAnalysis& f : model.files) {
        model.modules[dirname_of(f.path)].push_back(f.path);
    }
    model.entry_points = detect_entry_points(model.files, shell_texts);
    model.artifacts = detect_artifacts(model.files, data_files);

    bool has_training = false;
    bool loads_artifacts = false;
    for (const FileAnalysis& f : model.files) {
        if (f.pipeline.contains(Stage::TRN)) has_training = true;
        for (const CallEvent& c : f.calls) {
            if (artifact_loading_methods().count(c.method_name) ||
                c.resolved_name == "torch.load" || c.resolved_name == "joblib.load") {
                loads_artifacts = true;
            }
        }
    }
    model.development_phase = !model.artifacts.empty() && has_training;
    model.post_development_phase = loads_artifacts;

    if (contributors) {
        model.coupling = classify_coupling(*contributors);
        std::ostringstream note;
        const size_t n_entries = model.entry_points.size();
        note << *contributors << " contributor(s), " << n_entries
             << " entry point(s)";
        if (*model.coupling == Coupling::Tight && n_entries <= 2) {
            note << "; only one or two entry-points corroborate the tight coupling";
        } else if (*model.coupling == Coupling::Loose && n_entries >= 3) {
            note << "; multiple entry-points corroborate the loose coupling";
        }
        model.coupling_note = note.str();
    }

    model.high_level = order_high_level(model.files, model.entry_points, root);
    return model;
}

} // namespace dspipe
