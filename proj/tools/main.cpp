// dspipe: reconstructs data-science pipelines from scripts and notebooks,
// reports corpus statistics and lints for pipeline anti-patterns.

#include <cstdlib>
#include <filesystem>
#include <fnmatch.h>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dspipe/analytics.hpp"
#include "dspipe/calls.hpp"
#include "dspipe/dictionary.hpp"
#include "dspipe/kappa.hpp"
#include "dspipe/parallel.hpp"
#include "dspipe/pipeline.hpp"
#include "dspipe/project.hpp"
#include "dspipe/serialize.hpp"
#include "dspipe/source.hpp"

namespace fs = std::filesystem;
using namespace dspipe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLintWarnings = 1;
constexpr int kExitError = 2;

struct GlobalOptions {
    std::string dict_path;
    std::string format; // per-command default applied when empty
    int jobs = 0;       // 0 = hardware concurrency
};

int effective_jobs(const GlobalOptions& g) {
    if (g.jobs > 0) return g.jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

const ApiDictionary& resolve_dictionary(const GlobalOptions& g,
                                        ApiDictionary& storage) {
    std::string path = g.dict_path;
    if (path.empty()) {
        if (const char* env = std::getenv("DSPIPE_DICT")) path = env;
    }
    if (path.empty()) return seed_dictionary();
    storage = load_dictionary(path);
    return storage;
}

std::string format_or(const GlobalOptions& g, const std::string& fallback) {
    return g.format.empty() ? fallback : g.format;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

// diagnostics for skipped notebook cells go to the error stream
void report_diagnostics(const std::string& path, const ParsedUnit& parsed) {
    for (const CellDiagnostic& d : parsed.diagnostics) {
        std::cerr << path << ": cell " << d.cell_index << " skipped: " << d.message
                  << "\n";
    }
}

std::vector<std::string> scan_sources(const std::string& dir,
                                      const std::vector<std::string>& globs) {
    const fs::path root(dir);
    if (!fs::exists(root) || !fs::is_directory(root)) {
        throw IoError("not a directory: " + dir);
    }
    std::vector<std::string> files;
    for (auto it = fs::recursive_directory_iterator(root);
         it != fs::recursive_directory_iterator(); ++it) {
        const std::string name = it->path().filename().string();
        if (it->is_directory()) {
            if (!name.empty() && name[0] == '.') it.disable_recursion_pending();
            continue;
        }
        if (!it->is_regular_file() || (!name.empty() && name[0] == '.')) continue;
        const std::string rel = fs::relative(it->path(), root).generic_string();
        bool matched = false;
        if (globs.empty()) {
            matched = it->path().extension() == ".py" ||
                      it->path().extension() == ".ipynb";
        } else {
            for (const std::string& g : globs) {
                if (fnmatch(g.c_str(), rel.c_str(), 0) == 0 ||
                    fnmatch(g.c_str(), name.c_str(), 0) == 0) {
                    matched = true;
                    break;
                }
            }
        }
        if (matched) files.push_back(rel);
    }
    std::sort(files.begin(), files.end());
    return files;
}

struct CorpusFile {
    Pipeline pipeline;
    std::vector<std::string> diagnostics;
    bool ok = false;
    std::string error;
};

std::vector<CorpusFile> analyze_corpus(const std::string& dir,
                                       const std::vector<std::string>& files,
                                       const ApiDictionary& dict, int jobs) {
    return parallel_map<CorpusFile>(files.size(), jobs, [&](size_t i) {
        CorpusFile result;
        const std::string full = (fs::path(dir) / files[i]).string();
        try {
            SourceUnit unit = load_source(full);
            unit.path = files[i]; // report paths relative to the scan root
            ParsedUnit parsed = parse_unit(unit);
            for (const CellDiagnostic& d : parsed.diagnostics) {
                result.diagnostics.push_back(files[i] + ": cell " +
                                             std::to_string(d.cell_index) +
                                             " skipped: " + d.message);
            }
            result.pipeline = build_low_level(extract_calls(parsed), dict, files[i]);
            result.ok = true;
        } catch (const Error& e) {
            result.error = e.what();
        }
        return result;
    });
}

LintConfig make_lint_config(const std::vector<std::string>& rules,
                            int jungle_min_runs, int tangle_threshold,
                            const std::string& required_codes) {
    LintConfig config;
    config.jungle_min_runs = jungle_min_runs;
    config.tangle_threshold = tangle_threshold;
    if (!required_codes.empty()) {
        config.required.clear();
        std::istringstream in(required_codes);
        std::string code;
        while (std::getline(in, code, ',')) {
            if (!code.empty()) config.required.insert(stage_from_code(code));
        }
    }
    if (!rules.empty()) {
        config.enabled.clear();
        for (const std::string& r : rules) {
            if (r == "missing") config.enabled.insert(LintRule::MissingEvaluation);
            else if (r == "feedback") config.enabled.insert(LintRule::FeedbackLoop);
            else if (r == "jungle") config.enabled.insert(LintRule::PipelineJungle);
            else if (r == "tangle") config.enabled.insert(LintRule::TangledStages);
            else throw InputError("unknown lint rule: " + r +
                                  " (expected missing, feedback, jungle, tangle)");
        }
    }
    return config;
}

int cmd_extract(const GlobalOptions& g, const std::string& path, bool high_level,
                bool raw, bool merged) {
    ApiDictionary storage;
    const ApiDictionary& dict = resolve_dictionary(g, storage);
    SourceUnit unit = load_source(path);
    Pipeline pipeline;
    std::vector<CallEvent> calls;
    if (high_level) {
        pipeline = build_high_level(unit);
    } else {
        ParsedUnit parsed = parse_unit(unit);
        report_diagnostics(path, parsed);
        calls = extract_calls(parsed);
        pipeline = build_low_level(calls, dict, path);
    }
    const std::string format = format_or(g, "json");
    if (format == "json") {
        if (raw && !high_level) {
            std::cout << pipeline_to_json(pipeline, calls, dict);
        } else {
            std::cout << pipeline_to_json(pipeline);
        }
    } else if (format == "dot") {
        std::cout << pipeline_to_dot(pipeline, merged);
    } else if (format == "text") {
        std::cout << pipeline_to_text(pipeline);
    } else {
        throw InputError("unknown format: " + format);
    }
    return kExitOk;
}

int cmd_corpus(const GlobalOptions& g, const std::string& dir,
               const std::vector<std::string>& globs, const std::string& csv_path,
               const LintConfig& lint_config) {
    ApiDictionary storage;
    const ApiDictionary& dict = resolve_dictionary(g, storage);
    const std::vector<std::string> files = scan_sources(dir, globs);
    if (files.empty()) throw InputError("empty corpus: no matching files under " + dir);
    std::vector<CorpusFile> analyzed =
        analyze_corpus(dir, files, dict, effective_jobs(g));
    std::vector<Pipeline> pipelines;
    for (size_t i = 0; i < analyzed.size(); ++i) {
        for (const std::string& d : analyzed[i].diagnostics) std::cerr << d << "\n";
        if (analyzed[i].ok) {
            pipelines.push_back(std::move(analyzed[i].pipeline));
        } else {
            std::cerr << files[i] << ": skipped: " << analyzed[i].error << "\n";
        }
    }
    if (pipelines.empty()) throw InputError("empty corpus: no analyzable files");
    CorpusReport report = corpus_report(pipelines, lint_config);
    if (!csv_path.empty()) write_text_file(csv_path, transition_to_csv(report.transition));
    const std::string format = format_or(g, "json");
    if (format == "json") {
        std::cout << corpus_report_to_json(report);
    } else if (format == "text") {
        std::cout << "pipelines: " << report.n_pipelines << "\n";
        for (Stage s : report_order()) {
            auto it = report.stage_presence.find(s);
            if (it == report.stage_presence.end() || it->second == 0) continue;
            std::cout << "  " << stage_code(s) << ": " << it->second << "/"
                      << report.n_pipelines << "\n";
        }
        std::cout << findings_to_text(report.lint);
    } else {
        throw InputError("unknown format for corpus: " + format);
    }
    return kExitOk;
}

int cmd_lint(const GlobalOptions& g, const std::string& path,
             const LintConfig& lint_config) {
    ApiDictionary storage;
    const ApiDictionary& dict = resolve_dictionary(g, storage);
    std::vector<std::pair<std::string, std::string>> targets; // display, full path
    if (fs::is_directory(path)) {
        for (const std::string& rel : scan_sources(path, {})) {
            targets.emplace_back(rel, (fs::path(path) / rel).string());
        }
    } else {
        targets.emplace_back(path, path);
    }
    if (targets.empty()) throw InputError("nothing to lint under " + path);
    std::vector<Finding> findings;
    for (const auto& [display, full] : targets) {
        SourceUnit unit = load_source(full);
        unit.path = display;
        ParsedUnit parsed = parse_unit(unit);
        report_diagnostics(display, parsed);
        Pipeline pipeline = build_low_level(extract_calls(parsed), dict, display);
        for (auto& f : run_lints(pipeline, lint_config)) {
            findings.push_back(std::move(f));
        }
    }
    const std::string format = format_or(g, "text");
    if (format == "text") {
        std::cout << findings_to_text(findings);
    } else if (format == "json") {
        std::cout << findings_to_json(findings);
    } else {
        throw InputError("unknown format for lint: " + format);
    }
    const bool has_warning =
        std::any_of(findings.begin(), findings.end(),
                    [](const Finding& f) { return f.severity == Severity::Warn; });
    return has_warning ? kExitLintWarnings : kExitOk;
}

int cmd_project(const GlobalOptions& g, const std::string& dir,
                std::optional<int> contributors, bool merged) {
    ApiDictionary storage;
    const ApiDictionary& dict = resolve_dictionary(g, storage);
    ProjectModel model = analyze_project(dir, contributors, dict, effective_jobs(g));
    for (const auto& [path, reason] : model.skipped) {
        std::cerr << path << ": skipped: " << reason << "\n";
    }
    const std::string format = format_or(g, "json");
    if (format == "json") {
        std::cout << project_to_json(model);
    } else if (format == "text") {
        std::cout << project_to_text(model);
    } else if (format == "dot") {
        std::cout << pipeline_to_dot(model.high_level, merged);
    } else {
        throw InputError("unknown format: " + format);
    }
    return kExitOk;
}

std::vector<std::string> read_label_file(const std::string& path) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + " is not valid JSON: " + e.what());
    }
    if (!doc.is_array()) throw InputError(path + ": expected a JSON array of strings");
    std::vector<std::string> labels;
    for (const auto& item : doc) {
        if (!item.is_string()) {
            throw InputError(path + ": expected a JSON array of strings");
        }
        labels.push_back(item.get<std::string>());
    }
    return labels;
}

int cmd_kappa(const GlobalOptions& g, const std::string& file_a,
              const std::string& file_b) {
    AgreementReport report =
        cohens_kappa(read_label_file(file_a), read_label_file(file_b));
    const std::string format = format_or(g, "json");
    if (format == "json") {
        std::cout << agreement_to_json(report);
    } else if (format == "text") {
        std::cout << "n=" << report.n << " po=" << report.po << " pe=" << report.pe
                  << " kappa=" << report.kappa << " (" << report.interpretation
                  << ")\n";
    } else {
        throw InputError("unknown format for kappa: " + format);
    }
    return kExitOk;
}

int cmd_dict_validate(const GlobalOptions& g, const std::string& path) {
    const ApiDictionary dict = load_dictionary(path);
    const std::string format = format_or(g, "json");
    if (format == "json") {
        nlohmann::ordered_json j;
        j["ok"] = true;
        j["version"] = dict.version();
        j["entries"] = dict.entries().size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ok: version " << dict.version() << ", "
                  << dict.entries().size() << " entries\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dspipe: data-science pipeline extraction, statistics and linting"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    GlobalOptions g;
    app.add_option("--dict", g.dict_path,
                   "API dictionary JSON (default: built-in seed, or $DSPIPE_DICT)");
    app.add_option("--format", g.format, "Output format: json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--jobs", g.jobs, "Worker threads (default: hardware parallelism)")
        ->check(CLI::PositiveNumber);

    // extract
    auto* extract = app.add_subcommand("extract", "Pipeline of one script or notebook");
    std::string extract_path;
    bool extract_high = false, extract_raw = false, extract_merged = false;
    extract->add_option("path", extract_path, "Script (.py) or notebook (.ipynb)")
        ->required();
    extract->add_flag("--high-level", extract_high,
                      "Heading-derived pipeline instead of API calls");
    extract->add_flag("--raw", extract_raw, "Include the full call log (json)");
    extract->add_flag("--merged", extract_merged,
                      "DOT only: one node per stage with count-labeled edges");

    // corpus
    auto* corpus = app.add_subcommand("corpus", "Aggregate statistics over a directory");
    std::string corpus_dir, corpus_csv;
    std::vector<std::string> corpus_globs;
    corpus->add_option("dir", corpus_dir, "Corpus directory")->required();
    corpus->add_option("--csv", corpus_csv, "Also write the transition matrix as CSV");
    corpus->add_option("--glob", corpus_globs,
                       "File patterns (default: *.py and *.ipynb)");

    // lint
    auto* lint = app.add_subcommand("lint", "Anti-pattern findings for files");
    std::string lint_path;
    lint->add_option("path", lint_path, "File or directory")->required();

    // shared lint configuration (corpus reports include lint findings too)
    std::vector<std::string> rule_names;
    int jungle_min_runs = 3;
    int tangle_threshold = 3;
    std::string required_codes;
    for (CLI::App* cmd : {corpus, lint}) {
        cmd->add_option("--rules", rule_names,
                        "Enabled rules: missing, feedback, jungle, tangle")
            ->delimiter(',');
        cmd->add_option("--jungle-min-runs", jungle_min_runs,
                        "PRP run count that triggers PipelineJungle")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--tangle-threshold", tangle_threshold,
                        "Scatter score that triggers TangledStages")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--required", required_codes,
                        "Comma-separated stage codes for MissingEvaluation "
                        "(default: EVL)");
    }

    // project
    auto* project = app.add_subcommand("project", "Whole-repository analysis");
    std::string project_dir;
    int project_contributors = 0;
    bool project_merged = false;
    project->add_option("dir", project_dir, "Repository root")->required();
    project->add_option("--contributors", project_contributors,
                        "Contributor count for coupling classification");
    project->add_flag("--merged", project_merged,
                      "DOT only: one node per stage with count-labeled edges");

    // kappa
    auto* kappa = app.add_subcommand("kappa", "Cohen's kappa of two label files");
    std::string kappa_a, kappa_b;
    kappa->add_option("labels_a", kappa_a, "JSON array of strings")->required();
    kappa->add_option("labels_b", kappa_b, "JSON array of strings")->required();

    // dict-validate
    auto* dict_validate =
        app.add_subcommand("dict-validate", "Check a dictionary file");
    std::string dict_file;
    dict_validate->add_option("file", dict_file, "Dictionary JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (extract->parsed()) {
            return cmd_extract(g, extract_path, extract_high, extract_raw,
                               extract_merged);
        }
        if (corpus->parsed()) {
            return cmd_corpus(g, corpus_dir, corpus_globs, corpus_csv,
                              make_lint_config(rule_names, jungle_min_runs,
                                               tangle_threshold, required_codes));
        }
        if (lint->parsed()) {
            return cmd_lint(g, lint_path,
                            make_lint_config(rule_names, jungle_min_runs,
                                             tangle_threshold, required_codes));
        }
        if (project->parsed()) {
            std::optional<int> contributors;
            if (project->count("--contributors")) contributors = project_contributors;
            return cmd_project(g, project_dir, contributors, project_merged);
        }
        if (kappa->parsed()) return cmd_kappa(g, kappa_a, kappa_b);
        if (dict_validate->parsed()) return cmd_dict_validate(g, dict_file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
