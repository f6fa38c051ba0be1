#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#ifndef DSPIPE_CLI_PATH
#error "DSPIPE_CLI_PATH must be defined by the build"
#endif
#ifndef DSPIPE_FIXTURES_DIR
#error "DSPIPE_FIXTURES_DIR must be defined by the build"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kFixtures{DSPIPE_FIXTURES_DIR};

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        env + " '" + DSPIPE_CLI_PATH + "' " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    size_t n;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

struct TempDir {
    fs::path dir;
    explicit TempDir(const std::string& name) {
        dir = fs::temp_directory_path() / ("dspipe_cli_" + name);
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
};

std::string quoted(const fs::path& p) { return "'" + p.string() + "'"; }

} // namespace

TEST_SUITE("cli") {

TEST_CASE("extract on a missing file exits 2") {
    RunResult r = run_cli("extract definitely_missing.py");
    CHECK(r.exit_code == 2);
}

TEST_CASE("extract --high-level emits the heading pipeline") {
    RunResult r = run_cli("extract " +
                          quoted(kFixtures / "corpus/eda_notebook.ipynb") +
                          " --high-level");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["level"] == "high");
    std::vector<std::string> stages;
    for (const auto& occ : doc["sequence"]) stages.push_back(occ["stage"]);
    CHECK(stages == std::vector<std::string>{"LIB", "ACQ", "EDA", "FTR", "MDL"});
}

TEST_CASE("corpus on an empty directory exits 2") {
    TempDir tmp("empty_corpus");
    RunResult r = run_cli("corpus " + quoted(tmp.dir));
    CHECK(r.exit_code == 2);
}

TEST_CASE("corpus --csv writes header plus one row per stage") {
    TempDir tmp("csv_out");
    const fs::path csv = tmp.dir / "out.csv";
    RunResult r = run_cli("corpus " + quoted(kFixtures / "freq25") + " --csv " +
                          quoted(csv));
    REQUIRE(r.exit_code == 0);
    std::ifstream in(csv);
    REQUIRE(in.good());
    std::string line;
    size_t rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 16);
}

TEST_CASE("corpus --glob restricts the scanned files") {
    RunResult all = run_cli("corpus " + quoted(kFixtures / "corpus"));
    RunResult scripts_only =
        run_cli("corpus " + quoted(kFixtures / "corpus") + " --glob '*.py'");
    REQUIRE(all.exit_code == 0);
    REQUIRE(scripts_only.exit_code == 0);
    CHECK(json::parse(all.output)["n_pipelines"] == 12);
    CHECK(json::parse(scripts_only.output)["n_pipelines"] == 9);
}

TEST_CASE("lint --rules feedback silences the other rules") {
    RunResult r = run_cli("lint " + quoted(kFixtures / "corpus") +
                          " --rules feedback --format json");
    CHECK(r.exit_code == 0); // feedback findings are informational
    json doc = json::parse(r.output);
    CHECK(!doc.empty());
    for (const auto& f : doc) CHECK(f["rule"] == "FeedbackLoop");
}

TEST_CASE("lint exits 0 on a clean forward pipeline") {
    RunResult r = run_cli("lint " + quoted(kFixtures / "corpus/clean_forward.py"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
}

TEST_CASE("lint exits 1 when a warning fires") {
    RunResult r = run_cli("lint " + quoted(kFixtures / "corpus/missing_eval.py"));
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("MissingEvaluation") != std::string::npos);
    // line-oriented "path: RULE: detail"
    CHECK(r.output.find(": MissingEvaluation: ") != std::string::npos);
}

TEST_CASE("project without --contributors reports unknown coupling") {
    RunResult r = run_cli("project " + quoted(kFixtures / "qanet"));
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["coupling"] == "unknown");
    CHECK(doc["contributors"].is_null());
}

TEST_CASE("project --contributors 0 exits 2") {
    RunResult r = run_cli("project " + quoted(kFixtures / "qanet") +
                          " --contributors 0");
    CHECK(r.exit_code == 2);
}

TEST_CASE("project --format dot emits the high-level graph") {
    RunResult r = run_cli("project " + quoted(kFixtures / "qanet") +
                          " --format dot --merged");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output.find("digraph pipeline") != std::string::npos);
    CHECK(r.output.find("ACQ") != std::string::npos);
}

TEST_CASE("dict-validate accepts the documented format and rejects defects") {
    TempDir tmp("dicts");
    const fs::path good = tmp.dir / "good.json";
    std::ofstream(good)
        << R"({"version":1,"entries":[{"pattern":"pandas.read_csv","match":"exact","stage":"ACQ","note":"doc: IO"},{"pattern":"fit","match":"method-suffix","stage":"TRN"}]})";
    RunResult ok = run_cli("dict-validate " + quoted(good));
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.output)["entries"] == 2);

    const fs::path bad = tmp.dir / "bad.json";
    std::ofstream(bad)
        << R"({"version":1,"entries":[{"pattern":"x","match":"exact","stage":"NOPE"}]})";
    CHECK(run_cli("dict-validate " + quoted(bad)).exit_code == 2);
}

TEST_CASE("--dict replaces the seed dictionary wholesale") {
    TempDir tmp("override");
    const fs::path dict = tmp.dir / "tiny.json";
    std::ofstream(dict)
        << R"({"version":1,"entries":[{"pattern":"read_csv","match":"method-suffix","stage":"STR"}]})";
    RunResult r = run_cli("extract " +
                          quoted(kFixtures / "corpus/missing_eval.py") +
                          " --dict " + quoted(dict));
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    REQUIRE(doc["sequence"].size() == 1);
    CHECK(doc["sequence"][0]["stage"] == "STR"); // replacement, not a merge
    CHECK(doc["dropped"]["NoMatch"].get<int>() > 0);
}

TEST_CASE("DSPIPE_DICT environment variable sets the default dictionary") {
    TempDir tmp("envdict");
    const fs::path dict = tmp.dir / "env.json";
    std::ofstream(dict)
        << R"({"version":1,"entries":[{"pattern":"read_csv","match":"method-suffix","stage":"CMN"}]})";
    RunResult r = run_cli("extract " + quoted(kFixtures / "corpus/missing_eval.py"),
                          "DSPIPE_DICT=" + dict.string());
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    REQUIRE(doc["sequence"].size() == 1);
    CHECK(doc["sequence"][0]["stage"] == "CMN");
}

TEST_CASE("kappa CLI reads JSON label arrays") {
    TempDir tmp("kappa");
    std::ofstream(tmp.dir / "a.json") << R"(["a","a","b"])";
    std::ofstream(tmp.dir / "b.json") << R"(["a","a","b"])";
    RunResult r = run_cli("kappa " + quoted(tmp.dir / "a.json") + " " +
                          quoted(tmp.dir / "b.json"));
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["kappa"] == 1.0);
    CHECK(doc["interpretation"] == "Perfect agreement");

    std::ofstream(tmp.dir / "short.json") << R"(["a"])";
    CHECK(run_cli("kappa " + quoted(tmp.dir / "a.json") + " " +
                  quoted(tmp.dir / "short.json"))
              .exit_code == 2);
}

TEST_CASE("unknown format is an operational error") {
    CHECK(run_cli("extract " + quoted(kFixtures / "corpus/missing_eval.py") +
                  " --format yaml")
              .exit_code == 2);
}

} // TEST_SUITE
