#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dspipe/calls.hpp"
#include "dspipe/taxonomy.hpp"

namespace dspipe {

enum class MatchKind {
    Exact,        // full resolved name, e.g. "pandas.read_csv"
    RootPrefix,   // dotted prefix, e.g. "sklearn.ensemble"
    MethodSuffix, // final segment only, e.g. "fit"
};

std::string_view match_kind_name(MatchKind m);
MatchKind match_kind_from_name(std::string_view name);

struct DictEntry {
    std::string pattern;
    MatchKind match = MatchKind::Exact;
    Stage stage = Stage::GEN;
    std::string note; // provenance comment
};

// API-name -> stage mapping. Lookup precedence: Exact on the resolved name,
// then the longest RootPrefix over its dotted prefixes, then MethodSuffix on
// the final segment. GEN results mean "recognized but excluded".
class ApiDictionary {
public:
    ApiDictionary() = default;
    ApiDictionary(int version, std::vector<DictEntry> entries);

    int version() const { return version_; }
    const std::vector<DictEntry>& entries() const { return entries_; }

    std::optional<Stage> lookup(const CallEvent& event) const;
    std::optional<Stage> lookup_name(const std::string& resolved_name,
                                     const std::string& method_name) const;

private:
    int version_ = 1;
    std::vector<DictEntry> entries_;
};

// Parses and validates the JSON dictionary format; rejects duplicate
// (pattern, match) pairs and unknown stage codes, citing the entry index.
ApiDictionary load_dictionary(const std::string& path);
ApiDictionary dictionary_from_json(const std::string& text);

// The built-in dictionary covering the pandas / numpy / scikit-learn /
// keras / tensorflow / matplotlib API families.
const ApiDictionary& seed_dictionary();
const std::string& seed_dictionary_json();

} // namespace dspipe
