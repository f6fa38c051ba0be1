#include "dspipe/dictionary.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dspipe {

namespace {

using nlohmann::json;

// true when `prefix` equals a whole-segment dotted prefix of `name`
bool dotted_prefix(const std::string& prefix, const std::string& name) {
    if (name.size() < prefix.size()) return false;
    if (name.compare(0, prefix.size(), prefix) != 0) return false;
    return name.size() == prefix.size() || name[prefix.size()] == '.';
}

} // namespace

std::string_view match_kind_name(MatchKind m) {
    switch (m) {
    case MatchKind::Exact: return "exact";
    case MatchKind::RootPrefix: return "root-prefix";
    case MatchKind::MethodSuffix: return "method-suffix";
    }
    return "?";
}

MatchKind match_kind_from_name(std::string_view name) {
    if (name == "exact") return MatchKind::Exact;
    if (name == "root-prefix") return MatchKind::RootPrefix;
    if (name == "method-suffix") return MatchKind::MethodSuffix;
    throw DictionaryError("unknown match kind: \"" + std::string(name) + "\"");
}

ApiDictionary::ApiDictionary(int version, std::vector<DictEntry> entries)
    : version_(version), entries_(std::move(entries)) {}

std::optional<Stage> ApiDictionary::lookup(const CallEvent& event) const {
    return lookup_name(event.resolved_name, event.method_name);
}

std::optional<Stage> ApiDictionary::lookup_name(const std::string& resolved_name,
                                                const std::string& method_name) const {
    const DictEntry* best_prefix = nullptr;
    const DictEntry* suffix = nullptr;
    for (const DictEntry& e : entries_) {
        switch (e.match) {
        case MatchKind::Exact:
            if (e.pattern == resolved_name) return e.stage;
            break;
        case MatchKind::RootPrefix:
            if (dotted_prefix(e.pattern, resolved_name)) {
                if (!best_prefix || e.pattern.size() > best_prefix->pattern.size()) {
                    best_prefix = &e;
                }
            }
            break;
        case MatchKind::MethodSuffix:
            if (!suffix && e.pattern == method_name) suffix = &e;
            break;
        }
    }
    if (best_prefix) return best_prefix->stage;
    if (suffix) return suffix->stage;
    return std::nullopt;
}

ApiDictionary dictionary_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DictionaryError(std::string("dictionary is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array()) {
        throw DictionaryError("dictionary must be an object with an \"entries\" array");
    }
    int version = 1;
    if (doc.contains("version")) {
        if (!doc["version"].is_number_integer()) {
            throw DictionaryError("\"version\" must be an integer");
        }
        version = doc["version"].get<int>();
    }
    std::vector<DictEntry> entries;
    std::set<std::pair<std::string, MatchKind>> seen;
    const json& arr = doc["entries"];
    for (size_t i = 0; i < arr.size(); ++i) {
        const std::string at = "entry " + std::to_string(i);
        const json& e = arr[i];
        if (!e.is_object()) throw DictionaryError(at + ": expected object");
        for (const char* key : {"pattern", "match", "stage"}) {
            if (!e.contains(key) || !e[key].is_string()) {
                throw DictionaryError(at + ": missing string field \"" + key + "\"");
            }
        }
        DictEntry entry;
        entry.pattern = e["pattern"].get<std::string>();
        try {
            entry.match = match_kind_from_name(e["match"].get<std::string>());
        } catch (const DictionaryError& err) {
            throw DictionaryError(at + ": " + err.what());
        }
        try {
            entry.stage = stage_from_code(e["stage"].get<std::string>());
        } catch (const UnknownStageError& err) {
            throw DictionaryError(at + ": " + err.what());
        }
        if (e.contains("note")) {
            if (!e["note"].is_string()) throw DictionaryError(at + ": \"note\" must be a string");
            entry.note = e["note"].get<std::string>();
        }
        if (entry.pattern.empty()) throw DictionaryError(at + ": empty pattern");
        if (entry.match == MatchKind::MethodSuffix &&
            entry.pattern.find('.') != std::string::npos) {
            throw DictionaryError(at + ": method-suffix pattern must be a single identifier");
        }
        if (!seen.insert({entry.pattern, entry.match}).second) {
            throw DictionaryError(at + ": duplicate (pattern, match) pair \"" +
                                  entry.pattern + "\"");
        }
        entries.push_back(std::move(entry));
    }
    return ApiDictionary(version, std::move(entries));
}

ApiDictionary load_dictionary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open dictionary: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return dictionary_from_json(out.str());
}

const ApiDictionary& seed_dictionary() {
    static const ApiDictionary dict = dictionary_from_json(seed_dictionary_json());
    return dict;
}

} // namespace dspipe
