#pragma once

#include <stdexcept>
#include <string>

namespace dspipe {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A stage code that is not part of the closed vocabulary.
struct UnknownStageError : Error {
    explicit UnknownStageError(const std::string& what) : Error(what) {}
};

// Feedback-edge query on a stage without a canonical position (VIS, GEN).
struct UnorderedStageError : Error {
    explicit UnorderedStageError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

// Notebook JSON that does not follow the nbformat-4 shape; the message
// carries the JSON path of the offending element.
struct NotebookFormatError : Error {
    explicit NotebookFormatError(const std::string& what) : Error(what) {}
};

// Python source that does not lex/parse.
struct SyntaxError : Error {
    SyntaxError(const std::string& what, int line) : Error(what), line(line) {}
    int line;
};

// Dictionary file violating the schema (duplicate entries, bad match kind, ...).
struct DictionaryError : Error {
    explicit DictionaryError(const std::string& what) : Error(what) {}
};

// Invalid arguments to an analysis operation (empty corpus, length mismatch, ...).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

} // namespace dspipe
