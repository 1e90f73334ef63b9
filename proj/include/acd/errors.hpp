#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acd {

// Base for all toolkit errors so callers can catch one type at the CLI edge.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingFile : Error {
    explicit MissingFile(const std::string& path)
        : Error("missing file: " + path), path(path) {}
    std::string path;
};

struct MalformedRow : Error {
    MalformedRow(std::size_t line, const std::string& why)
        : Error("malformed row at line " + std::to_string(line) + ": " + why),
          line(line) {}
    std::size_t line;
};

struct UnknownLabel : Error {
    UnknownLabel(std::size_t line, const std::string& token)
        : Error("unknown label '" + token + "' at line " + std::to_string(line)),
          line(line), token(token) {}
    std::size_t line;
    std::string token;
};

struct EmptyCorpus : Error {
    EmptyCorpus() : Error("corpus is empty") {}
};

struct BadFractions : Error {
    explicit BadFractions(double sum)
        : Error("class fractions sum to " + std::to_string(sum) + ", expected 1"),
          sum(sum) {}
    double sum;
};

struct TooSmall : Error {
    explicit TooSmall(const std::string& why) : Error(why) {}
};

struct MissingTargetClass : Error {
    explicit MissingTargetClass(const std::string& label)
        : Error("target class '" + label + "' absent from corpus"), label(label) {}
    std::string label;
};

struct ClassTooSmall : Error {
    explicit ClassTooSmall(const std::string& label)
        : Error("class '" + label + "' has fewer than 2 members, cannot synthesize"),
          label(label) {}
    std::string label;
};

struct NonFiniteEmbedding : Error {
    explicit NonFiniteEmbedding(std::size_t row)
        : Error("non-finite embedding at row " + std::to_string(row)), row(row) {}
    std::size_t row;
};

struct BackendUnavailable : Error {
    explicit BackendUnavailable(const std::string& why) : Error(why) {}
};

struct EmbeddingDimMismatch : Error {
    EmbeddingDimMismatch(std::size_t declared, std::size_t got)
        : Error("backend declared dim " + std::to_string(declared) +
                " but produced " + std::to_string(got)) {}
};

struct SingleClassTraining : Error {
    SingleClassTraining() : Error("training data contains a single class") {}
};

struct DimMismatch : Error {
    DimMismatch(std::size_t expected, std::size_t got)
        : Error("embedding dim " + std::to_string(got) + ", expected " +
                std::to_string(expected)) {}
};

struct FoldsExceedClassCount : Error {
    explicit FoldsExceedClassCount(const std::string& why) : Error(why) {}
};

struct EmptyGrid : Error {
    EmptyGrid() : Error("hyperparameter grid is empty") {}
};

struct EmptyHistory : Error {
    EmptyHistory() : Error("training history is empty") {}
};

struct VocabMismatch : Error {
    explicit VocabMismatch(const std::string& why) : Error(why) {}
};

struct EmptyDev : Error {
    EmptyDev() : Error("dev corpus is empty") {}
};

struct EncoderUnresolvable : Error {
    explicit EncoderUnresolvable(const std::string& id)
        : Error("cannot resolve encoder '" + id + "'"), id(id) {}
    std::string id;
};

struct LengthMismatch : Error {
    LengthMismatch(std::size_t a, std::size_t b)
        : Error("gold/pred length mismatch: " + std::to_string(a) + " vs " +
                std::to_string(b)) {}
};

struct EmptyMatrix : Error {
    EmptyMatrix() : Error("confusion matrix has no observations") {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& field, const std::string& why)
        : Error("config field '" + field + "': " + why), field(field) {}
    std::string field;
};

struct FingerprintMismatch : Error {
    explicit FingerprintMismatch(const std::string& why) : Error(why) {}
};

struct SerializeError : Error {
    explicit SerializeError(const std::string& why) : Error(why) {}
};

}  // namespace acd
