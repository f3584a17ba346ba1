#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace edgedim {

// Base error. `name()` is the stable machine-readable identifier used in CLI
// diagnostics and exit reporting; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Parameters violate a constructor's constraints (GP n/k range, family n range).
struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& m) : Error("InvalidSpec", m) {}
};

// Malformed edge-list input.
struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("ParseError", m) {}
};

struct SelfLoop : Error {
    explicit SelfLoop(const std::string& m) : Error("SelfLoop", m) {}
};

struct DuplicateEdge : Error {
    explicit DuplicateEdge(const std::string& m) : Error("DuplicateEdge", m) {}
};

// Graphs are connected by construction; anything else is rejected here.
struct Disconnected : Error {
    explicit Disconnected(const std::string& m) : Error("Disconnected", m) {}
};

// Input too small for the requested derived structure (line graph of < 2 edges).
struct TooSmall : Error {
    explicit TooSmall(const std::string& m) : Error("TooSmall", m) {}
};

// (n, k) outside the range any closed form covers.
struct OutOfScope : Error {
    explicit OutOfScope(const std::string& m) : Error("OutOfScope", m) {}
};

// Exhaustive search hit the cardinality cap without finding a generator.
struct CardinalityCapExceeded : Error {
    explicit CardinalityCapExceeded(const std::string& m)
        : Error("CardinalityCapExceeded", m) {}
};

// A formula-cell lookup matched zero or several cells. The cell ranges are
// meant to partition every index set exactly, so this firing means the
// transcription itself is inconsistent.
struct InternalCoverageError : Error {
    explicit InternalCoverageError(const std::string& m)
        : Error("InternalCoverageError", m) {}
};

}  // namespace edgedim
