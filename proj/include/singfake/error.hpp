#pragma once

#include <stdexcept>
#include <string>

namespace singfake {

enum class ErrorKind {
    format,       // malformed file contents
    unsupported,  // recognized but not handled (codec, bit depth, ...)
    io,           // filesystem / OS level failure
    length,       // input too short / truncated payload
    config,       // invalid configuration value or key
    parse,        // unparsable text input
    integrity,    // duplicate ids, inconsistent records
    annotation,   // missing or unusable beat annotation
    lookup,       // id not found where required
    alignment,    // no feasible downbeat alignment
    rate,         // sample-rate mismatch
    shape,        // tensor shape mismatch
    numeric,      // NaN/Inf or other numeric failure
    domain,       // precondition violation on values
    data,         // dataset-level problem (single-class set, ...)
    metric,       // metric undefined for the given input
    input,        // required model input missing
    internal,     // invariant broken inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace singfake
