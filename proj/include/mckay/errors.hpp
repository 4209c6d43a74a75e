#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorKind {
    Parse = 2,     // malformed input (spec files, table files, matrix files)
    Semantic = 3,  // well-formed input that violates a precondition
    Numeric = 4,   // iteration budget exhausted, ambiguous numerical rank
    Internal = 5,  // an invariant the theory guarantees failed to hold
};

class McKayError : public std::runtime_error {
public:
    McKayError(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

inline McKayError parse_error(const std::string& msg) { return {ErrorKind::Parse, msg}; }
inline McKayError semantic_error(const std::string& msg) { return {ErrorKind::Semantic, msg}; }
inline McKayError numeric_error(const std::string& msg) { return {ErrorKind::Numeric, msg}; }
inline McKayError internal_error(const std::string& msg) { return {ErrorKind::Internal, msg}; }

}  // namespace mckay
