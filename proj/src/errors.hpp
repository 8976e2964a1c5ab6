#pragma once

#include <stdexcept>
#include <string>

namespace clsnet {

enum class ErrorCode {
    InvalidArgument,
    Singular,
    Numeric,
    Parse,
    Io,
    Resource,
    Unsupported,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_input(const std::string& message) {
    throw Error(ErrorCode::InvalidArgument, message);
}

[[noreturn]] inline void throw_singular(const std::string& message) {
    throw Error(ErrorCode::Singular, message);
}

[[noreturn]] inline void throw_numeric(const std::string& message) {
    throw Error(ErrorCode::Numeric, message);
}

[[noreturn]] inline void throw_parse(const std::string& message) {
    throw Error(ErrorCode::Parse, message);
}

[[noreturn]] inline void throw_io(const std::string& message) {
    throw Error(ErrorCode::Io, message);
}

[[noreturn]] inline void throw_resource(const std::string& message) {
    throw Error(ErrorCode::Resource, message);
}

} // namespace clsnet
