#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fpp {

enum class ErrorKind {
    dimension,
    bounds,
    capacity,
    domain,
    unsupported,
    parse,
    validation,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind() when they
// need to distinguish (the CLI maps every kind to exit code 2).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace fpp
