#pragma once

#include <stdexcept>
#include <string>

namespace canred {

/// Raised when a caller passes data outside an operation's domain
/// (unknown Lie type, index not in t(P), non-dominant slope datum, ...).
/// The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace canred
