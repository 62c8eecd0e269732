#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cognum {

/// Base for every error raised by an engine operation. `name()` is the stable
/// identifier printed by the command line front-end (e.g. "Contradiction").
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Raised by the scenario loader for malformed or inconsistent input files.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cognum
