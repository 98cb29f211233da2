#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace torcover {

/// Malformed complex text, ring token or generator spec.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    /// 1-based line of the offending input, 0 when not line oriented.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A computation was asked for outside the hypotheses under which it is defined,
/// e.g. the cohomological dimension of a Bestvina-Brady group for a non-flag complex.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string hypothesis, std::string message, std::string remedy = {})
        : std::runtime_error(std::move(message)), hypothesis_(std::move(hypothesis)), remedy_(std::move(remedy)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }
    const std::string& remedy() const noexcept { return remedy_; }

private:
    std::string hypothesis_;
    std::string remedy_;
};

} // namespace torcover
