#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypernest {

/// Error raised while reading a textual input (reaction DSL, canonical
/// documents, chemical-system documents). Carries a 1-based line/column
/// position; what() is prefixed with "line:column: ".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace hypernest
