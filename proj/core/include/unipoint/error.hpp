#pragma once

#include <stdexcept>
#include <string>

namespace unipoint {

// Error categories map onto the CLI exit-code contract:
// input -> 1, degenerate -> 2, unsupported -> 3.
enum class ErrorKind { input, degenerate, unsupported, internal };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int column)
      : Error(ErrorKind::input, what + " (line " + std::to_string(line) +
                                    ", column " + std::to_string(column) + ")"),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

}  // namespace unipoint
