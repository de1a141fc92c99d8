#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sig {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list or spectrum text. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An operation was called outside its domain: disconnected input where a
// connected graph is required, a non-chordal graph, s or p below 2, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace sig
