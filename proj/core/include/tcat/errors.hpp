#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dangling ids, missing table entries, lookups of cells that do not exist.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// An operation was called on data that does not satisfy its preconditions.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search exceeded its configured bound.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t found_so_far)
      : Error(what), found_(found_so_far) {}
  std::size_t found_so_far() const noexcept { return found_; }

 private:
  std::size_t found_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace tcat
