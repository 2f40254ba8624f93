#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autorake {

/// Base class for every error raised by the library. The CLI maps these
/// to exit code 2 (data error), except ConfigError which is a usage error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Source path missing, unreadable, or yielding no documents.
class IngestionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside a function's mathematical domain (negative cf, df = 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

class FitError : public Error {
 public:
  using Error::Error;
};

/// Two inputs disagree, e.g. a model built for a different document count.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Malformed line in a text file we parse (stoplists, CSV).
class FormatError : public Error {
 public:
  FormatError(const std::string& path, std::size_t line, const std::string& what)
      : Error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace autorake
