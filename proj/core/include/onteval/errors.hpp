// errors.hpp : exception types shared across the toolkit
#ifndef ONTEVAL_ERRORS_HPP
#define ONTEVAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace onteval {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised by the parsers on the first malformed statement. Positions are
// 1-based; column counts bytes.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& reason)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + reason),
        line_(line), column_(column), reason_(reason) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string reason_;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

class PlanError : public Error {
 public:
  using Error::Error;
};

class CyclicGraphError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class FixpointOverflowError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

class EmptyReferenceError : public Error {
 public:
  using Error::Error;
};

class DuplicateDocIdError : public Error {
 public:
  using Error::Error;
};

// A projected query variable that never occurs in any pattern.
class UnboundProjectionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace onteval

#endif  // ONTEVAL_ERRORS_HPP
