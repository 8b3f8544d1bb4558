#ifndef DOXA_ERRORS_H_
#define DOXA_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace doxa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors raised while reading formula text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  // Raised from the constructor API, where there is no source position.
  explicit ParseError(const std::string& what)
      : Error(what), line_(0), column_(0) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(const std::string& what, int line, int column,
              std::vector<std::string> expected)
      : ParseError(what, line, column), expected_(std::move(expected)) {}

  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

// An explicit-belief operator applied to a formula that mentions implicit
// belief.
class StratificationError : public ParseError {
 public:
  using ParseError::ParseError;
};

class AgentRangeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class NotL0Error : public Error {
 public:
  using Error::Error;
};

class UnknownWorld : public Error {
 public:
  using Error::Error;
};

class UnknownState : public Error {
 public:
  using Error::Error;
};

// A model handed to a transformation is outside the class it requires
// (C1, C1*, C2).
class ConditionViolation : public Error {
 public:
  using Error::Error;
};

class NotConsistent : public Error {
 public:
  using Error::Error;
};

class NotSerial : public Error {
 public:
  using Error::Error;
};

class SigmaNotClosed : public Error {
 public:
  using Error::Error;
};

// The tableau exceeded its node budget. Not a verdict.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class ModelFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace doxa

#endif  // DOXA_ERRORS_H_
