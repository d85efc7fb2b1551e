#pragma once

#include <stdexcept>
#include <string>

namespace grec {

/// Failure classes. The CLI maps each one to a fixed exit code.
enum class ErrorKind {
  parse,       // malformed or unresolvable input document
  validation,  // structurally invalid group, action, family, set or argument
  size_limit,  // request exceeds a documented enumeration or solver bound
  domain,      // operation precondition on the mathematical input (e.g. A not in F)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& what) : Error(ErrorKind::size_limit, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

}  // namespace grec
