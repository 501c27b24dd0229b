#pragma once

#include <stdexcept>
#include <string>

namespace dppcore {

enum class ErrorKind {
  precondition,
  parse,
  arity,
  dimension,
  bandwidth,
  fit,
  instability,
  domain,
  rank,
  admissibility,
  cardinality,
  stratification,
  shape,
  invalid_kernel,
  io,
  usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Error carrying the 1-based line number of the offending input row.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, long line, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ": " + what), line_(line) {}

  long line() const noexcept { return line_; }

 private:
  long line_;
};

/// Reports which column of a design matrix broke the rank condition.
class RankError : public Error {
 public:
  RankError(long column, const std::string& what)
      : Error(ErrorKind::rank, what), column_(column) {}

  long column() const noexcept { return column_; }

 private:
  long column_;
};

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace dppcore
