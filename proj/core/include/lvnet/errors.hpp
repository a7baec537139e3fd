#pragma once

#include <stdexcept>
#include <string>

namespace lvnet {

/// Broad failure class; the CLI maps each to its own exit code.
enum class ErrorKind { validation, numeric, io };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::validation, what) {}
};

// Numeric failures.

class NotPositiveDefinite : public Error {
 public:
  explicit NotPositiveDefinite(const std::string& what)
      : Error(ErrorKind::numeric, "not positive definite: " + what) {}
};

class NegativeEigenvalue : public Error {
 public:
  explicit NegativeEigenvalue(const std::string& what)
      : Error(ErrorKind::numeric, "negative eigenvalue: " + what) {}
};

class RankDeficient : public Error {
 public:
  explicit RankDeficient(const std::string& what)
      : Error(ErrorKind::numeric, "rank deficient: " + what) {}
};

class DegenerateCorrelation : public Error {
 public:
  explicit DegenerateCorrelation(const std::string& what)
      : Error(ErrorKind::numeric, "degenerate correlation: " + what) {}
};

class TooFewRows : public Error {
 public:
  explicit TooFewRows(const std::string& what)
      : Error(ErrorKind::validation, "too few rows: " + what) {}
};

class ZeroLoading : public Error {
 public:
  explicit ZeroLoading(const std::string& what)
      : Error(ErrorKind::validation, "zero loading: " + what) {}
};

// Input file failures.

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t col)
      : Error(ErrorKind::validation, what), row_(row), col_(col) {}
  /// 1-based line number in the file and 1-based column.
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class RaggedRows : public Error {
 public:
  explicit RaggedRows(const std::string& what)
      : Error(ErrorKind::validation, "ragged rows: " + what) {}
};

class EmptyFile : public Error {
 public:
  explicit EmptyFile(const std::string& what)
      : Error(ErrorKind::validation, "empty file: " + what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what)
      : Error(ErrorKind::io, "i/o error: " + what) {}
};

}  // namespace lvnet
