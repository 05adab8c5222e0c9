#pragma once

#include <stdexcept>
#include <string>

namespace vl {

// Each kind maps to its own CLI exit code (see tools/vlcheck.cpp).
enum class ErrorKind {
  parse,
  invalid_structure,
  unsupported,
  non_split,
  catalog_gap,
  degree_overflow,
  dimension_mismatch,
  singular,
  arithmetic_overflow,
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
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(ErrorKind::parse, source + ":" + std::to_string(line) + ": " + what) {}
};

class InvalidStructure : public Error {
 public:
  explicit InvalidStructure(const std::string& what) : Error(ErrorKind::invalid_structure, what) {}
};

class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error(ErrorKind::unsupported, what) {}
};

class NonSplit : public Error {
 public:
  explicit NonSplit(const std::string& what) : Error(ErrorKind::non_split, what) {}
};

class CatalogGap : public Error {
 public:
  explicit CatalogGap(const std::string& what) : Error(ErrorKind::catalog_gap, what) {}
};

class DegreeOverflow : public Error {
 public:
  explicit DegreeOverflow(const std::string& what) : Error(ErrorKind::degree_overflow, what) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(ErrorKind::dimension_mismatch, what) {}
};

class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(const std::string& what) : Error(ErrorKind::singular, what) {}
};

class ArithmeticOverflow : public Error {
 public:
  explicit ArithmeticOverflow(const std::string& what) : Error(ErrorKind::arithmetic_overflow, what) {}
};

}  // namespace vl
