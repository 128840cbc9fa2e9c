#pragma once

#include <stdexcept>
#include <string>

namespace lieco {

/// Base class of all domain errors thrown by the library.
/// `kind()` is stable and machine-readable; `what()` is for humans.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

struct NotAntisymmetric : Error {
  explicit NotAntisymmetric(const std::string& msg) : Error("NotAntisymmetric", msg) {}
};

struct NotClosed : Error {
  explicit NotClosed(const std::string& msg) : Error("NotClosed", msg) {}
};

struct NotACoboundary : Error {
  explicit NotACoboundary(const std::string& msg) : Error("NotACoboundary", msg) {}
};

struct NotASubalgebra : Error {
  explicit NotASubalgebra(const std::string& msg) : Error("NotASubalgebra", msg) {}
};

// A cocycle entry scales like a negative power of the contraction parameter.
struct DivergenceError : Error {
  explicit DivergenceError(const std::string& msg) : Error("DivergenceError", msg) {}
};

// Group coordinates left the chart where the realization is well defined.
struct ChartOverflow : Error {
  explicit ChartOverflow(const std::string& msg) : Error("ChartOverflow", msg) {}
};

struct UnsupportedDegree : Error {
  explicit UnsupportedDegree(const std::string& msg) : Error("UnsupportedDegree", msg) {}
};

struct CatalogSelfTestFailure : Error {
  explicit CatalogSelfTestFailure(const std::string& msg) : Error("CatalogSelfTestFailure", msg) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& msg) : Error("UnknownName", msg) {}
};

struct ParseError : Error {
  ParseError(int line, const std::string& msg)
      : Error("ParseError", "line " + std::to_string(line) + ": " + msg), line(line) {}
  int line;
};

} // namespace lieco
