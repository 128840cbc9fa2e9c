#pragma once

#include "lieco/cohomology.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lieco {

/// Line oriented algebra description:
///   # comment
///   algebra NAME
///   dim N
///   names A B C ...
///   bracket A B = c1 N1 + c2 N2 ...
/// Coefficients are rationals ("p/q"), integers, or decimals with at most
/// nine fraction digits. Throws ParseError with a line number.
LieAlgebra parse_algebra(std::istream& in);
LieAlgebra parse_algebra_text(const std::string& text);
LieAlgebra load_algebra_file(const std::string& path);

/// Canonical serialization: header, then one bracket line per nonzero
/// (i < j) pair in lexicographic order. parse(serialize(L)) == L.
std::string serialize_algebra(const LieAlgebra& L);

/// Cocycle companion file, entries against the algebra's basis names:
///   cocycle NAME
///   A B = c
CocycleMatrix parse_cocycle(std::istream& in, const LieAlgebra& L, std::string* name = nullptr);
CocycleMatrix parse_cocycle_text(const std::string& text, const LieAlgebra& L,
                                 std::string* name = nullptr);
CocycleMatrix load_cocycle_file(const std::string& path, const LieAlgebra& L,
                                std::string* name = nullptr);
std::string serialize_cocycle(const LieAlgebra& L, const CocycleMatrix& gamma,
                              const std::string& name);

/// Functional companion file:
///   functional NAME
///   c1 c2 ... cN
RatVec parse_functional_text(const std::string& text, int dim, std::string* name = nullptr);
std::string serialize_functional(const RatVec& l0, const std::string& name);

/// Version string stamped into every report.
const char* lieco_version();

using Json = nlohmann::ordered_json;

Json ratmat_json(const RatMat& m);
Json ratvec_json(const RatVec& v);

/// Deterministic double rendering used by every report ("%.17g").
std::string double_str(double v);
Json double_json(double v);

/// Report envelope shared by all CLI commands. Field order is fixed, floats
/// are rendered identically on every run, rationals appear as "p/q" strings.
class Report {
public:
  Report(std::string command, uint64_t seed, double tol);
  void add_input(const std::string& key, const std::string& value);
  Json& results() { return results_; }
  std::string to_json() const; // trailing newline included
  std::string to_text() const;

private:
  std::string command_;
  uint64_t seed_;
  double tol_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  Json results_;
};

} // namespace lieco
