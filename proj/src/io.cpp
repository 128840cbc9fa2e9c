#include "lieco/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace lieco {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (size_t hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool looks_like_number(const std::string& tok) {
  try {
    rat_parse(tok);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

/// Reads "c1 N1 + c2 N2 - 3 N4" into per-basis coefficients. Coefficients
/// default to 1; "-" flips the sign of the following term; "0" alone is the
/// zero bracket.
RatVec parse_terms(const std::vector<std::string>& toks, size_t start, const LieAlgebra& L,
                   int lineno) {
  RatVec coeffs(L.dim(), Rat(0));
  if (toks.size() == start + 1 && toks[start] == "0") return coeffs;
  Rat sign(1);
  size_t i = start;
  while (i < toks.size()) {
    const std::string& tok = toks[i];
    if (tok == "+") {
      ++i;
      continue;
    }
    if (tok == "-") {
      sign = -sign;
      ++i;
      continue;
    }
    Rat coeff = sign;
    std::string basis = tok;
    if (looks_like_number(tok)) {
      coeff = sign * rat_parse(tok);
      if (++i >= toks.size())
        throw ParseError(lineno, "coefficient without a basis name");
      basis = toks[i];
      if (looks_like_number(basis))
        throw ParseError(lineno, "expected a basis name after '" + tok + "'");
    }
    int k;
    try {
      k = L.index_of(basis);
    } catch (const UnknownName&) {
      throw ParseError(lineno, "unknown basis name '" + basis + "'");
    }
    coeffs[k] += coeff;
    sign = Rat(1);
    ++i;
  }
  return coeffs;
}

} // namespace

LieAlgebra parse_algebra(std::istream& in) {
  std::string algebra_name;
  int declared_dim = -1;
  std::vector<std::string> names;
  LieAlgebra L;
  bool have_names = false;
  struct PendingBracket {
    int lineno;
    std::vector<std::string> toks;
  };
  std::vector<PendingBracket> brackets;

  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::vector<std::string> toks = split_ws(line);
    const std::string& key = toks[0];
    if (key == "algebra") {
      if (toks.size() != 2) throw ParseError(lineno, "expected: algebra NAME");
      algebra_name = toks[1];
    } else if (key == "dim") {
      if (toks.size() != 2) throw ParseError(lineno, "expected: dim N");
      try {
        declared_dim = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "dim is not an integer");
      }
      if (declared_dim <= 0) throw ParseError(lineno, "dim must be positive");
    } else if (key == "names") {
      names.assign(toks.begin() + 1, toks.end());
      have_names = true;
    } else if (key == "bracket") {
      brackets.push_back({lineno, toks});
    } else {
      throw ParseError(lineno, "unrecognized directive '" + key + "'");
    }
  }

  if (algebra_name.empty()) throw ParseError(lineno, "missing 'algebra NAME' line");
  if (declared_dim < 0) throw ParseError(lineno, "missing 'dim N' line");
  if (!have_names) throw ParseError(lineno, "missing 'names ...' line");
  if (int(names.size()) != declared_dim)
    throw ParseError(lineno, "names count " + std::to_string(names.size()) +
                                 " does not match dim " + std::to_string(declared_dim));
  for (const std::string& n : names)
    if (looks_like_number(n))
      throw ParseError(lineno, "basis name '" + n + "' would be ambiguous in bracket lines");

  L = LieAlgebra(algebra_name, names);
  std::set<std::pair<int, int>> seen_pairs;
  for (const PendingBracket& pb : brackets) {
    const std::vector<std::string>& toks = pb.toks;
    if (toks.size() < 5 || toks[3] != "=")
      throw ParseError(pb.lineno, "expected: bracket A B = terms");
    int i, j;
    try {
      i = L.index_of(toks[1]);
      j = L.index_of(toks[2]);
    } catch (const UnknownName& e) {
      throw ParseError(pb.lineno, e.what());
    }
    if (i == j) throw ParseError(pb.lineno, "bracket of a basis vector with itself");
    if (!seen_pairs.insert({std::min(i, j), std::max(i, j)}).second)
      throw ParseError(pb.lineno, "duplicate bracket for this pair");
    RatVec coeffs = parse_terms(toks, 4, L, pb.lineno);
    try {
      L.set_bracket(i, j, coeffs);
    } catch (const Error& e) {
      throw ParseError(pb.lineno, e.what());
    }
  }
  return L;
}

LieAlgebra parse_algebra_text(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

LieAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open algebra file '" + path + "'");
  return parse_algebra(in);
}

std::string serialize_algebra(const LieAlgebra& L) {
  std::ostringstream out;
  out << "algebra " << L.name() << "\n";
  out << "dim " << L.dim() << "\n";
  out << "names";
  for (const std::string& n : L.basis_names()) out << " " << n;
  out << "\n";
  for (auto [i, j] : L.nonzero_pairs()) {
    out << "bracket " << L.basis_names()[i] << " " << L.basis_names()[j] << " =";
    bool first = true;
    for (int k = 0; k < L.dim(); ++k) {
      Rat ck = L.c(i, j, k);
      if (ck == 0) continue;
      out << (first ? " " : " + ") << rat_str(ck) << " " << L.basis_names()[k];
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

CocycleMatrix parse_cocycle(std::istream& in, const LieAlgebra& L, std::string* name) {
  const int n = L.dim();
  CocycleMatrix gamma(n, n);
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  bool have_header = false;

  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;
    std::vector<std::string> toks = split_ws(line);
    if (toks[0] == "cocycle") {
      if (toks.size() != 2) throw ParseError(lineno, "expected: cocycle NAME");
      if (name) *name = toks[1];
      have_header = true;
      continue;
    }
    if (toks.size() != 4 || toks[2] != "=")
      throw ParseError(lineno, "expected: A B = value");
    int i, j;
    try {
      i = L.index_of(toks[0]);
      j = L.index_of(toks[1]);
    } catch (const UnknownName& e) {
      throw ParseError(lineno, e.what());
    }
    if (i == j) throw ParseError(lineno, "diagonal cocycle entry must be zero");
    Rat v;
    try {
      v = rat_parse(toks[3]);
    } catch (const std::invalid_argument&) {
      throw ParseError(lineno, "bad rational '" + toks[3] + "'");
    }
    if (seen[i][j]) throw ParseError(lineno, "duplicate entry for this pair");
    gamma.at(i, j) = v;
    gamma.at(j, i) = -v;
    seen[i][j] = seen[j][i] = true;
  }
  if (!have_header) throw ParseError(lineno, "missing 'cocycle NAME' line");
  return gamma;
}

CocycleMatrix parse_cocycle_text(const std::string& text, const LieAlgebra& L, std::string* name) {
  std::istringstream in(text);
  return parse_cocycle(in, L, name);
}

CocycleMatrix load_cocycle_file(const std::string& path, const LieAlgebra& L, std::string* name) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open cocycle file '" + path + "'");
  return parse_cocycle(in, L, name);
}

std::string serialize_cocycle(const LieAlgebra& L, const CocycleMatrix& gamma,
                              const std::string& name) {
  std::ostringstream out;
  out << "cocycle " << name << "\n";
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j)
      if (gamma.at(i, j) != 0)
        out << L.basis_names()[i] << " " << L.basis_names()[j] << " = " << rat_str(gamma.at(i, j))
            << "\n";
  return out.str();
}

RatVec parse_functional_text(const std::string& text, int dim, std::string* name) {
  std::istringstream in(text);
  bool have_header = false;
  RatVec values;
  bool have_values = false;
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty()) continue;
    if (!have_header) {
      std::vector<std::string> toks = split_ws(line);
      if (toks.size() != 2 || toks[0] != "functional")
        throw ParseError(lineno, "expected: functional NAME");
      if (name) *name = toks[1];
      have_header = true;
      continue;
    }
    if (have_values) throw ParseError(lineno, "more than one component line");
    try {
      values = ratvec_parse_csv(line);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    have_values = true;
  }
  if (!have_header) throw ParseError(lineno, "missing 'functional NAME' line");
  if (!have_values) throw ParseError(lineno, "missing component line");
  if (int(values.size()) != dim)
    throw ParseError(lineno, "expected " + std::to_string(dim) + " components, got " +
                                 std::to_string(values.size()));
  return values;
}

std::string serialize_functional(const RatVec& l0, const std::string& name) {
  std::ostringstream out;
  out << "functional " << name << "\n";
  for (size_t i = 0; i < l0.size(); ++i) out << (i ? ", " : "") << rat_str(l0[i]);
  out << "\n";
  return out.str();
}

Json ratmat_json(const RatMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_str(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json ratvec_json(const RatVec& v) {
  Json out = Json::array();
  for (const Rat& r : v) out.push_back(rat_str(r));
  return out;
}

std::string double_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json double_json(double v) {
  if (!std::isfinite(v)) return double_str(v);
  return v;
}

const char* lieco_version() { return "0.1.0"; }

Report::Report(std::string command, uint64_t seed, double tol)
    : command_(std::move(command)), seed_(seed), tol_(tol), results_(Json::object()) {}

void Report::add_input(const std::string& key, const std::string& value) {
  inputs_.emplace_back(key, value);
}

std::string Report::to_json() const {
  Json j;
  j["command"] = command_;
  j["version"] = lieco_version();
  j["seed"] = seed_;
  j["tol"] = double_json(tol_);
  Json inputs = Json::object();
  for (const auto& [k, v] : inputs_) inputs[k] = v;
  j["inputs"] = inputs;
  j["results"] = results_;
  return j.dump(2) + "\n";
}

namespace {

void render_text(const Json& j, int indent, std::ostream& out) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array()))) {
        out << pad << k << ":\n";
        render_text(v, indent + 2, out);
      } else if (v.is_array()) {
        out << pad << k << ": " << v.dump() << "\n";
      } else if (v.is_string()) {
        out << pad << k << ": " << v.get<std::string>() << "\n";
      } else {
        out << pad << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_object() || v.is_array()) {
        out << pad << "-\n";
        render_text(v, indent + 2, out);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

} // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command_ << "\n";
  out << "version: " << lieco_version() << "\n";
  out << "seed: " << seed_ << "\n";
  out << "tol: " << double_str(tol_) << "\n";
  for (const auto& [k, v] : inputs_) out << k << ": " << v << "\n";
  render_text(results_, 0, out);
  return out.str();
}

} // namespace lieco
