// lieco: cohomology, extensions, presymplectic forms, and orbit decisions
// for the compiled-in group catalog and user supplied algebra files.

#include "lieco/algebra.hpp"
#include "lieco/cohomology.hpp"
#include "lieco/group.hpp"
#include "lieco/io.hpp"
#include "lieco/orbit.hpp"
#include "lieco/symplectic.hpp"

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

using namespace lieco;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1; // a check ran and the verdict is no
constexpr int kExitInput = 2;    // the input could not be used

struct Opts {
  std::string algebra;
  std::string cocycle_file;
  std::string l0_csv, l0b_csv, mu_csv, nu_csv, witness_csv;
  std::string xi_name;
  std::string sub_names;
  std::string format = "text";
  double tol = 1e-8;
  uint64_t seed = 42;
  int samples = 1000;
  int restarts = 32;
  int budget = 2000;
  int scale = 1;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

RatVec parse_rat_csv(const std::string& text, int dim, const std::string& flag) {
  std::vector<std::string> parts = split_csv(text);
  if (int(parts.size()) != dim)
    throw DimensionMismatch(flag + " has " + std::to_string(parts.size()) +
                            " components, the algebra has dimension " + std::to_string(dim));
  RatVec v(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) v[i] = rat_parse(parts[i]);
  return v;
}

Vec parse_double_csv(const std::string& text, int dim, const std::string& flag) {
  std::vector<std::string> parts = split_csv(text);
  if (int(parts.size()) != dim)
    throw DimensionMismatch(flag + " has " + std::to_string(parts.size()) +
                            " components, the algebra has dimension " + std::to_string(dim));
  Vec v(Eigen::Index(parts.size()));
  for (size_t i = 0; i < parts.size(); ++i) {
    size_t used = 0;
    double d = std::stod(parts[i], &used);
    if (used != parts[i].size()) throw ParseError(1, flag + ": bad number '" + parts[i] + "'");
    v[Eigen::Index(i)] = d;
  }
  return v;
}

LieAlgebra resolve_algebra(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_algebra_file(arg);
  if (auto g = catalog_find(arg)) return g->algebra;
  throw UnknownName("'" + arg + "' is neither a readable file nor a catalog algebra");
}

std::shared_ptr<const GroupRealization> resolve_realization(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    LieAlgebra from_file = load_algebra_file(arg);
    for (const auto& g : catalog())
      if (g->algebra.dim() == from_file.dim() && g->algebra.same_table(from_file)) return g;
    throw UnknownName("no catalog group realization has the structure constants of " + arg);
  }
  if (auto g = catalog_find(arg)) return g;
  throw UnknownName("'" + arg + "' is neither a readable file nor a catalog realization");
}

const RealizationCocycle* resolve_xi(const GroupRealization& G, const std::string& name) {
  if (name.empty()) return nullptr;
  return &G.cocycle(name); // throws UnknownName for a bad name
}

Json text_lines(const std::string& text) {
  Json lines = Json::array();
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

Json cocycle_entries(const LieAlgebra& L, const CocycleMatrix& gamma) {
  Json entries = Json::array();
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j)
      if (gamma.at(i, j) != 0)
        entries.push_back(L.basis_names()[i] + " " + L.basis_names()[j] + " = " +
                          rat_str(gamma.at(i, j)));
  return entries;
}

Json verdict_json(const OrbitVerdict& v) {
  Json r;
  r["status"] = to_string(v.status);
  r["residual"] = double_json(v.residual);
  if (v.witness) {
    Json w = Json::array();
    for (Eigen::Index i = 0; i < v.witness->size(); ++i) w.push_back(double_json((*v.witness)[i]));
    r["witness"] = w;
  }
  if (!v.separating_invariant.empty()) r["separating_invariant"] = v.separating_invariant;
  if (!v.note.empty()) r["note"] = v.note;
  return r;
}

int emit(const Report& rep, const Opts& o, int code) {
  std::cout << (o.format == "json" ? rep.to_json() : rep.to_text());
  return code;
}

SearchParams search_params(const Opts& o) {
  SearchParams p;
  p.tol = o.tol;
  p.seed = o.seed;
  p.restarts = o.restarts;
  p.budget = o.budget;
  return p;
}

int cmd_validate(const Opts& o) {
  LieAlgebra L = resolve_algebra(o.algebra);
  Report rep("validate", o.seed, o.tol);
  rep.add_input("algebra", o.algebra);
  ValidationReport vr = validate_algebra(L);
  rep.results()["name"] = L.name();
  rep.results()["dim"] = L.dim();
  rep.results()["ok"] = vr.ok;
  Json issues = Json::array();
  for (const ValidationIssue& issue : vr.issues) {
    Json one;
    one["kind"] = issue.kind;
    auto [i, j, k] = issue.triple;
    one["triple"] = Json::array(
        {L.basis_names()[i], L.basis_names()[j], L.basis_names()[k]});
    one["residual"] = ratvec_json(issue.residual);
    one["message"] = issue.message;
    issues.push_back(one);
  }
  rep.results()["issues"] = issues;
  // a table that is not a Lie algebra is unusable input, not a failed check
  return emit(rep, o, vr.ok ? kExitOk : kExitInput);
}

int cmd_h2(const Opts& o) {
  LieAlgebra L = resolve_algebra(o.algebra);
  Report rep("h2", o.seed, o.tol);
  rep.add_input("algebra", o.algebra);
  H2Report h2 = h2_report(L);
  rep.results()["name"] = L.name();
  rep.results()["z2"] = h2.z2_dim;
  rep.results()["b2"] = h2.b2_dim;
  rep.results()["h2"] = h2.h2_dim;
  Json z2 = Json::array();
  for (const CocycleMatrix& g : h2.z2_basis) z2.push_back(cocycle_entries(L, g));
  rep.results()["z2_basis"] = z2;
  Json b2 = Json::array();
  for (const CocycleMatrix& g : h2.b2_basis) b2.push_back(cocycle_entries(L, g));
  rep.results()["b2_basis"] = b2;
  return emit(rep, o, kExitOk);
}

int cmd_extend(const Opts& o) {
  LieAlgebra L = resolve_algebra(o.algebra);
  CocycleMatrix gamma = load_cocycle_file(o.cocycle_file, L);
  Report rep("extend", o.seed, o.tol);
  rep.add_input("algebra", o.algebra);
  rep.add_input("cocycle", o.cocycle_file);
  CentralExtension ext = central_extension(L, gamma);
  rep.results()["base"] = L.name();
  rep.results()["central"] = ext.extended.basis_names().back();
  rep.results()["gamma"] = cocycle_entries(L, ext.gamma);
  rep.results()["extended"] = text_lines(serialize_algebra(ext.extended));
  return emit(rep, o, kExitOk);
}

int cmd_pseudo_extend(const Opts& o) {
  LieAlgebra L = resolve_algebra(o.algebra);
  RatVec l0 = parse_rat_csv(o.l0_csv, L.dim(), "--l0");
  Report rep("pseudo-extend", o.seed, o.tol);
  rep.add_input("algebra", o.algebra);
  rep.add_input("l0", o.l0_csv);
  CentralExtension ext = pseudo_extension(L, l0);
  rep.results()["base"] = L.name();
  rep.results()["central"] = ext.extended.basis_names().back();
  rep.results()["gamma"] = cocycle_entries(L, ext.gamma);
  rep.results()["extended"] = text_lines(serialize_algebra(ext.extended));
  return emit(rep, o, kExitOk);
}

int cmd_trivialize(const Opts& o) {
  LieAlgebra L = resolve_algebra(o.algebra);
  CocycleMatrix gamma = load_cocycle_file(o.cocycle_file, L);
  Report rep("trivialize", o.seed, o.tol);
  rep.add_input("algebra", o.algebra);
  rep.add_input("cocycle", o.cocycle_file);
  require_two_cocycle(L, gamma);
  DecomposeResult dec = h2_decompose(L, gamma);
  rep.results()["trivial"] = dec.trivial;
  if (dec.trivial) {
    rep.results()["mu"] = ratvec_json(*dec.mu);
    CentralExtension ext = central_extension(L, gamma);
    rep.results()["basis_change"] = ratmat_json(trivialize_pseudo_extension(L, ext));
    return emit(rep, o, kExitOk);
  }
  rep.results()["representative"] = cocycle_entries(L, dec.representative);
  return emit(rep, o, kExitNegative);
}

int cmd_omega(const Opts& o) {
  LieAlgebra L = resolve_algebra(o.algebra);
  RatVec l0 = parse_rat_csv(o.l0_csv, L.dim(), "--l0");
  std::optional<CocycleMatrix> gamma;
  Report rep("omega", o.seed, o.tol);
  rep.add_input("algebra", o.algebra);
  rep.add_input("l0", o.l0_csv);
  if (!o.cocycle_file.empty()) {
    gamma = load_cocycle_file(o.cocycle_file, L);
    rep.add_input("cocycle", o.cocycle_file);
  }
  PresymplecticForm form = presymplectic_matrix(L, l0, gamma);
  rep.results()["rank"] = form.rank;
  rep.results()["kernel_dim"] = L.dim() - form.rank;
  rep.results()["omega"] = ratmat_json(form.omega);
  rep.results()["normal_form_basis"] = ratmat_json(form.basis);
  return emit(rep, o, kExitOk);
}

int cmd_char_sub(const Opts& o) {
  LieAlgebra L = resolve_algebra(o.algebra);
  RatVec l0 = parse_rat_csv(o.l0_csv, L.dim(), "--l0");
  std::optional<CocycleMatrix> gamma;
  Report rep("char-sub", o.seed, o.tol);
  rep.add_input("algebra", o.algebra);
  rep.add_input("l0", o.l0_csv);
  if (!o.cocycle_file.empty()) {
    gamma = load_cocycle_file(o.cocycle_file, L);
    rep.add_input("cocycle", o.cocycle_file);
  }
  std::vector<RatVec> basis = characteristic_subalgebra(L, l0, gamma);
  rep.results()["dim"] = int(basis.size());
  Json rows = Json::array();
  for (const RatVec& v : basis) rows.push_back(ratvec_json(v));
  rep.results()["basis"] = rows;
  return emit(rep, o, kExitOk);
}

int cmd_orbit(const Opts& o) {
  auto G = resolve_realization(o.algebra);
  RatVec mu = parse_rat_csv(o.mu_csv, G->dim(), "--mu");
  RatVec nu = parse_rat_csv(o.nu_csv, G->dim(), "--nu");
  const RealizationCocycle* xi = resolve_xi(*G, o.xi_name);
  Report rep("orbit", o.seed, o.tol);
  rep.add_input("realization", G->name);
  rep.add_input("mu", o.mu_csv);
  rep.add_input("nu", o.nu_csv);
  if (xi) rep.add_input("xi", o.xi_name);
  OrbitVerdict v = same_orbit(*G, xi, mu, nu, search_params(o));
  rep.results() = verdict_json(v);
  return emit(rep, o, v.status == OrbitStatus::Distinct ? kExitNegative : kExitOk);
}

int cmd_pseudo_class(const Opts& o) {
  auto G = resolve_realization(o.algebra);
  RatVec l0a = parse_rat_csv(o.l0_csv, G->dim(), "--l0");
  RatVec l0b = parse_rat_csv(o.l0b_csv, G->dim(), "--l0b");
  const RealizationCocycle* xi = resolve_xi(*G, o.xi_name);
  Report rep("pseudo-class", o.seed, o.tol);
  rep.add_input("realization", G->name);
  rep.add_input("l0", o.l0_csv);
  rep.add_input("l0b", o.l0b_csv);
  if (xi) rep.add_input("xi", o.xi_name);
  OrbitVerdict v = pseudo_class_equivalent(*G, xi, l0a, l0b, search_params(o));
  rep.results() = verdict_json(v);
  return emit(rep, o, v.status == OrbitStatus::Distinct ? kExitNegative : kExitOk);
}

int cmd_witness_check(const Opts& o) {
  auto G = resolve_realization(o.algebra);
  RatVec mu = parse_rat_csv(o.mu_csv, G->dim(), "--mu");
  RatVec nu = parse_rat_csv(o.nu_csv, G->dim(), "--nu");
  Vec t = parse_double_csv(o.witness_csv, G->dim(), "--witness");
  const RealizationCocycle* xi = resolve_xi(*G, o.xi_name);
  Report rep("witness-check", o.seed, o.tol);
  rep.add_input("realization", G->name);
  rep.add_input("mu", o.mu_csv);
  rep.add_input("nu", o.nu_csv);
  rep.add_input("witness", o.witness_csv);
  if (xi) rep.add_input("xi", o.xi_name);
  double residual = symplectomorphism_witness_check(*G, xi, nu, mu, t);
  bool pass = residual <= o.tol;
  rep.results()["residual"] = double_json(residual);
  rep.results()["pass"] = pass;
  return emit(rep, o, pass ? kExitOk : kExitNegative);
}

int cmd_integrality(const Opts& o) {
  auto G = resolve_realization(o.algebra);
  RatVec l0 = parse_rat_csv(o.l0_csv, G->dim(), "--l0");
  Report rep("integrality", o.seed, o.tol);
  rep.add_input("realization", G->name);
  rep.add_input("l0", o.l0_csv);
  IntegralityReport ir = integrality_check(G->algebra, l0, G->compact_data, o.tol);
  rep.results()["integral"] = ir.integral;
  rep.results()["any_skipped"] = ir.any_skipped;
  Json entries = Json::array();
  for (const IntegralityEntry& e : ir.entries) {
    Json one;
    one["name"] = e.name;
    one["in_characteristic_subalgebra"] = e.in_characteristic_subalgebra;
    one["pairing_times_period"] = double_json(e.pairing_times_period);
    one["nearest_multiple"] = double_json(e.nearest_multiple);
    one["integral"] = e.integral;
    entries.push_back(one);
  }
  rep.results()["entries"] = entries;
  rep.results()["modeling_note"] = ir.modeling_note;
  return emit(rep, o, ir.integral ? kExitOk : kExitNegative);
}

int cmd_contract(const Opts& o) {
  LieAlgebra L = resolve_algebra(o.algebra);
  Report rep("contract", o.seed, o.tol);
  rep.add_input("algebra", o.algebra);
  rep.add_input("sub", o.sub_names);
  rep.add_input("scale", std::to_string(o.scale));
  std::vector<int> sub;
  for (const std::string& name : split_csv(o.sub_names)) sub.push_back(L.index_of(name));
  std::optional<CocycleMatrix> gamma;
  if (!o.cocycle_file.empty()) {
    gamma = load_cocycle_file(o.cocycle_file, L);
    rep.add_input("cocycle", o.cocycle_file);
  }
  try {
    ContractionResult res = iw_contraction(L, sub, gamma, o.scale);
    rep.results()["weights"] = Json(res.weights);
    rep.results()["algebra"] = text_lines(serialize_algebra(res.algebra));
    if (res.gamma) rep.results()["gamma"] = cocycle_entries(res.algebra, *res.gamma);
    return emit(rep, o, kExitOk);
  } catch (const DivergenceError& e) {
    // a legitimate mathematical outcome of a well formed contraction
    rep.results()["diverged"] = true;
    rep.results()["detail"] = e.what();
    return emit(rep, o, kExitNegative);
  }
}

int cmd_group_verify(const Opts& o) {
  auto G = resolve_realization(o.algebra);
  Report rep("group-verify", o.seed, o.tol);
  rep.add_input("realization", G->name);
  rep.add_input("samples", std::to_string(o.samples));
  VerifyReport vr = group_verify(*G, o.samples, o.seed);
  rep.results()["realization"] = G->name;
  rep.results()["ok"] = vr.ok;
  Json checks = Json::array();
  for (const VerifyLine& line : vr.lines) {
    Json one;
    one["check"] = line.check;
    one["worst"] = double_json(line.worst);
    one["tol"] = double_json(line.tol);
    one["ok"] = line.ok;
    checks.push_back(one);
  }
  rep.results()["checks"] = checks;
  return emit(rep, o, vr.ok ? kExitOk : kExitNegative);
}

int cmd_catalog(const Opts& o) {
  Report rep("catalog", o.seed, o.tol);
  Json entries = Json::array();
  for (const auto& g : catalog()) {
    Json one;
    one["name"] = g->name;
    one["dim"] = g->dim();
    Json cocycles = Json::array();
    for (const RealizationCocycle& c : g->cocycles) cocycles.push_back(c.name);
    one["cocycles"] = cocycles;
    Json invariants = Json::array();
    for (const CatalogInvariant& inv : g->invariants) invariants.push_back(inv.name);
    one["invariants"] = invariants;
    Json compact = Json::array();
    for (const CompactGeneratorDatum& d : g->compact_data) {
      Json cd;
      cd["name"] = d.name;
      cd["period"] = double_json(d.period);
      compact.push_back(cd);
    }
    one["compact_generators"] = compact;
    if (!g->note.empty()) one["note"] = g->note;
    entries.push_back(one);
  }
  rep.results()["entries"] = entries;
  return emit(rep, o, kExitOk);
}

} // namespace

int main(int argc, char** argv) {
  Opts o;
  if (const char* env = std::getenv("LIECO_SEED")) {
    try {
      o.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: [ParseError] LIECO_SEED is not an integer: " << env << "\n";
      return kExitInput;
    }
  }

  CLI::App app{"cohomology, central and pseudo-extensions, presymplectic forms,"
               " and coadjoint orbit decisions for Lie algebras and the group catalog"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol", o.tol, "numerical tolerance")->capture_default_str();
    cmd->add_option("--seed", o.seed, "random seed (LIECO_SEED overrides the default)")
        ->capture_default_str();
    cmd->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_algebra = [&](CLI::App* cmd) {
    cmd->add_option("algebra", o.algebra, "algebra file or catalog name")->required();
  };

  CLI::App* validate = app.add_subcommand("validate", "check the Jacobi identity exactly");
  add_algebra(validate);
  add_common(validate);

  CLI::App* h2 = app.add_subcommand("h2", "cocycle, coboundary, and cohomology dimensions");
  add_algebra(h2);
  add_common(h2);

  CLI::App* extend = app.add_subcommand("extend", "central extension by a 2-cocycle");
  add_algebra(extend);
  extend->add_option("--cocycle", o.cocycle_file, "cocycle file")->required();
  add_common(extend);

  CLI::App* pseudo_extend =
      app.add_subcommand("pseudo-extend", "extension by the coboundary of a functional");
  add_algebra(pseudo_extend);
  pseudo_extend->add_option("--l0", o.l0_csv, "functional, comma separated rationals")->required();
  add_common(pseudo_extend);

  CLI::App* trivialize =
      app.add_subcommand("trivialize", "split a cocycle into coboundary and residual class");
  add_algebra(trivialize);
  trivialize->add_option("--cocycle", o.cocycle_file, "cocycle file")->required();
  add_common(trivialize);

  CLI::App* omega = app.add_subcommand("omega", "presymplectic matrix, rank, and normal form");
  add_algebra(omega);
  omega->add_option("--l0", o.l0_csv, "functional, comma separated rationals")->required();
  omega->add_option("--cocycle", o.cocycle_file, "optional deforming cocycle file");
  add_common(omega);

  CLI::App* char_sub = app.add_subcommand("char-sub", "characteristic subalgebra (omega kernel)");
  add_algebra(char_sub);
  char_sub->add_option("--l0", o.l0_csv, "functional, comma separated rationals")->required();
  char_sub->add_option("--cocycle", o.cocycle_file, "optional deforming cocycle file");
  add_common(char_sub);

  auto add_search = [&](CLI::App* cmd) {
    cmd->add_option("--restarts", o.restarts, "search restarts")->capture_default_str();
    cmd->add_option("--budget", o.budget, "objective evaluations per restart")
        ->capture_default_str();
  };

  CLI::App* orbit = app.add_subcommand("orbit", "decide coadjoint orbit membership");
  add_algebra(orbit);
  orbit->add_option("--mu", o.mu_csv, "source functional")->required();
  orbit->add_option("--nu", o.nu_csv, "target functional")->required();
  orbit->add_option("--xi", o.xi_name, "catalog cocycle deforming the action");
  add_search(orbit);
  add_common(orbit);

  CLI::App* pseudo_class =
      app.add_subcommand("pseudo-class", "compare pseudo-extension classes of two functionals");
  add_algebra(pseudo_class);
  pseudo_class->add_option("--l0", o.l0_csv, "first functional")->required();
  pseudo_class->add_option("--l0b", o.l0b_csv, "second functional")->required();
  pseudo_class->add_option("--xi", o.xi_name, "catalog cocycle deforming the action");
  add_search(pseudo_class);
  add_common(pseudo_class);

  CLI::App* witness =
      app.add_subcommand("witness-check", "verify a claimed orbit witness independently");
  add_algebra(witness);
  witness->add_option("--mu", o.mu_csv, "source functional")->required();
  witness->add_option("--nu", o.nu_csv, "target functional")->required();
  witness->add_option("--witness", o.witness_csv, "witness parameters, comma separated doubles")
      ->required();
  witness->add_option("--xi", o.xi_name, "catalog cocycle deforming the action");
  add_common(witness);

  CLI::App* integrality =
      app.add_subcommand("integrality", "quantization condition on compact generators");
  add_algebra(integrality);
  integrality->add_option("--l0", o.l0_csv, "functional, comma separated rationals")->required();
  add_common(integrality);

  CLI::App* contract = app.add_subcommand("contract", "Inonu-Wigner contraction");
  add_algebra(contract);
  contract->add_option("--sub", o.sub_names, "comma separated names spanning the subalgebra")
      ->required();
  contract->add_option("--scale", o.scale, "cocycle rescaling exponent")->capture_default_str();
  contract->add_option("--cocycle", o.cocycle_file, "optional cocycle file to contract");
  add_common(contract);

  CLI::App* group_verify_cmd =
      app.add_subcommand("group-verify", "randomized identity suite on a catalog realization");
  add_algebra(group_verify_cmd);
  group_verify_cmd->add_option("--samples", o.samples, "sample count")->capture_default_str();
  add_common(group_verify_cmd);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list the compiled-in realizations");
  add_common(catalog_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(o);
    if (app.got_subcommand(h2)) return cmd_h2(o);
    if (app.got_subcommand(extend)) return cmd_extend(o);
    if (app.got_subcommand(pseudo_extend)) return cmd_pseudo_extend(o);
    if (app.got_subcommand(trivialize)) return cmd_trivialize(o);
    if (app.got_subcommand(omega)) return cmd_omega(o);
    if (app.got_subcommand(char_sub)) return cmd_char_sub(o);
    if (app.got_subcommand(orbit)) return cmd_orbit(o);
    if (app.got_subcommand(pseudo_class)) return cmd_pseudo_class(o);
    if (app.got_subcommand(witness)) return cmd_witness_check(o);
    if (app.got_subcommand(integrality)) return cmd_integrality(o);
    if (app.got_subcommand(contract)) return cmd_contract(o);
    if (app.got_subcommand(group_verify_cmd)) return cmd_group_verify(o);
    if (app.got_subcommand(catalog_cmd)) return cmd_catalog(o);
  } catch (const Error& e) {
    std::cerr << "error: [" << e.kind() << "] " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput; // unreachable: require_subcommand(1)
}
