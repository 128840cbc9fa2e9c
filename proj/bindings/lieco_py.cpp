// Python module _lieco: the exact-arithmetic core plus the group-level
// operations. Rationals cross the boundary as "p/q" strings so nothing is
// rounded; group coordinates and witnesses cross as numpy arrays.

#include "lieco/cohomology.hpp"
#include "lieco/group.hpp"
#include "lieco/io.hpp"
#include "lieco/orbit.hpp"
#include "lieco/symplectic.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace lieco;

namespace {

using Entries = std::vector<std::tuple<int, int, std::string>>;
using StrVec = std::vector<std::string>;
using StrMat = std::vector<std::vector<std::string>>;

RatVec to_ratvec(const StrVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_parse(v[i]);
  return out;
}

StrVec from_ratvec(const RatVec& v) {
  StrVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_str(v[i]);
  return out;
}

StrMat from_ratmat(const RatMat& m) {
  StrMat out(m.rows(), StrVec(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = rat_str(m.at(i, j));
  return out;
}

Entries entries_of(const CocycleMatrix& g) {
  Entries out;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = i + 1; j < g.cols(); ++j)
      if (g.at(i, j) != 0) out.emplace_back(i, j, rat_str(g.at(i, j)));
  return out;
}

CocycleMatrix entries_to_matrix(int dim, const Entries& entries) {
  CocycleMatrix g(dim, dim);
  for (const auto& [i, j, value] : entries) {
    if (i < 0 || j < 0 || i >= dim || j >= dim || i == j)
      throw DimensionMismatch("cocycle entry index out of range");
    Rat r = rat_parse(value);
    g.at(i, j) = r;
    g.at(j, i) = -r;
  }
  return g;
}

std::vector<StrVec> from_ratvecs(const std::vector<RatVec>& vs) {
  std::vector<StrVec> out;
  out.reserve(vs.size());
  for (const RatVec& v : vs) out.push_back(from_ratvec(v));
  return out;
}

std::optional<CocycleMatrix> opt_gamma(const LieAlgebra& L, const std::optional<Entries>& e) {
  if (!e) return std::nullopt;
  return entries_to_matrix(L.dim(), *e);
}

// non-owning view into the self-tested catalog
struct Realization {
  std::shared_ptr<const GroupRealization> p;
  const GroupRealization& get() const { return *p; }
  const RealizationCocycle* xi(const std::optional<std::string>& name) const {
    if (!name) return nullptr;
    return &p->cocycle(*name); // throws UnknownName on a bad name
  }
};

Realization make_realization(const std::string& name) {
  auto p = catalog_find(name);
  if (!p) throw UnknownName("no catalog realization named '" + name + "'");
  return Realization{p};
}

SearchParams make_params(double tol, uint64_t seed, int restarts, int budget) {
  SearchParams sp;
  sp.tol = tol;
  sp.seed = seed;
  sp.restarts = restarts;
  sp.budget = budget;
  return sp;
}

py::dict verdict_dict(const OrbitVerdict& v) {
  py::dict d;
  d["status"] = std::string(to_string(v.status));
  d["residual"] = v.residual;
  d["witness"] = v.witness ? py::cast(*v.witness) : py::object(py::none());
  d["separating_invariant"] = v.separating_invariant;
  d["note"] = v.note;
  return d;
}

py::dict validation_dict(const ValidationReport& rep) {
  py::dict d;
  d["ok"] = rep.ok;
  py::list issues;
  for (const ValidationIssue& is : rep.issues) {
    py::dict e;
    e["kind"] = is.kind;
    e["triple"] = is.triple;
    e["residual"] = from_ratvec(is.residual);
    e["message"] = is.message;
    issues.append(e);
  }
  d["issues"] = issues;
  return d;
}

} // namespace

PYBIND11_MODULE(_lieco, m) {
  m.doc() = "Exact Lie algebra cohomology, central extensions, presymplectic "
            "forms, and coadjoint orbit classification.";
  m.attr("__version__") = lieco_version();

  static py::exception<Error> lieco_error(m, "LiecoError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(lieco_error.ptr(), ("[" + e.kind() + "] " + e.what()).c_str());
    }
  });

  py::class_<LieAlgebra>(m, "Algebra")
      .def_property_readonly("name", &LieAlgebra::name)
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("basis_names", &LieAlgebra::basis_names)
      .def("index_of", &LieAlgebra::index_of, py::arg("basis_name"))
      .def("c",
           [](const LieAlgebra& L, int i, int j, int k) { return rat_str(L.c(i, j, k)); },
           py::arg("i"), py::arg("j"), py::arg("k"),
           "Structure constant of [X_i, X_j] along X_k, as 'p/q'.")
      .def("bracket",
           [](const LieAlgebra& L, const StrVec& x, const StrVec& y) {
             return from_ratvec(
                 bracket(L, AlgebraVector(to_ratvec(x)), AlgebraVector(to_ratvec(y))).c);
           },
           py::arg("x"), py::arg("y"))
      .def("same_table", &LieAlgebra::same_table, py::arg("other"))
      .def("validate", [](const LieAlgebra& L) { return validation_dict(validate_algebra(L)); })
      .def("serialize", [](const LieAlgebra& L) { return serialize_algebra(L); })
      .def("__repr__", [](const LieAlgebra& L) {
        return "<lieco.Algebra '" + L.name() + "' dim " + std::to_string(L.dim()) + ">";
      });

  m.def("algebra", [](const std::string& name) {
    auto p = catalog_find(name);
    if (!p) throw UnknownName("no catalog algebra named '" + name + "'");
    return p->algebra;
  }, py::arg("name"), "Catalog algebra by name.");
  m.def("algebra_from_text", &parse_algebra_text, py::arg("text"));
  m.def("load_algebra", &load_algebra_file, py::arg("path"));
  m.def("catalog_names", [] {
    StrVec names;
    for (const auto& g : catalog()) names.push_back(g->name);
    return names;
  });

  m.def("validate", [](const LieAlgebra& L) { return validation_dict(validate_algebra(L)); },
        py::arg("algebra"));

  m.def("h2", [](const LieAlgebra& L) {
    H2Report rep = h2_report(L);
    py::dict d;
    d["z2"] = rep.z2_dim;
    d["b2"] = rep.b2_dim;
    d["h2"] = rep.h2_dim;
    py::list z2, b2;
    for (const CocycleMatrix& g : rep.z2_basis) z2.append(entries_of(g));
    for (const CocycleMatrix& g : rep.b2_basis) b2.append(entries_of(g));
    d["z2_basis"] = z2;
    d["b2_basis"] = b2;
    return d;
  }, py::arg("algebra"), "Dimensions and deterministic bases of Z2, B2, H2.");

  m.def("coboundary_of", [](const LieAlgebra& L, const StrVec& mu) {
    return entries_of(coboundary_of(L, to_ratvec(mu)));
  }, py::arg("algebra"), py::arg("mu"));

  m.def("decompose", [](const LieAlgebra& L, const Entries& gamma) {
    DecomposeResult res = h2_decompose(L, entries_to_matrix(L.dim(), gamma));
    py::dict d;
    d["trivial"] = res.trivial;
    d["mu"] = res.mu ? py::cast(from_ratvec(*res.mu)) : py::object(py::none());
    d["representative"] = entries_of(res.representative);
    return d;
  }, py::arg("algebra"), py::arg("gamma"),
     "Split a closed two-form into a coboundary and a residual class.");

  m.def("central_extension",
        [](const LieAlgebra& L, const Entries& gamma, const std::string& central_name) {
          CentralExtension ext =
              central_extension(L, entries_to_matrix(L.dim(), gamma), central_name);
          return py::make_tuple(ext.extended, ext.central_index);
        },
        py::arg("algebra"), py::arg("gamma"), py::arg("central_name") = "X0");

  m.def("pseudo_extension",
        [](const LieAlgebra& L, const StrVec& l0, const std::string& central_name) {
          CentralExtension ext = pseudo_extension(L, to_ratvec(l0), central_name);
          py::dict d;
          d["extended"] = ext.extended;
          d["gamma"] = entries_of(ext.gamma);
          d["central_index"] = ext.central_index;
          return d;
        },
        py::arg("algebra"), py::arg("l0"), py::arg("central_name") = "X0");

  m.def("trivialize_extension",
        [](const LieAlgebra& L, const Entries& gamma, const std::string& central_name) {
          CentralExtension ext =
              central_extension(L, entries_to_matrix(L.dim(), gamma), central_name);
          return from_ratmat(trivialize_pseudo_extension(L, ext));
        },
        py::arg("algebra"), py::arg("gamma"), py::arg("central_name") = "X0",
        "Basis change removing the central terms; raises when gamma is not exact.");

  m.def("contract",
        [](const LieAlgebra& L, const std::vector<std::string>& sub,
           const std::optional<Entries>& gamma, int scale) {
          std::vector<int> idx;
          for (const std::string& s : sub) idx.push_back(L.index_of(s));
          ContractionResult res = iw_contraction(L, idx, opt_gamma(L, gamma), scale);
          py::dict d;
          d["algebra"] = res.algebra;
          d["gamma"] = res.gamma ? py::cast(entries_of(*res.gamma)) : py::object(py::none());
          d["weights"] = res.weights;
          return d;
        },
        py::arg("algebra"), py::arg("sub"), py::arg("gamma") = py::none(),
        py::arg("scale") = 1,
        "Contraction along the named generators; raises on divergent cocycle entries.");

  m.def("omega",
        [](const LieAlgebra& L, const StrVec& l0, const std::optional<Entries>& gamma) {
          PresymplecticForm f = presymplectic_matrix(L, to_ratvec(l0), opt_gamma(L, gamma));
          py::dict d;
          d["rank"] = f.rank;
          d["matrix"] = from_ratmat(f.omega);
          d["basis"] = from_ratmat(f.basis);
          d["kernel"] =
              from_ratvecs(characteristic_subalgebra(L, to_ratvec(l0), opt_gamma(L, gamma)));
          return d;
        },
        py::arg("algebra"), py::arg("l0"), py::arg("gamma") = py::none(),
        "Presymplectic matrix at l0 with exact rank, normal-form basis, kernel.");

  m.def("characteristic_subalgebra",
        [](const LieAlgebra& L, const StrVec& l0, const std::optional<Entries>& gamma) {
          return from_ratvecs(characteristic_subalgebra(L, to_ratvec(l0), opt_gamma(L, gamma)));
        },
        py::arg("algebra"), py::arg("l0"), py::arg("gamma") = py::none());

  py::class_<Realization>(m, "Realization")
      .def_property_readonly("name", [](const Realization& r) { return r.get().name; })
      .def_property_readonly("dim", [](const Realization& r) { return r.get().dim(); })
      .def_property_readonly("algebra", [](const Realization& r) { return r.get().algebra; })
      .def_property_readonly("note", [](const Realization& r) { return r.get().note; })
      .def_property_readonly("cocycle_names",
           [](const Realization& r) {
             StrVec names;
             for (const RealizationCocycle& c : r.get().cocycles) names.push_back(c.name);
             return names;
           })
      .def("law", [](const Realization& r, const Vec& a, const Vec& b) { return r.get().law(a, b); },
           py::arg("g1"), py::arg("g2"))
      .def("inverse", [](const Realization& r, const Vec& g) { return r.get().inverse(g); },
           py::arg("g"))
      .def("ad", [](const Realization& r, const Vec& g) { return r.get().ad(g); }, py::arg("g"))
      .def("coad", [](const Realization& r, const Vec& g) { return r.get().coad(g); },
           py::arg("g"))
      .def("coad_of_params",
           [](const Realization& r, const Vec& t) { return r.get().coad_of_params(t); },
           py::arg("t"))
      .def("element_of_params",
           [](const Realization& r, const Vec& t) { return r.get().element_of_params(t); },
           py::arg("t"))
      .def("exp_axis",
           [](const Realization& r, int axis, double t) {
             Vec e = Vec::Zero(r.get().dim());
             if (axis < 0 || axis >= r.get().dim())
               throw DimensionMismatch("exp_axis: axis out of range");
             e[axis] = 1.0;
             return r.get().exp_one_param(e, t);
           },
           py::arg("axis"), py::arg("t"))
      .def("noether",
           [](const Realization& r, const std::string& cocycle, const Vec& g) {
             return noether_invariants(r.get(), r.get().cocycle(cocycle), g);
           },
           py::arg("cocycle"), py::arg("g"))
      .def("noether_of_params",
           [](const Realization& r, const std::string& cocycle, const Vec& t) {
             return noether_of_params(r.get(), r.get().cocycle(cocycle), t);
           },
           py::arg("cocycle"), py::arg("t"),
           "Charges of h(t) = exp(t_1 X_1)...exp(t_n X_n); total in t.")
      .def("noether_differential",
           [](const Realization& r, const std::string& cocycle) {
             return noether_differential(r.get(), r.get().cocycle(cocycle));
           },
           py::arg("cocycle"))
      .def("integrality",
           [](const Realization& r, const StrVec& l0, double tol) {
             IntegralityReport rep =
                 integrality_check(r.get().algebra, to_ratvec(l0), r.get().compact_data, tol);
             py::dict d;
             d["integral"] = rep.integral;
             d["any_skipped"] = rep.any_skipped;
             d["modeling_note"] = rep.modeling_note;
             py::list entries;
             for (const IntegralityEntry& e : rep.entries) {
               py::dict x;
               x["name"] = e.name;
               x["in_characteristic_subalgebra"] = e.in_characteristic_subalgebra;
               x["pairing_times_period"] = e.pairing_times_period;
               x["nearest_multiple"] = e.nearest_multiple;
               x["integral"] = e.integral;
               entries.append(x);
             }
             d["entries"] = entries;
             return d;
           },
           py::arg("l0"), py::arg("tol") = 1e-9)
      .def("verify",
           [](const Realization& r, int samples, uint64_t seed) {
             VerifyReport rep = group_verify(r.get(), samples, seed);
             py::dict d;
             d["ok"] = rep.ok;
             py::list lines;
             for (const VerifyLine& l : rep.lines) {
               py::dict x;
               x["check"] = l.check;
               x["worst"] = l.worst;
               x["tol"] = l.tol;
               x["ok"] = l.ok;
               lines.append(x);
             }
             d["lines"] = lines;
             return d;
           },
           py::arg("samples") = 256, py::arg("seed") = 42)
      .def("__repr__", [](const Realization& r) {
        return "<lieco.Realization '" + r.get().name + "'>";
      });

  m.def("realization", &make_realization, py::arg("name"),
        "Catalog group realization by name.");

  m.def("same_orbit",
        [](const Realization& r, const StrVec& mu, const StrVec& nu,
           const std::optional<std::string>& cocycle, double tol, uint64_t seed, int restarts,
           int budget) {
          return verdict_dict(same_orbit(r.get(), r.xi(cocycle), to_ratvec(mu), to_ratvec(nu),
                                         make_params(tol, seed, restarts, budget)));
        },
        py::arg("realization"), py::arg("mu"), py::arg("nu"), py::arg("cocycle") = py::none(),
        py::arg("tol") = 1e-8, py::arg("seed") = 42, py::arg("restarts") = 32,
        py::arg("budget") = 2000,
        "Coadjoint (or deformed) orbit membership: Equivalent, Distinct, Inconclusive.");

  m.def("pseudo_class",
        [](const Realization& r, const StrVec& l0a, const StrVec& l0b,
           const std::optional<std::string>& cocycle, double tol, uint64_t seed, int restarts,
           int budget) {
          return verdict_dict(pseudo_class_equivalent(r.get(), r.xi(cocycle), to_ratvec(l0a),
                                                      to_ratvec(l0b),
                                                      make_params(tol, seed, restarts, budget)));
        },
        py::arg("realization"), py::arg("l0a"), py::arg("l0b"), py::arg("cocycle") = py::none(),
        py::arg("tol") = 1e-8, py::arg("seed") = 42, py::arg("restarts") = 32,
        py::arg("budget") = 2000);

  m.def("witness_check",
        [](const Realization& r, const StrVec& mu_from, const StrVec& mu_to, const Vec& t,
           const std::optional<std::string>& cocycle) {
          return symplectomorphism_witness_check(r.get(), r.xi(cocycle), to_ratvec(mu_to),
                                                 to_ratvec(mu_from), t);
        },
        py::arg("realization"), py::arg("mu_from"), py::arg("mu_to"), py::arg("witness"),
        py::arg("cocycle") = py::none(),
        "Residual of a claimed orbit map: point gap and conjugated-form gap.");
}
