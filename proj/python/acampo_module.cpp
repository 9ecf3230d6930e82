#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "acampo/cli.hpp"
#include "acampo/generate.hpp"
#include "acampo/json_io.hpp"
#include "acampo/lattice.hpp"
#include "acampo/monodromy.hpp"
#include "acampo/report.hpp"

namespace py = pybind11;
using namespace acampo;

namespace {

py::object big_to_py(const BigInt& v) {
    std::string s = v.to_string();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

IntMatrix matrix_from_py(const std::vector<std::vector<long long>>& rows, std::size_t cols_hint = 0) {
    if (rows.empty()) return IntMatrix(0, cols_hint);
    return IntMatrix::from_int_rows(rows);
}

py::list matrix_to_py(const IntMatrix& m) {
    py::list out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(big_to_py(m.at(i, j)));
        out.append(row);
    }
    return out;
}

std::string json_str(const json& j) { return j.dump(2); }

}  // namespace

PYBIND11_MODULE(_acampo, m) {
    m.doc() = "divides, vanishing-cycle lattices and decomposition reports for plane curve "
              "singularities";

    m.def("smith_normal_form",
          [](const std::vector<std::vector<long long>>& rows) {
              SmithForm sf = smith_normal_form(matrix_from_py(rows));
              py::dict out;
              out["U"] = matrix_to_py(sf.U);
              out["D"] = matrix_to_py(sf.D);
              out["V"] = matrix_to_py(sf.V);
              py::list inv;
              for (const auto& d : sf.invariant_factors()) inv.append(big_to_py(d));
              out["invariant_factors"] = inv;
              return out;
          },
          py::arg("matrix"), "Smith normal form U*A*V = D with unimodular U, V.");

    m.def("subgroup_quotient_order",
          [](const std::vector<std::vector<long long>>& gens, long long ambient, long long n) {
              return big_to_py(subgroup_quotient_order(
                  matrix_from_py(gens, static_cast<std::size_t>(ambient)), n));
          },
          py::arg("generators"), py::arg("ambient"), py::arg("n"),
          "|L/nL| = n^rank for the lattice spanned by the generator rows.");

    m.def("enumerate_quotient",
          [](const std::vector<std::vector<long long>>& gens, long long ambient, long long n,
             unsigned long long budget) {
              auto s = enumerate_quotient(matrix_from_py(gens, static_cast<std::size_t>(ambient)), n,
                                          budget);
              py::list out;
              for (const auto& v : s) {
                  py::tuple t(v.size());
                  for (std::size_t i = 0; i < v.size(); ++i) t[i] = v[i];
                  out.append(t);
              }
              return out;
          },
          py::arg("generators"), py::arg("ambient"), py::arg("n"),
          py::arg("budget") = kDefaultEnumerationBudget);

    m.def("kernel_of_hom_on_subgroup",
          [](const std::vector<std::vector<long long>>& T_gens,
             const std::vector<std::vector<long long>>& phi, long long n) {
              auto r = kernel_of_hom_on_subgroup(matrix_from_py(T_gens), matrix_from_py(phi), n);
              return py::make_tuple(big_to_py(r.kernel), big_to_py(r.image));
          },
          py::arg("T_gens"), py::arg("phi"), py::arg("n"));

    m.def("semigroup_and_delta",
          [](long long beta0, const std::vector<long long>& betas) {
              SemigroupData sd = semigroup_and_delta({beta0, betas});
              py::dict out;
              out["generators"] = sd.generators;
              out["conductor"] = sd.conductor;
              out["delta"] = sd.delta;
              return out;
          },
          py::arg("beta0"), py::arg("betas"));

    m.def("germ_invariants",
          [](const std::string& germ_json) {
              GermSpec g = germ_from_json(json::parse(germ_json));
              return json_str(invariants_to_json(germ_invariants(g)));
          },
          py::arg("germ_json"));

    m.def("validate_divide",
          [](const std::string& germ_json, const std::string& divide_json) {
              GermSpec g = germ_from_json(json::parse(germ_json));
              Divide d = divide_from_json(json::parse(divide_json));
              return json_str(validation_to_json(validate_divide(d, g)));
          },
          py::arg("germ_json"), py::arg("divide_json"));

    m.def("atomic_classes",
          [](const std::string& germ_json, const std::string& divide_json) {
              GermSpec g = germ_from_json(json::parse(germ_json));
              Divide d = divide_from_json(json::parse(divide_json));
              CycleLattice lat = intersection_form(d);
              return json_str(classes_to_json(atomic_classes(lat, d), lat));
          },
          py::arg("germ_json"), py::arg("divide_json"));

    m.def("decompose",
          [](const std::string& germ_json, const std::string& divide_json, long long n) {
              GermSpec g = germ_from_json(json::parse(germ_json));
              Divide d = divide_from_json(json::parse(divide_json));
              return json_str(decompose_to_json(decompose(g, d, n)));
          },
          py::arg("germ_json"), py::arg("divide_json"), py::arg("n"));

    m.def("homology_limit_report",
          [](const std::string& germ_json, const std::string& divide_json) {
              GermSpec g = germ_from_json(json::parse(germ_json));
              Divide d = divide_from_json(json::parse(divide_json));
              return json_str(limit_to_json(homology_limit_report(g, d)));
          },
          py::arg("germ_json"), py::arg("divide_json"));

    m.def("dynkin",
          [](const std::string& divide_json, const std::string& format) {
              Divide d = divide_from_json(json::parse(divide_json));
              DynkinGraph g = dynkin_graph(intersection_form(d));
              if (format == "dot") return dynkin_to_dot(g);
              return json_str(dynkin_to_json(g));
          },
          py::arg("divide_json"), py::arg("format") = "json");

    m.def("generate_line_arrangement_divide",
          [](int d) { return json_str(generated_to_json(generate_line_arrangement_divide(d))); },
          py::arg("d"));

    m.def("generate_grid_divide",
          [](int p, int q) { return json_str(generated_to_json(generate_grid_divide(p, q))); },
          py::arg("p"), py::arg("q"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run a CLI subcommand; returns (exit_code, stdout, stderr).");
}
