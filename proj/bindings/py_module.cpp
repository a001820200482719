#include <pybind11/pybind11.h>

#include "assocfold/cli.hpp"
#include "assocfold/common.hpp"

namespace py = pybind11;

namespace {

assocfold::cli::Options options(std::string type, std::string source, std::string target,
                                std::string base, std::uint64_t seed, bool deep) {
    assocfold::cli::Options opts;
    opts.type = std::move(type);
    opts.source = std::move(source);
    opts.target = std::move(target);
    opts.base = std::move(base);
    opts.seed = seed;
    opts.deep = deep;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_assocfold, m) {
    m.doc() = "Exact simple polytope realizations of generalized associahedra, "
              "with folded plane sections for the multiply-laced and "
              "noncrystallographic types.  All functions return canonical JSON "
              "strings; the assocfold package wraps them into dictionaries.";
    m.attr("__version__") = "1.0.0";
    m.attr("DEFAULT_SEED") = assocfold::cli::kDefaultSeed;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const assocfold::Error& e) {
            if (e.kind() == assocfold::ErrorKind::InvalidInput)
                PyErr_SetString(PyExc_ValueError, e.what());
            else
                PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def("list_types", [] { return assocfold::cli::list_types_json_text(); },
          "Supported types with Coxeter data and vertex counts, as JSON.");

    m.def(
        "build",
        [](const std::string& type, const std::string& c, std::uint64_t seed, bool deep) {
            return assocfold::cli::build_json_text(options(type, "", "", c, seed, deep));
        },
        py::arg("type"), py::arg("c") = "1",
        py::arg("seed") = assocfold::cli::kDefaultSeed, py::arg("deep") = false,
        "Polytope artifact for a type: the ambient realization when simply "
        "laced, the folded section otherwise.");

    m.def(
        "fold",
        [](const std::string& target, const std::string& source, const std::string& c,
           std::uint64_t seed, bool deep) {
            return assocfold::cli::fold_json_text(options("", source, target, c, seed, deep));
        },
        py::arg("target"), py::arg("source") = "", py::arg("c") = "1",
        py::arg("seed") = assocfold::cli::kDefaultSeed, py::arg("deep") = false,
        "Folded section artifact (polytope plus normal fan) for a target type.");

    m.def(
        "verify",
        [](const std::string& target, const std::string& source, const std::string& c,
           std::uint64_t seed, bool deep) {
            return assocfold::cli::verify_report_text(
                options("", source, target, c, seed, deep));
        },
        py::arg("target"), py::arg("source") = "", py::arg("c") = "1",
        py::arg("seed") = assocfold::cli::kDefaultSeed, py::arg("deep") = false,
        "Verification report for a folding, one pass/fail entry per check.");

    m.def(
        "off",
        [](const std::string& type, const std::string& c, std::uint64_t seed, bool deep) {
            return assocfold::cli::build_off_text(options(type, "", "", c, seed, deep));
        },
        py::arg("type"), py::arg("c") = "1",
        py::arg("seed") = assocfold::cli::kDefaultSeed, py::arg("deep") = false,
        "OFF model of the polytope for a type (3D display projection).");

    m.def(
        "knit_grid",
        [](const std::string& type) {
            assocfold::cli::Options opts;
            opts.type = type;
            return assocfold::cli::knit_grid_text(opts);
        },
        py::arg("type"),
        "Text rendering of the knitted translation quiver with its relations.");
}
