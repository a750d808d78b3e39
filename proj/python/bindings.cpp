#include "gvm/classify.hpp"
#include "gvm/cli.hpp"
#include "gvm/errors.hpp"
#include "gvm/orbits.hpp"
#include "gvm/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

namespace {

// Results cross the boundary as JSON text; the Python side decodes it.
std::string exists_hom_json(const std::string& family, int rank, int k, const std::string& t) {
    int implied = 0;
    gvm::Family f = gvm::parse_family(family, &implied);
    if (rank == 0) rank = implied;
    return gvm::dump(gvm::to_json(gvm::exists_hom(f, rank, k, gvm::parse_rational(t))));
}

std::string richardson_json(const std::string& family, int rank, int k) {
    gvm::Family f = gvm::parse_family(family);
    return gvm::dump(gvm::to_json(gvm::richardson(f, rank, k)));
}

std::string hom_tset_name(const std::string& family, int rank, int k) {
    int implied = 0;
    gvm::Family f = gvm::parse_family(family, &implied);
    if (rank == 0) rank = implied;
    return gvm::tset_name(gvm::hom_tset(f, rank, k));
}

py::tuple run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = gvm::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<gvm::Error>(m, "GvmError", PyExc_ValueError);

    m.def("run", &run, py::arg("args"), "Run the command line tool in-process; returns (exit code, stdout, stderr).");
    m.def("exists_hom_json", &exists_hom_json, py::arg("family"), py::arg("rank"), py::arg("k"), py::arg("t"));
    m.def("richardson_json", &richardson_json, py::arg("family"), py::arg("rank"), py::arg("k"));
    m.def("hom_tset", &hom_tset_name, py::arg("family"), py::arg("rank"), py::arg("k"));
    m.attr("EXIT_OK") = gvm::kExitOk;
    m.attr("EXIT_VIOLATIONS") = gvm::kExitViolations;
    m.attr("EXIT_USAGE") = gvm::kExitUsage;
}
