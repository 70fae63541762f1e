#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posetcalc/lattice.hpp"

namespace py = pybind11;
using namespace posetcalc;

namespace {
struct PyLattice {
    LatticePtr p;
};
} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lattice cocalculus engine";
    py::class_<PyLattice>(m, "Lattice")
        .def("size", [](const PyLattice& L) { return L.p->size(); });
    m.def("grid", [](std::vector<int> sizes) { return PyLattice{make_grid(std::move(sizes))}; });
}
