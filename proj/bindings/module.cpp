#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "paulimix/errors.hpp"
#include "paulimix/frontend.hpp"
#include "paulimix/oracle.hpp"
#include "paulimix/solver.hpp"

namespace py = pybind11;

using namespace paulimix;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Optimal convex approximation of a qubit state by the six Pauli eigenstates";
    m.attr("__version__") = "0.1.0";

    py::register_exception<OutOfWindowError>(m, "OutOfWindowError");
    py::register_exception<NonConvergenceError>(m, "NonConvergenceError");

    py::class_<BlochVector>(m, "BlochVector")
        .def(py::init<>())
        .def(py::init([](double x, double y, double z) {
                 return BlochVector{x, y, z};
             }),
             py::arg("x"), py::arg("y"), py::arg("z"))
        .def_readwrite("x", &BlochVector::x)
        .def_readwrite("y", &BlochVector::y)
        .def_readwrite("z", &BlochVector::z)
        .def("norm", &BlochVector::norm)
        .def("norm1", &BlochVector::norm1)
        .def("dot", &BlochVector::dot)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * double())
        .def("__repr__", [](const BlochVector& r) {
            std::ostringstream os;
            os << "BlochVector(" << r.x << ", " << r.y << ", " << r.z << ")";
            return os.str();
        });

    py::class_<HermitianMatrix2>(m, "HermitianMatrix2")
        .def(py::init<>())
        .def(py::init([](double d0, double d1, Complex off) {
                 return HermitianMatrix2{d0, d1, off};
             }),
             py::arg("d0"), py::arg("d1"), py::arg("off"))
        .def_readwrite("d0", &HermitianMatrix2::d0)
        .def_readwrite("d1", &HermitianMatrix2::d1)
        .def_readwrite("off", &HermitianMatrix2::off)
        .def("trace", &HermitianMatrix2::trace)
        .def("det", &HermitianMatrix2::det)
        .def(py::self - py::self);

    py::class_<AkPhiParams>(m, "AkPhiParams")
        .def(py::init<>())
        .def(py::init([](double a, double k, double phi) {
                 return AkPhiParams{a, k, phi};
             }),
             py::arg("a"), py::arg("k"), py::arg("phi"))
        .def_readwrite("a", &AkPhiParams::a)
        .def_readwrite("k", &AkPhiParams::k)
        .def_readwrite("phi", &AkPhiParams::phi)
        .def("checked", &AkPhiParams::checked);

    py::class_<StateSet>(m, "StateSet")
        .def(py::init<>())
        .def(py::init([](std::vector<BlochVector> states, std::vector<std::string> labels) {
                 return StateSet{std::move(states), std::move(labels)};
             }),
             py::arg("states"), py::arg("labels"))
        .def_readwrite("states", &StateSet::states)
        .def_readwrite("labels", &StateSet::labels)
        .def("__len__", &StateSet::size);

    py::class_<UvParams>(m, "UvParams")
        .def(py::init<>())
        .def(py::init([](double a, double u, double v) {
                 return UvParams{a, u, v};
             }),
             py::arg("a"), py::arg("u"), py::arg("v"))
        .def_readwrite("a", &UvParams::a)
        .def_readwrite("u", &UvParams::u)
        .def_readwrite("v", &UvParams::v);

    py::enum_<Region>(m, "Region")
        .value("Exact", Region::Exact)
        .value("CaseI", Region::CaseI)
        .value("CaseII", Region::CaseII)
        .value("CaseIII", Region::CaseIII)
        .value("CaseIV", Region::CaseIV);

    py::class_<CanonicalMap>(m, "CanonicalMap")
        .def_readonly("sign_x", &CanonicalMap::sign_x)
        .def_readonly("sign_y", &CanonicalMap::sign_y)
        .def_readonly("sign_z", &CanonicalMap::sign_z)
        .def("apply", &CanonicalMap::apply)
        .def("apply_weights", &CanonicalMap::apply_weights);

    py::class_<Solution>(m, "Solution")
        .def_readonly("distance", &Solution::distance)
        .def_readonly("weights", &Solution::weights)
        .def_readonly("region", &Solution::region)
        .def_readonly("valid", &Solution::valid);

    py::class_<ExactFamilyParams>(m, "ExactFamilyParams")
        .def(py::init<>())
        .def(py::init([](double t1, double t2) {
                 return ExactFamilyParams{t1, t2};
             }),
             py::arg("t1"), py::arg("t2"))
        .def_readwrite("t1", &ExactFamilyParams::t1)
        .def_readwrite("t2", &ExactFamilyParams::t2);

    py::class_<KktReport>(m, "KktReport")
        .def_readonly("lambda_", &KktReport::lambda)
        .def_readonly("lambda_i", &KktReport::lambda_i)
        .def_readonly("stationarity_residual", &KktReport::stationarity_residual)
        .def_readonly("feasibility_ok", &KktReport::feasibility_ok)
        .def_readonly("complementarity_residual", &KktReport::complementarity_residual)
        .def_readonly("pass_", &KktReport::pass);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("tol", &SolverConfig::tol)
        .def_readwrite("max_iter", &SolverConfig::max_iter)
        .def_readwrite("grid_resolution", &SolverConfig::grid_resolution);

    py::class_<Projection>(m, "Projection")
        .def_readonly("nearest", &Projection::nearest)
        .def_readonly("distance", &Projection::distance);

    m.def("pauli_eigenstates", [] { return StateSet::pauli_eigenstates(); },
          "The six Pauli eigenstates in the order z+, z-, x+, x-, y+, y-");
    m.def("density_from_akphi", &density_from_akphi, py::arg("params"));
    m.def("bloch_from_akphi", &bloch_from_akphi, py::arg("params"));
    m.def("bloch_to_matrix", &bloch_to_matrix, py::arg("r"));
    m.def("matrix_to_bloch", &matrix_to_bloch, py::arg("m"));
    m.def("trace_norm", &trace_norm, py::arg("m"));
    m.def("mixture", &mixture, py::arg("set"), py::arg("weights"));
    m.def("compute_uv", &compute_uv, py::arg("params"));
    m.def("canonicalize", &paulimix::canonicalize, py::arg("r"));
    m.def("classify", &classify, py::arg("p"));
    m.def("solve_exact_family", &solve_exact_family, py::arg("p"), py::arg("t"));
    m.def("solve", py::overload_cast<const BlochVector&>(&solve), py::arg("r"));
    m.def("solve", py::overload_cast<const AkPhiParams&>(&solve), py::arg("params"));
    m.def("sacchi_threshold", &sacchi_threshold, py::arg("a"), py::arg("phi"));
    m.def("sacchi_reference", py::overload_cast<const AkPhiParams&>(&sacchi_reference),
          py::arg("params"));
    m.def("sacchi_reference", py::overload_cast<const UvParams&>(&sacchi_reference),
          py::arg("p"));
    m.def("project_cross_polytope", &project_cross_polytope, py::arg("r"));
    m.def("weights_from_polytope_point", &weights_from_polytope_point, py::arg("m"));
    m.def("frank_wolfe_solve", &frank_wolfe_solve, py::arg("set"), py::arg("r"),
          py::arg("cfg") = SolverConfig{});
    m.def("grid_search", &grid_search, py::arg("set"), py::arg("r"),
          py::arg("cfg") = SolverConfig{});
    m.def("kkt_check", &kkt_check, py::arg("p"), py::arg("w"), py::arg("tol"));
    m.def("octahedral_symmetries", [] {
        const auto& syms = octahedral_symmetries();
        return std::vector<SignedPermutation>(syms.begin(), syms.end());
    });

    py::class_<SignedPermutation>(m, "SignedPermutation")
        .def_readonly("source", &SignedPermutation::source)
        .def_readonly("sign", &SignedPermutation::sign)
        .def("apply", &SignedPermutation::apply)
        .def("apply_weights", &SignedPermutation::apply_weights);
}
