#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "petz/araki.hpp"
#include "petz/state_io.hpp"
#include "petz/verify.hpp"

namespace py = pybind11;
using namespace petz;

namespace {

DensityState state_from_array(const py::array_t<std::complex<double>>& arr, double tol) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw Error("expected a square 2-D complex array");
    const std::size_t n = static_cast<std::size_t>(arr.shape(0));
    CMat m(n, n);
    const auto view = arr.unchecked<2>();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
    return density_from_matrix(HermitianMatrix(std::move(m)), tol);
}

// (value, status) with status in {finite, +inf:support, +inf:divergent,
// +inf:domain}.
py::tuple to_py(const ExtendedReal& v) {
    if (v.is_finite()) return py::make_tuple(v.value(), "finite");
    if (v.is_minus_inf())
        return py::make_tuple(-std::numeric_limits<double>::infinity(), "-inf");
    return py::make_tuple(std::numeric_limits<double>::infinity(),
                          "+inf:" + reason_tag(v.reason()));
}

AlphaOrder order_from_py(const py::object& alpha) {
    if (py::isinstance<py::str>(alpha)) {
        const std::string s = alpha.cast<std::string>();
        if (s == "inf") return AlphaOrder::infinity();
        return AlphaOrder::from_value(std::stod(s));
    }
    return AlphaOrder::from_value(alpha.cast<double>());
}

}  // namespace

PYBIND11_MODULE(petzrenyi, m) {
    m.doc() = "Quantum Renyi divergence of density operators via the classical reduction";

    py::register_exception<Error>(m, "PetzError");

    py::class_<DensityState>(m, "DensityState")
        .def_property_readonly("dim", &DensityState::dim)
        .def_property_readonly("eigenvalues",
                               [](const DensityState& s) { return s.eigenvalues(); })
        .def("matrix",
             [](const DensityState& s) {
                 const CMat mat = s.to_matrix();
                 py::array_t<std::complex<double>> out({s.dim(), s.dim()});
                 auto view = out.mutable_unchecked<2>();
                 for (std::size_t i = 0; i < s.dim(); ++i)
                     for (std::size_t j = 0; j < s.dim(); ++j)
                         view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) =
                             mat(i, j);
                 return out;
             })
        .def("__repr__", [](const DensityState& s) {
            return "<DensityState dim=" + std::to_string(s.dim()) + ">";
        });

    m.def("density_from_matrix", &state_from_array, py::arg("matrix"),
          py::arg("tol") = kSupportTol,
          "Validate and diagonalize a Hermitian matrix into a density state.");
    m.def("load_state", &load_state, py::arg("path"), py::arg("tol") = kSupportTol);
    m.def("parse_state", &parse_state, py::arg("json_text"), py::arg("tol") = kSupportTol);

    m.def(
        "petz_renyi",
        [](const DensityState& rho, const DensityState& sigma, const py::object& alpha) {
            return to_py(petz_renyi(rho, sigma, order_from_py(alpha)));
        },
        py::arg("rho"), py::arg("sigma"), py::arg("alpha"),
        "D_alpha(rho || sigma) as (value, status); alpha may be a float, 0, 1 or 'inf'.");
    m.def(
        "petz_renyi_direct",
        [](const DensityState& rho, const DensityState& sigma, double alpha) {
            return to_py(petz_renyi_direct(rho, sigma, alpha));
        },
        py::arg("rho"), py::arg("sigma"), py::arg("alpha"),
        "Functional-calculus route, the independent check of petz_renyi.");
    m.def("d_zero", [](const DensityState& r, const DensityState& s) { return to_py(d_zero(r, s)); });
    m.def("d_one", [](const DensityState& r, const DensityState& s) { return to_py(d_one(r, s)); });
    m.def("d_infty",
          [](const DensityState& r, const DensityState& s) { return to_py(d_infty(r, s)); });
    m.def("d_infty_unrestricted", [](const DensityState& r, const DensityState& s) {
        return to_py(d_infty_unrestricted(r, s));
    });
    m.def("hs_norm_sq_diff", &hs_norm_sq_diff, py::arg("rho"), py::arg("sigma"));
    m.def(
        "total_variation",
        [](const DensityState& rho, const DensityState& sigma) {
            const JointPair joint = build_joint(rho, sigma);
            return total_variation(joint.p_distribution(), joint.q_distribution());
        },
        py::arg("rho"), py::arg("sigma"),
        "Total variation distance of the reduced classical pair.");
    m.def(
        "joint_pair",
        [](const DensityState& rho, const DensityState& sigma) {
            const JointPair joint = build_joint(rho, sigma);
            py::list cells;
            for (const auto& c : joint.cells())
                cells.append(py::make_tuple(c.i, c.j, c.p, c.q));
            return cells;
        },
        py::arg("rho"), py::arg("sigma"),
        "Sparse cells (i, j, p, q) of the reduced classical pair.");
    m.def(
        "alpha_scan",
        [](const DensityState& rho, const DensityState& sigma,
           const std::vector<double>& alphas) {
            std::vector<AlphaOrder> grid;
            grid.reserve(alphas.size());
            for (double a : alphas) grid.push_back(AlphaOrder::from_value(a));
            const DivergenceCurve curve = alpha_scan(rho, sigma, grid);
            py::list out;
            for (std::size_t k = 0; k < curve.grid.size(); ++k) {
                const py::tuple v = to_py(curve.values[k]);
                out.append(py::make_tuple(alphas[k], v[0], v[1]));
            }
            return out;
        },
        py::arg("rho"), py::arg("sigma"), py::arg("alphas"),
        "Rows (alpha, value, status) along an ascending order grid.");

    m.def("example_names", &example_names);
    m.def(
        "run_example",
        [](const std::string& name) {
            const ExampleReport report = run_example(name);
            py::list lines;
            for (const auto& line : report.lines)
                lines.append(py::make_tuple(line.label, line.expected, line.computed,
                                            line.pass));
            return py::make_tuple(report.all_pass(), lines);
        },
        py::arg("name"), "Expected-versus-computed table of a built-in example.");

    m.def("araki_partial_sum", &araki_partial_sum, py::arg("n"));
    m.def("araki_threshold", &araki_threshold, py::arg("threshold"));
    m.def("kl_term_compare", &kl_term_compare, py::arg("n"));
}
