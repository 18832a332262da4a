#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gsp4/cli.hpp"
#include "gsp4/constants.hpp"
#include "gsp4/ktypes.hpp"
#include "gsp4/lattice.hpp"
#include "gsp4/liealg.hpp"
#include "gsp4/modforms.hpp"
#include "gsp4/suites.hpp"

namespace py = pybind11;
using namespace gsp4;

namespace {

py::object fraction(const BigRational& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(q));
}

py::object integer(const BigInt& z) { return py::int_(py::str(z.get_str())); }

py::tuple pi_quantity(const PiQuantity& x) { return py::make_tuple(fraction(x.coeff()), x.pi_exp()); }

py::list matrix(const Matrix<BigRational>& m) {
    py::list rows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.cols(); ++c) row.append(fraction(m(r, c)));
        rows.append(row);
    }
    return rows;
}

RationalMatrix to_matrix(const std::vector<std::vector<py::object>>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty matrix");
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = parse_rational(py::str(rows[r][c]));
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic checks for Sp4 constants, lattices and modular forms";

    m.def("cprime", [](long k, long kp) { return fraction(cprime(k, kp)); }, py::arg("k"), py::arg("kp"));
    m.def("c_closed", [](long k, long kp) { return fraction(c_closed(k, kp)); }, py::arg("k"), py::arg("kp"));
    m.def("c_level", [](unsigned long n) { return fraction(c_level(LevelFactor::of(n))); }, py::arg("level"));
    m.def("main1_constant", [](long k, long kp, unsigned long n) { return pi_quantity(main1_constant(k, kp, LevelFactor::of(n))); },
          py::arg("k"), py::arg("kp"), py::arg("level") = 1);
    m.def("siegel_volume", [] { return pi_quantity(siegel_volume()); });

    m.def("projection_onto_31", [] { return matrix(projection_onto_31()); });
    m.def("pairing_coefficient", [](unsigned long d, unsigned long i) { return fraction(pairing_coefficient(d, i)); },
          py::arg("d"), py::arg("i"));
    m.def("weyl_dimension", [](long k, long kp, long c) { return weyl_construct(AlgebraicWeight(k, kp, c)).dimension; },
          py::arg("k"), py::arg("kp"), py::arg("c"));

    m.def(
        "dual_index",
        [](unsigned long p, const std::vector<std::vector<py::object>>& basis, const std::vector<std::vector<py::object>>& gram,
           bool alternating) {
            return integer(dual_index(LatticeZp::make(p, to_matrix(basis)), BilinearForm::make(to_matrix(gram), alternating)));
        },
        py::arg("prime"), py::arg("basis"), py::arg("gram"), py::arg("alternating") = false);
    m.def(
        "gram_discriminant",
        [](unsigned long p, const std::vector<std::vector<py::object>>& basis, const std::vector<std::vector<py::object>>& gram,
           bool alternating) {
            return fraction(gram_discriminant(LatticeZp::make(p, to_matrix(basis)), BilinearForm::make(to_matrix(gram), alternating)));
        },
        py::arg("prime"), py::arg("basis"), py::arg("gram"), py::arg("alternating") = false);

    m.def("delta_coefficients", [](long bound) {
        py::list out;
        QSeries d = delta(bound);
        for (long n = 0; n <= d.precision(); ++n) out.append(fraction(d[n]));
        return out;
    }, py::arg("bound"));

    m.def("suite_names", [] { return suite_names(); });
    m.def("run_suite", [](const std::string& name) {
        SuiteResult r = run_suite(name);
        py::list checks;
        for (const auto& c : r.checks) {
            py::dict d;
            d["name"] = c.name;
            d["passed"] = c.passed;
            d["total"] = c.total;
            d["ok"] = c.ok();
            d["detail"] = c.detail;
            checks.append(d);
        }
        return checks;
    }, py::arg("name"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"gsp4tool"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int status;
        {
            py::gil_scoped_release release;
            status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        }
        return py::make_tuple(status, out.str(), err.str());
    }, py::arg("args"));
}
