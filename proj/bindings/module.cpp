#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fbt/config.hpp"
#include "fbt/duality.hpp"
#include "fbt/growth.hpp"
#include "fbt/randgen.hpp"

namespace py = pybind11;
using namespace fbt;

namespace {

// exact scalars cross the boundary as strings ("a/b" or "a/b+c/di") so
// no precision is lost; floats are available where the C++ side is
// float-valued anyway
ExactPoint parse_point(const std::vector<std::string>& coords) {
    ExactPoint w;
    for (const std::string& c : coords) {
        Polynomial p = Polynomial::parse(c, 1);
        w.push_back(p.coeff(Monomial{0}));
    }
    return w;
}

}  // namespace

PYBIND11_MODULE(_fbtk, m) {
    m.doc() = "Exact polynomial / exponential-functional toolkit";
    m.attr("__version__") = tool_version();

    py::register_exception<ParseError>(m, "ParseError");

    py::class_<Polynomial>(m, "Polynomial")
        .def_static("parse", &Polynomial::parse, py::arg("text"), py::arg("nvars") = 0)
        .def_property_readonly("nvars", &Polynomial::nvars)
        .def_property_readonly("degree", &Polynomial::degree)
        .def("__str__", &Polynomial::str)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial(" + p.str() + ")"; })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__call__",
             [](const Polynomial& p, const std::vector<std::complex<double>>& z) {
                 return p.eval(z);
             })
        .def("partial", &Polynomial::partial, py::arg("i"));

    m.def("gcd", [](const Polynomial& a, const Polynomial& b) { return gcd(a, b); });
    m.def("divide_exact",
          [](const Polynomial& a, const Polynomial& b) { return divide_exact(a, b); });
    m.def("apply_operator", &apply_operator, py::arg("p"), py::arg("f"),
          "p as a constant-coefficient differential operator applied to f");

    py::class_<ReducednessReport>(m, "ReducednessReport")
        .def_readonly("is_reduced", &ReducednessReport::is_reduced)
        .def_readonly("squarefree_part", &ReducednessReport::squarefree_part)
        .def_readonly("repeated_part", &ReducednessReport::repeated_part);
    m.def("analyze_reducedness", &analyze_reducedness, py::arg("p"));

    m.def(
        "kernel_dim",
        [](const Polynomial& p, int D) { return static_cast<long>(kernel_basis(p, D).size()); },
        py::arg("p"), py::arg("D"));
    m.def(
        "kernel_basis_str",
        [](const Polynomial& p, int D) {
            std::vector<std::string> out;
            for (const Polynomial& f : kernel_basis(p, D)) out.push_back(f.str());
            return out;
        },
        py::arg("p"), py::arg("D"));

    py::class_<VarietySample>(m, "VarietySample")
        .def_readonly("point", &VarietySample::point)
        .def_readonly("residual", &VarietySample::residual)
        .def_readonly("scale", &VarietySample::scale)
        .def_readonly("multiple", &VarietySample::multiple);
    m.def(
        "sample_variety",
        [](const Polynomial& p, int count, std::uint64_t seed) {
            return sample_many(p, count, seed);
        },
        py::arg("p"), py::arg("count"), py::arg("seed") = 1);

    py::enum_<RankVerdict>(m, "RankVerdict")
        .value("saturates", RankVerdict::saturates)
        .value("deficient", RankVerdict::deficient);
    py::class_<RankReport>(m, "RankReport")
        .def_readonly("D", &RankReport::D)
        .def_readonly("kernel_dim", &RankReport::kernel_dim)
        .def_readonly("sample_count", &RankReport::sample_count)
        .def_readonly("numerical_rank", &RankReport::numerical_rank)
        .def_readonly("singular_values", &RankReport::singular_values)
        .def_readonly("verdict", &RankReport::verdict);
    m.def(
        "exp_span_rank",
        [](const Polynomial& p, int D, int samples, std::uint64_t seed, double tol) {
            return exp_span_rank(p, D, sample_many(p, samples, seed), tol);
        },
        py::arg("p"), py::arg("D"), py::arg("samples"), py::arg("seed") = 1,
        py::arg("tol") = 1e-8);

    m.def(
        "diagram_check_random",
        [](int count, std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            for (int k = 0; k < count; ++k) {
                int n = std::uniform_int_distribution<int>(1, 3)(rng);
                Polynomial p = random_polynomial(rng, n, 5, 4);
                ExpFunctional t = random_functional(rng, n, 3, 4);
                if (!diagram_check(p, t).is_zero()) return false;
            }
            return true;
        },
        py::arg("count") = 100, py::arg("seed") = 1,
        "True iff the transform/operator square commutes exactly on `count` random instances");

    m.def(
        "counterexample",
        [](const Polynomial& p, int D, const std::vector<std::string>& v) {
            ExactPoint pt = v.empty()
                                ? find_exact_zero(analyze_reducedness(p).repeated_part)
                                      .value()
                                : parse_point(v);
            auto rec = counterexample(p, D, pt);
            py::dict d;
            d["q"] = rec.q;
            d["repeated_part"] = rec.rp;
            d["kills_p_ideal"] = rec.kills_p_ideal;
            d["unit_on_q"] = rec.unit_on_q;
            return d;
        },
        py::arg("p"), py::arg("D") = 6, py::arg("v") = std::vector<std::string>{});

    py::class_<GrowthCertificate>(m, "GrowthCertificate")
        .def_readonly("A", &GrowthCertificate::A)
        .def_readonly("d", &GrowthCertificate::d)
        .def_readonly("constant", &GrowthCertificate::constant)
        .def_readonly("bound", &GrowthCertificate::bound)
        .def_readonly("attained", &GrowthCertificate::attained)
        .def_readonly("violated", &GrowthCertificate::violated)
        .def_property_readonly(
            "constant_exact",
            [](const GrowthCertificate& c) { return c.constant_exact.get_str(); });
    m.def(
        "lemma31_constant",
        [](int d, const std::string& r) {
            return lemma31_constant(d, Rational(r)).get_str();
        },
        py::arg("d"), py::arg("r"), "4^d / (2 r^d) as an exact rational string");
    m.def(
        "prop33_check",
        [](const Polynomial& p, double A, const Polynomial& F, double R_max, std::uint64_t seed) {
            return prop33_check(p, A, ExpPoly::from_poly(F), R_max, 64, 128, seed);
        },
        py::arg("p"), py::arg("A"), py::arg("F"), py::arg("R_max") = 6.0, py::arg("seed") = 1);
}
