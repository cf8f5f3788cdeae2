#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "obslab/extremality.hpp"
#include "obslab/fock.hpp"
#include "obslab/kolmogorov.hpp"
#include "obslab/phase_space.hpp"
#include "obslab/quadrature.hpp"
#include "obslab/random_gen.hpp"
#include "obslab/statistics.hpp"

namespace py = pybind11;
using namespace obslab;

namespace {

py::dict certificate_dict(const ExtremalityCertificate& cert) {
    py::dict d;
    d["extreme"] = cert.extreme;
    d["rank"] = cert.rank;
    d["constraint_rank"] = cert.constraint_rank;
    d["r_squared"] = cert.r_squared;
    d["degenerate_tolerance"] = cert.degenerate_tolerance;
    if (cert.witness) d["witness"] = *cert.witness;
    if (cert.split) {
        py::dict s;
        s["epsilon"] = cert.split->epsilon;
        s["c_plus"] = cert.split->plus.coefficients();
        s["c_minus"] = cert.split->minus.coefficients();
        d["split"] = s;
    }
    return d;
}

PhaseMatrix as_phase_matrix(const Eigen::MatrixXcd& c) { return PhaseMatrix(c); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Covariant phase observables and fuzzy rotated quadratures at finite truncation";

    py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<NumericalFailure>(m, "NumericalFailureError", PyExc_ArithmeticError);

    // Fock-space primitives
    m.def("coherent_vector", &fock::coherent_vector, py::arg("z"), py::arg("d"));
    m.def("coherent_tail", &fock::coherent_tail, py::arg("z"), py::arg("d"));
    m.def("poisson_partial_sum", &fock::poisson_partial_sum, py::arg("lam"), py::arg("d"));
    m.def("auto_truncation", &fock::auto_truncation, py::arg("abs_z"));
    m.def("number_operator", &fock::number_operator, py::arg("d"));
    m.def("lowering_operator", &fock::lowering_operator, py::arg("d"));
    m.def("quadrature_q", &fock::quadrature_q, py::arg("d"));
    m.def("rotation", &fock::rotation, py::arg("theta"), py::arg("d"));
    m.def("displacement_element", &fock::displacement_element, py::arg("m"), py::arg("n"),
          py::arg("r"));
    m.def("displacement_matrix", &fock::displacement_matrix, py::arg("rows"), py::arg("cols"),
          py::arg("r"));

    // Phase matrices
    m.def("canonical_matrix",
          [](int d) { return PhaseMatrix::canonical(d).coefficients(); }, py::arg("d"));
    m.def("trivial_matrix", [](int d) { return PhaseMatrix::trivial(d).coefficients(); },
          py::arg("d"));
    m.def(
        "validate",
        [](const Eigen::MatrixXcd& c) {
            const ValidationReport report = validate_phase_matrix(c);
            py::list violations;
            for (const auto& v : report.violations) violations.append(v.describe());
            return py::make_tuple(report.ok(), violations);
        },
        py::arg("c"), "Returns (valid, list of violated invariants).");
    m.def(
        "interval_operator",
        [](const Eigen::MatrixXcd& c, double a, double b) {
            return interval_operator(as_phase_matrix(c), a, b);
        },
        py::arg("c"), py::arg("a"), py::arg("b"));

    // Kolmogorov decomposition
    m.def(
        "kolmogorov_decompose",
        [](const Eigen::MatrixXcd& c, double tol) {
            const KolmogorovFamily fam = kolmogorov_decompose(as_phase_matrix(c), tol);
            py::dict d;
            d["rank"] = fam.rank();
            d["vectors"] = fam.vectors();
            d["degenerate_tolerance"] = fam.degenerate_tolerance();
            return d;
        },
        py::arg("c"), py::arg("tol") = kDefaultRankTol,
        "Unit vectors eta_n (columns) with <eta_m|eta_n> = c_mn.");
    m.def(
        "rank",
        [](const Eigen::MatrixXcd& c, double tol) { return rank_of(as_phase_matrix(c), tol); },
        py::arg("c"), py::arg("tol") = kDefaultRankTol);
    m.def(
        "rank_one_phases",
        [](const Eigen::MatrixXcd& c) { return rank_one_canonical_form(as_phase_matrix(c)).alpha; },
        py::arg("c"), "Phases alpha_n with c_mn = e^{i(alpha_m - alpha_n)}, alpha_0 = 0.");

    // Extremality
    m.def(
        "extremality",
        [](const Eigen::MatrixXcd& c, double tol) {
            return certificate_dict(analyze_extremality(as_phase_matrix(c), tol));
        },
        py::arg("c"), py::arg("tol") = kDefaultRankTol);

    // Statistics
    m.def(
        "density",
        [](const Eigen::MatrixXcd& c, std::complex<double> z, double theta) {
            return density(as_phase_matrix(c), z, theta);
        },
        py::arg("c"), py::arg("z"), py::arg("theta"));
    m.def(
        "density_profile",
        [](const Eigen::MatrixXcd& c, std::complex<double> z, int grid) {
            const PhaseDensity profile = density_profile(as_phase_matrix(c), z, grid);
            py::dict d;
            d["values"] = profile.values;
            d["tail_bound"] = profile.tail_bound;
            d["normalization"] = profile.normalization();
            d["expected_normalization"] = profile.expected_normalization();
            return d;
        },
        py::arg("c"), py::arg("z"), py::arg("grid") = 4096);
    m.def(
        "peak_dominance",
        [](const Eigen::MatrixXcd& c, std::complex<double> z) {
            const PeakDominance p = peak_dominance(as_phase_matrix(c), z);
            return py::make_tuple(p.candidate, p.canonical, p.dominated);
        },
        py::arg("c"), py::arg("z"));
    m.def("min_circular_deviation",
          py::overload_cast<const Eigen::VectorXd&>(&min_circular_deviation), py::arg("values"));
    m.def("number_deviation", &number_deviation, py::arg("z"), py::arg("d"));
    m.def(
        "uncertainty_product",
        [](double abs_z, int d, int grid) {
            const UncertaintyReport r = uncertainty_product(abs_z, d, grid);
            return py::make_tuple(r.delta_phase, r.delta_number, r.product);
        },
        py::arg("abs_z"), py::arg("d") = 0, py::arg("grid") = 4096);
    m.def("delta_limit_widths", &delta_limit_widths, py::arg("amplitudes"),
          py::arg("grid") = 4096);

    // Phase-space observables E_T
    m.def(
        "et_phase_matrix",
        [](const Eigen::VectorXd& weights, int d) {
            return et_phase_matrix(DiagonalState(weights), d).coefficients();
        },
        py::arg("weights"), py::arg("d"));

    // Quadrature kernels
    m.def(
        "sharp_kernel",
        [](double p0, double h, int n, double theta) {
            return sharp_kernel(MomentumGrid(p0, h, n), theta).kernel.coefficients();
        },
        py::arg("p0"), py::arg("h"), py::arg("n"), py::arg("theta") = 0.0);
    m.def(
        "gaussian_kernel",
        [](double p0, double h, int n, double mean, double sigma, double theta) {
            return convolution_kernel(ProbabilityMeasure::gaussian(mean, sigma),
                                      MomentumGrid(p0, h, n), theta)
                .kernel.coefficients();
        },
        py::arg("p0"), py::arg("h"), py::arg("n"), py::arg("mean") = 0.0,
        py::arg("sigma") = 1.0, py::arg("theta") = 0.0);
    m.def(
        "uniform_kernel",
        [](double p0, double h, int n, double a, double b, double theta) {
            return convolution_kernel(ProbabilityMeasure::uniform(a, b), MomentumGrid(p0, h, n),
                                      theta)
                .kernel.coefficients();
        },
        py::arg("p0"), py::arg("h"), py::arg("n"), py::arg("a") = -1.0, py::arg("b") = 1.0,
        py::arg("theta") = 0.0);
    m.def(
        "kernel_extremality",
        [](const Eigen::MatrixXcd& k, double p0, double h, double tol) {
            const QuadratureKernel kernel{MomentumGrid(p0, h, static_cast<int>(k.rows())), 0.0,
                                          PhaseMatrix(k)};
            return certificate_dict(quadrature_extremality(kernel, tol));
        },
        py::arg("k"), py::arg("p0"), py::arg("h"), py::arg("tol") = kDefaultRankTol);
    m.def(
        "rotate_frame",
        [](double theta, int d) {
            const RotatedFrame f = rotate_frame(theta, d);
            return py::make_tuple(f.q, f.p);
        },
        py::arg("theta"), py::arg("d"));

    m.attr("__version__") = "0.1.0";
}
