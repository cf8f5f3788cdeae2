#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "obslab/extremality.hpp"
#include "obslab/fock.hpp"
#include "obslab/io.hpp"
#include "obslab/kolmogorov.hpp"
#include "obslab/phase_space.hpp"
#include "obslab/quadrature.hpp"
#include "obslab/random_gen.hpp"
#include "obslab/statistics.hpp"

namespace {

using obslab::io::Json;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        obslab::io::write_json_file(out_path, j);
}

void emit_error(const std::string& type, const std::string& message) {
    Json j;
    j["error"] = Json{{"type", type}, {"message", message}};
    std::cerr << j.dump() << '\n';
}

std::string stem_of(const std::string& path) {
    const auto slash = path.find_last_of('/');
    const auto base = (slash == std::string::npos) ? path : path.substr(slash + 1);
    const auto dot = base.find_last_of('.');
    return (dot == std::string::npos) ? base : base.substr(0, dot);
}

obslab::PhaseMatrix load_phase_matrix(const std::string& path) {
    return obslab::PhaseMatrix(obslab::io::read_matrix_file(path));
}

obslab::QuadratureKernel load_kernel(const std::string& path) {
    return obslab::io::kernel_from_json(obslab::io::read_json_file(path));
}

// Fails with exit 2 when the rank cut is ambiguous; every downstream
// number would silently depend on the tolerance otherwise.
void require_stable(bool degenerate) {
    if (degenerate)
        throw obslab::DegenerateTolerance(
            "rank cut is ambiguous at this tolerance; adjust --tol");
}

int cmd_validate(const std::string& path) {
    const Eigen::MatrixXcd m = obslab::io::read_matrix_file(path);
    const obslab::ValidationReport report = obslab::validate_phase_matrix(m);
    Json j;
    j["valid"] = report.ok();
    j["d"] = m.rows();
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back(v.describe());
    if (report.ok()) {
        const int rank = obslab::rank_of(obslab::PhaseMatrix(m));
        j["rank"] = rank;
        j["verdict"] = "valid, rank " + std::to_string(rank);
    } else {
        j["verdict"] = "invalid";
    }
    j["violations"] = violations;
    std::cout << j.dump(2) << '\n';
    if (!report.ok()) {
        emit_error("InvalidPhaseMatrix", report.summary());
        return 1;
    }
    return 0;
}

int cmd_decompose(const std::string& path, double tol, const std::string& out) {
    const obslab::KolmogorovFamily fam = obslab::kolmogorov_decompose(load_phase_matrix(path), tol);
    require_stable(fam.degenerate_tolerance());
    emit(obslab::io::family_json(fam), out);
    return 0;
}

int cmd_rank(const std::string& path, double tol) {
    const obslab::KolmogorovFamily fam = obslab::kolmogorov_decompose(load_phase_matrix(path), tol);
    require_stable(fam.degenerate_tolerance());
    Json j;
    j["d"] = fam.size();
    j["rank"] = fam.rank();
    j["tol"] = tol;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_extreme(const std::string& path, double tol, const std::string& out) {
    const obslab::ExtremalityCertificate cert =
        obslab::analyze_extremality(load_phase_matrix(path), tol);
    require_stable(cert.degenerate_tolerance);
    emit(obslab::io::certificate_json(cert), out);
    return 0;
}

int cmd_split(const std::string& path, double tol, double eps, std::string out_plus,
              std::string out_minus) {
    const obslab::PhaseMatrix c = load_phase_matrix(path);
    const obslab::KolmogorovFamily fam = obslab::kolmogorov_decompose(c, tol);
    require_stable(fam.degenerate_tolerance());
    const auto witness = obslab::find_witness(fam, tol);
    if (!witness)
        throw obslab::InvalidInput("split: observable is extreme, no convex split exists");
    const obslab::ConvexSplit split = obslab::convex_split(c, fam, *witness, eps);
    if (out_plus.empty()) out_plus = stem_of(path) + "_plus.json";
    if (out_minus.empty()) out_minus = stem_of(path) + "_minus.json";
    obslab::io::write_matrix_file(out_plus, split.plus.coefficients());
    obslab::io::write_matrix_file(out_minus, split.minus.coefficients());
    Json j;
    j["epsilon"] = split.epsilon;
    j["weight"] = 0.5;
    j["c_plus"] = out_plus;
    j["c_minus"] = out_minus;
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_density(const std::string& matrix_path, double z_re, double z_im, int d_override,
                int grid, const std::string& out) {
    obslab::PhaseMatrix c = load_phase_matrix(matrix_path);
    if (d_override > 0) {
        if (d_override > c.dim())
            throw obslab::InvalidInput("density: --d exceeds the matrix dimension");
        c = obslab::PhaseMatrix(c.coefficients().topLeftCorner(d_override, d_override));
    }
    const obslab::PhaseDensity density =
        obslab::density_profile(c, std::complex<double>(z_re, z_im), grid);
    if (out.empty()) {
        obslab::io::write_density_csv(std::cout, density);
    } else {
        std::ofstream os(out);
        if (!os) throw obslab::InvalidInput("cannot write file: " + out);
        obslab::io::write_density_csv(os, density);
    }
    return 0;
}

int cmd_et(const std::string& weights_arg, int d, int nodes, double rmax,
           const std::string& out) {
    Json wj;
    if (!weights_arg.empty() && weights_arg[0] == '@')
        wj = obslab::io::read_json_file(weights_arg.substr(1));
    else
        wj = Json::parse(weights_arg, nullptr, true);
    if (!wj.is_array() || wj.empty())
        throw obslab::BadState("et: weights must be a nonempty JSON list");
    Eigen::VectorXd weights(wj.size());
    for (std::size_t i = 0; i < wj.size(); ++i) weights(i) = wj.at(i).get<double>();

    const obslab::DiagonalState state{weights};
    std::optional<obslab::RadialQuadrature> quad;
    if (nodes > 0 || rmax > 0.0) {
        obslab::RadialQuadrature q = obslab::RadialQuadrature::defaults(d, state.levels());
        if (nodes > 0) q.nodes = nodes;
        if (rmax > 0.0) q.r_max = rmax;
        quad = q;
    }
    const obslab::PhaseMatrix c = obslab::et_phase_matrix(state, d, quad);
    emit(obslab::io::phase_matrix_json(c.coefficients()), out);
    return 0;
}

int cmd_quad_kernel(const std::string& type, int n, double p0, bool p0_set, double h,
                    double theta, double mean, double sigma, double a, double b, double at,
                    const std::string& out) {
    const double start = p0_set ? p0 : -0.5 * h * (n - 1);
    const obslab::MomentumGrid grid(start, h, n);
    obslab::QuadratureKernel kernel = [&] {
        if (type == "sharp") return obslab::sharp_kernel(grid, theta);
        if (type == "gaussian")
            return obslab::convolution_kernel(obslab::ProbabilityMeasure::gaussian(mean, sigma),
                                              grid, theta);
        if (type == "uniform")
            return obslab::convolution_kernel(obslab::ProbabilityMeasure::uniform(a, b), grid,
                                              theta);
        if (type == "point")
            return obslab::convolution_kernel(obslab::ProbabilityMeasure::point_mass(at), grid,
                                              theta);
        throw obslab::InvalidInput("quad kernel: unknown --type " + type);
    }();
    emit(obslab::io::kernel_json(kernel), out);
    return 0;
}

int cmd_report(std::uint64_t seed, int samples, int d, const std::string& out) {
    std::mt19937_64 rng(seed);
    Json checks = Json::array();
    bool all_pass = true;
    const auto push = [&](const std::string& name, bool pass, Json details) {
        details["name"] = name;
        details["pass"] = pass;
        checks.push_back(std::move(details));
        all_pass = all_pass && pass;
    };

    // Peak dominance and normalization over a random ensemble.
    {
        const std::vector<double> amplitudes = {0.5, 1.0, 2.0};
        bool dominated = true;
        double worst_margin = 0.0;
        double worst_norm = 0.0;
        std::uniform_int_distribution<int> rank_dist(1, d);
        for (int s = 0; s < samples; ++s) {
            const obslab::PhaseMatrix c = obslab::random_phase_matrix(rng, d, rank_dist(rng));
            for (double az : amplitudes) {
                const auto peak = obslab::peak_dominance(c, az);
                dominated = dominated && peak.dominated;
                worst_margin = std::max(worst_margin, peak.candidate - peak.canonical);
                if (s < 10) {
                    const auto profile = obslab::density_profile(c, az);
                    worst_norm = std::max(
                        worst_norm,
                        std::abs(profile.normalization() - profile.expected_normalization()));
                }
            }
        }
        push("peak_dominance", dominated,
             Json{{"samples", samples}, {"worst_margin", worst_margin}});
        push("normalization", worst_norm < 1e-8, Json{{"worst_error", worst_norm}});
    }

    // Uncertainty product along growing amplitudes.
    {
        const std::vector<double> amplitudes = {3.0, 5.0, 7.0};
        std::vector<double> products;
        for (double az : amplitudes) products.push_back(obslab::uncertainty_product(az).product);
        const bool decreasing = products[0] > products[1] && products[1] > products[2];
        const bool bracket = products[2] >= 0.5 && products[2] <= 0.55;
        push("uncertainty_product", decreasing && bracket,
             Json{{"amplitudes", amplitudes}, {"products", products}});
    }

    // Delta-limit widths.
    {
        const std::vector<double> amplitudes = {1.0, 2.0, 4.0, 8.0};
        const std::vector<double> widths = obslab::delta_limit_widths(amplitudes);
        bool decreasing = true;
        for (std::size_t i = 0; i + 1 < widths.size(); ++i)
            decreasing = decreasing && widths[i + 1] < widths[i];
        const double ratio = widths[3] / widths[2];
        push("delta_widths", decreasing && ratio >= 0.4 && ratio <= 0.6,
             Json{{"amplitudes", amplitudes}, {"widths", widths}, {"tail_ratio", ratio}});
    }

    Json j;
    j["seed"] = seed;
    j["checks"] = checks;
    j["all_pass"] = all_pass;
    emit(j, out);
    if (!all_pass) throw obslab::NumericalFailure("report: a property check failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covariant phase observables and fuzzy rotated quadratures at finite truncation"};
    app.require_subcommand(1);

    std::string in_path, out_path, out_plus, out_minus;
    double tol = obslab::kDefaultRankTol;
    double eps = 0.0;

    auto* validate = app.add_subcommand("validate", "Check the phase-matrix invariants");
    validate->add_option("matrix", in_path, "matrix file (.json or .csv)")->required();

    auto* decompose =
        app.add_subcommand("decompose", "Minimal Kolmogorov decomposition of a phase matrix");
    decompose->add_option("matrix", in_path)->required();
    decompose->add_option("--tol", tol, "relative rank tolerance");
    decompose->add_option("-o,--output", out_path, "output file (default: stdout)");

    auto* rank = app.add_subcommand("rank", "Rank of a phase matrix");
    rank->add_option("matrix", in_path)->required();
    rank->add_option("--tol", tol);

    auto* extreme = app.add_subcommand("extreme", "Extremality certificate for a phase matrix");
    extreme->add_option("matrix", in_path)->required();
    extreme->add_option("--tol", tol);
    extreme->add_option("-o,--output", out_path);

    auto* split = app.add_subcommand("split", "Convex split of a non-extreme phase matrix");
    split->add_option("matrix", in_path)->required();
    split->add_option("--tol", tol);
    split->add_option("--eps", eps, "mixing strength (default 1/(2||A||))");
    split->add_option("--out-plus", out_plus);
    split->add_option("--out-minus", out_minus);

    double z_re = 0.0, z_im = 0.0;
    int d_override = 0, grid = 4096;
    auto* density = app.add_subcommand("density", "Coherent-state phase density sweep (CSV)");
    density->add_option("--matrix", in_path, "phase matrix file")->required();
    density->add_option("--z-re", z_re, "Re z");
    density->add_option("--z-im", z_im, "Im z");
    density->add_option("--d", d_override, "truncate the matrix to its top-left d x d block");
    density->add_option("--grid", grid, "grid points (must exceed 2d)");
    density->add_option("-o,--output", out_path);

    std::string weights_arg;
    int et_d = 8, et_nodes = 0;
    double et_rmax = 0.0;
    auto* et = app.add_subcommand("et", "Phase matrix of a phase-space observable E_T");
    et->add_option("weights", weights_arg, "JSON list of diagonal weights, or @file")->required();
    et->add_option("--d", et_d, "truncation dimension");
    et->add_option("--nodes", et_nodes, "radial quadrature nodes (default 4(d+k))");
    et->add_option("--rmax", et_rmax, "radial cutoff (default sqrt(2(d+k))+6)");
    et->add_option("-o,--output", out_path);

    auto* quad = app.add_subcommand("quad", "Fuzzy rotated quadrature kernels");
    quad->require_subcommand(1);
    std::string kernel_type = "sharp";
    int qn = 8;
    double qp0 = 0.0, qh = 1.0, qtheta = 0.0;
    double qmean = 0.0, qsigma = 1.0, qa = -1.0, qb = 1.0, qat = 0.0;
    auto* qkernel = quad->add_subcommand("kernel", "Build a kernel on a uniform momentum grid");
    qkernel->add_option("--type", kernel_type, "sharp|gaussian|uniform|point")->required();
    qkernel->add_option("--n", qn, "grid points");
    auto* p0_opt = qkernel->add_option("--p0", qp0, "first grid point (default: centered)");
    qkernel->add_option("--h", qh, "grid spacing");
    qkernel->add_option("--theta", qtheta, "rotation angle tag");
    qkernel->add_option("--mean", qmean, "gaussian mean");
    qkernel->add_option("--sigma", qsigma, "gaussian sigma");
    qkernel->add_option("--a", qa, "uniform lower end");
    qkernel->add_option("--b", qb, "uniform upper end");
    qkernel->add_option("--at", qat, "point-mass location");
    qkernel->add_option("-o,--output", out_path);

    double ca = 0.0, cb = 1.0, cq = 0.0;
    auto* qcov = quad->add_subcommand("check-cov", "Covariance identity deviation on an interval");
    qcov->add_option("kernel", in_path)->required();
    qcov->add_option("--a", ca, "interval start")->required();
    qcov->add_option("--b", cb, "interval end")->required();
    qcov->add_option("--q", cq, "shift")->required();

    auto* qinv = quad->add_subcommand("check-inv", "Toeplitz/invariance check");
    qinv->add_option("kernel", in_path)->required();

    auto* qextreme = quad->add_subcommand("extreme", "Extremality certificate for a kernel");
    qextreme->add_option("kernel", in_path)->required();
    qextreme->add_option("--tol", tol);
    qextreme->add_option("-o,--output", out_path);

    std::uint64_t seed = 20260809;
    int samples = 100, report_d = 16;
    auto* report = app.add_subcommand("report", "Canonical-phase property suite (JSON summary)");
    report->add_option("--seed", seed, "RNG seed");
    report->add_option("--samples", samples, "random matrices for the dominance check");
    report->add_option("--random-d", report_d, "dimension of the random matrices");
    report->add_option("-o,--output", out_path);

    try {
        app.parse(argc, argv);

        if (*validate) return cmd_validate(in_path);
        if (*decompose) return cmd_decompose(in_path, tol, out_path);
        if (*rank) return cmd_rank(in_path, tol);
        if (*extreme) return cmd_extreme(in_path, tol, out_path);
        if (*split) return cmd_split(in_path, tol, eps, out_plus, out_minus);
        if (*density) return cmd_density(in_path, z_re, z_im, d_override, grid, out_path);
        if (*et) return cmd_et(weights_arg, et_d, et_nodes, et_rmax, out_path);
        if (*quad) {
            if (*qkernel)
                return cmd_quad_kernel(kernel_type, qn, qp0, p0_opt->count() > 0, qh, qtheta,
                                       qmean, qsigma, qa, qb, qat, out_path);
            if (*qcov) {
                const double dev = obslab::covariance_deviation(load_kernel(in_path), ca, cb, cq);
                Json j{{"deviation", dev}, {"pass", dev < 1e-12}};
                std::cout << j.dump(2) << '\n';
                return 0;
            }
            if (*qinv) {
                const bool toeplitz = obslab::invariance_check(load_kernel(in_path));
                Json j{{"invariant", toeplitz}};
                std::cout << j.dump(2) << '\n';
                return 0;
            }
            if (*qextreme) {
                const auto cert = obslab::quadrature_extremality(load_kernel(in_path), tol);
                require_stable(cert.degenerate_tolerance);
                emit(obslab::io::certificate_json(cert), out_path);
                return 0;
            }
        }
        if (*report) return cmd_report(seed, samples, report_d, out_path);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        emit_error("ParseError", e.what());
        return 1;
    } catch (const obslab::NumericalFailure& e) {
        emit_error("NumericalFailure", e.what());
        return 2;
    } catch (const obslab::InvalidInput& e) {
        emit_error("InvalidInput", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("InvalidInput", e.what());
        return 1;
    }
}
