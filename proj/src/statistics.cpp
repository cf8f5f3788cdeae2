#include "obslab/statistics.hpp"

#include <cmath>
#include <numbers>

#include "obslab/fock.hpp"
#include "obslab/parallel.hpp"

namespace obslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double PhaseDensity::theta(int k) const { return kTwoPi * k / grid_size(); }

double PhaseDensity::expected_normalization() const {
    return fock::poisson_partial_sum(std::norm(z), d);
}

double density(const PhaseMatrix& c, Complex z, double theta) {
    const int d = c.dim();
    const Eigen::VectorXcd v = fock::coherent_vector(z, d);
    Eigen::VectorXcd u(d);
    for (int m = 0; m < d; ++m) u(m) = v(m) * std::polar(1.0, -m * theta);
    const Complex g = (u.adjoint() * c.coefficients() * u).value();
    if (std::abs(g.imag()) > 1e-12)
        throw ImaginaryResidue("density: imaginary residue " + std::to_string(g.imag()));
    return g.real();
}

PhaseDensity density_profile(const PhaseMatrix& c, Complex z, int grid_size) {
    const int d = c.dim();
    if (grid_size <= 2 * d)
        throw GridTooCoarse("density_profile: grid must exceed 2d for exact quadrature");

    // g(theta) = b_0 + 2 Re sum_{k>=1} b_k e^{ik theta} with the diagonal
    // sums b_k = sum_n c_{n+k,n} conj(v_{n+k}) v_n.  Hermiticity of c
    // folds the k < 0 half into the real part.
    const Eigen::VectorXcd v = fock::coherent_vector(z, d);
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(d);
    for (int k = 0; k < d; ++k)
        for (int n = 0; n + k < d; ++n)
            b(k) += c.coefficients()(n + k, n) * std::conj(v(n + k)) * v(n);

    PhaseDensity out;
    out.z = z;
    out.d = d;
    out.tail_bound = fock::coherent_tail(z, d);
    out.values.resize(grid_size);
    parallel_for(grid_size, [&](int begin, int end) {
        for (int j = begin; j < end; ++j) {
            const double theta = kTwoPi * j / grid_size;
            Complex acc = 0.0;
            for (int k = 1; k < d; ++k) acc += b(k) * std::polar(1.0, k * theta);
            out.values(j) = b(0).real() + 2.0 * acc.real();
        }
    });
    return out;
}

PeakDominance peak_dominance(const PhaseMatrix& c, Complex z) {
    PeakDominance out;
    out.candidate = density(c, z, std::arg(z));
    // At theta = arg z the canonical quadratic form is (sum_n |v_n|)^2.
    const Eigen::VectorXcd v = fock::coherent_vector(z, c.dim());
    const double s = v.cwiseAbs().sum();
    out.canonical = s * s;
    out.dominated = out.candidate <= out.canonical + 1e-10;
    return out;
}

double min_circular_deviation(const Eigen::VectorXd& g) {
    const int n = static_cast<int>(g.size());
    if (n < 512) throw GridTooCoarse("min_circular_deviation: need at least 512 grid points");

    // Prefix sums let every window offset be evaluated in O(1): shifting
    // the window start past grid point j adds 2pi to that point's angle.
    double s0 = 0.0, t1 = 0.0, t2 = 0.0;
    std::vector<double> pre_g(n), pre_tg(n);
    for (int j = 0; j < n; ++j) {
        const double theta = kTwoPi * j / n;
        pre_g[j] = s0;
        pre_tg[j] = t1;
        s0 += g(j);
        t1 += theta * g(j);
        t2 += theta * theta * g(j);
    }
    if (s0 <= 0.0) return 0.0;

    double best = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n; ++s) {
        const double m1 = t1 + kTwoPi * pre_g[s];
        const double m2 = t2 + 2.0 * kTwoPi * pre_tg[s] + kTwoPi * kTwoPi * pre_g[s];
        const double mean = m1 / s0;
        const double var = m2 / s0 - mean * mean;
        best = std::min(best, var);
    }
    return std::sqrt(std::max(best, 0.0));
}

double min_circular_deviation(const PhaseDensity& density) {
    return min_circular_deviation(density.values);
}

double number_deviation(Complex z, int d) {
    const double tail = fock::coherent_tail(z, d);
    if (tail > 1e-10)
        throw TailTooLarge("number_deviation: truncation tail " + std::to_string(tail));
    const Eigen::VectorXcd v = fock::coherent_vector(z, d);
    double total = 0.0, mean = 0.0, second = 0.0;
    for (int n = 0; n < d; ++n) {
        const double p = std::norm(v(n));
        total += p;
        mean += n * p;
        second += static_cast<double>(n) * n * p;
    }
    mean /= total;
    second /= total;
    return std::sqrt(std::max(second - mean * mean, 0.0));
}

UncertaintyReport uncertainty_product(double abs_z, int d, int grid_size) {
    if (d <= 0) d = fock::auto_truncation(abs_z);
    const PhaseMatrix canonical = PhaseMatrix::canonical(d);
    const PhaseDensity profile = density_profile(canonical, abs_z, grid_size);
    UncertaintyReport report;
    report.delta_phase = min_circular_deviation(profile);
    report.delta_number = number_deviation(abs_z, d);
    report.product = report.delta_phase * report.delta_number;
    return report;
}

double full_width_half_max(const PhaseDensity& density) {
    const Eigen::VectorXd& g = density.values;
    const int n = density.grid_size();
    int peak = 0;
    g.maxCoeff(&peak);
    const double half = g(peak) / 2.0;
    if (g.minCoeff() >= half) return kTwoPi;  // never drops below half: flat

    const double step = kTwoPi / n;
    // Walk right from the peak until the density falls below half, then
    // interpolate the crossing; same leftwards.  Indices wrap.
    double right = 0.0;
    for (int off = 1; off <= n; ++off) {
        const double cur = g((peak + off) % n);
        if (cur < half) {
            const double prev = g((peak + off - 1) % n);
            right = step * (off - 1 + (prev - half) / (prev - cur));
            break;
        }
    }
    double left = 0.0;
    for (int off = 1; off <= n; ++off) {
        const double cur = g(((peak - off) % n + n) % n);
        if (cur < half) {
            const double prev = g(((peak - off + 1) % n + n) % n);
            left = step * (off - 1 + (prev - half) / (prev - cur));
            break;
        }
    }
    return left + right;
}

std::vector<double> delta_limit_widths(const std::vector<double>& amplitudes, int grid_size) {
    std::vector<double> widths;
    widths.reserve(amplitudes.size());
    for (double abs_z : amplitudes) {
        const int d = fock::auto_truncation(abs_z);
        const PhaseMatrix canonical = PhaseMatrix::canonical(d);
        widths.push_back(full_width_half_max(density_profile(canonical, abs_z, grid_size)));
    }
    return widths;
}

}  // namespace obslab
