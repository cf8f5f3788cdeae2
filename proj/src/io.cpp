#include "obslab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace obslab::io {

namespace {

Json real_part_rows(const Eigen::MatrixXcd& m, bool imag) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(imag ? m(i, j).imag() : m(i, j).real());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

Json matrix_json(const Eigen::MatrixXcd& m) {
    Json j;
    j["re"] = real_part_rows(m, false);
    j["im"] = real_part_rows(m, true);
    return j;
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
    if (!j.contains("re") || !j.contains("im"))
        throw InvalidInput("matrix json: missing re/im fields");
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    const auto rows = re.size();
    if (rows == 0 || im.size() != rows)
        throw InvalidInput("matrix json: re/im row counts differ or empty");
    const auto cols = re.at(0).size();
    Eigen::MatrixXcd m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (re.at(i).size() != cols || im.at(i).size() != cols)
            throw InvalidInput("matrix json: ragged rows");
        for (std::size_t j2 = 0; j2 < cols; ++j2)
            m(i, j2) = std::complex<double>(re.at(i).at(j2).get<double>(),
                                            im.at(i).at(j2).get<double>());
    }
    return m;
}

Json phase_matrix_json(const Eigen::MatrixXcd& m) {
    Json j;
    j["d"] = m.rows();
    j.update(matrix_json(m));
    return j;
}

Json kernel_json(const QuadratureKernel& k) {
    Json j = phase_matrix_json(k.kernel.coefficients());
    j["grid"] = Json{{"p0", k.grid.p0()}, {"h", k.grid.spacing()}, {"n", k.grid.size()}};
    j["theta"] = k.theta;
    return j;
}

QuadratureKernel kernel_from_json(const Json& j) {
    if (!j.contains("grid")) throw InvalidInput("kernel json: missing grid block");
    const auto& g = j.at("grid");
    MomentumGrid grid(g.at("p0").get<double>(), g.at("h").get<double>(), g.at("n").get<int>());
    Eigen::MatrixXcd m = matrix_from_json(j);
    if (m.rows() != grid.size()) throw InvalidInput("kernel json: matrix size != grid size");
    return QuadratureKernel{grid, j.value("theta", 0.0), PhaseMatrix(std::move(m))};
}

Json family_json(const KolmogorovFamily& fam) {
    Json j;
    j["d"] = fam.size();
    j["r"] = fam.rank();
    j["tol"] = fam.tolerance();
    j["degenerate_tolerance"] = fam.degenerate_tolerance();
    // Row n is eta_n in the r-dimensional auxiliary space.
    j["eta_re"] = real_part_rows(fam.vectors().transpose(), false);
    j["eta_im"] = real_part_rows(fam.vectors().transpose(), true);
    return j;
}

Json certificate_json(const ExtremalityCertificate& cert) {
    Json j;
    j["verdict"] = cert.extreme ? "extreme" : "not_extreme";
    j["rank"] = cert.rank;
    j["constraint_rank"] = cert.constraint_rank;
    j["r_squared"] = cert.r_squared;
    j["degenerate_tolerance"] = cert.degenerate_tolerance;
    if (cert.witness) j["witness"] = matrix_json(*cert.witness);
    if (cert.split) {
        j["split"] = Json{{"weight", 0.5},
                          {"epsilon", cert.split->epsilon},
                          {"c_plus", phase_matrix_json(cert.split->plus.coefficients())},
                          {"c_minus", phase_matrix_json(cert.split->minus.coefficients())}};
    }
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
        }
        os << '\n';
    }
}

Eigen::MatrixXcd read_matrix_csv(std::istream& is) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidInput("matrix csv: no rows");
    const std::size_t cols = rows[0].size();
    if (cols % 2 != 0) throw InvalidInput("matrix csv: need interleaved re/im columns");
    Eigen::MatrixXcd m(rows.size(), cols / 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("matrix csv: ragged rows");
        for (std::size_t j = 0; j < cols / 2; ++j)
            m(i, j) = std::complex<double>(rows[i][2 * j], rows[i][2 * j + 1]);
    }
    return m;
}

Eigen::MatrixXcd read_matrix_file(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot open file: " + path);
        return read_matrix_csv(in);
    }
    return matrix_from_json(read_json_file(path));
}

void write_matrix_file(const std::string& path, const Eigen::MatrixXcd& m) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        std::ofstream out(path);
        if (!out) throw InvalidInput("cannot write file: " + path);
        write_matrix_csv(out, m);
        return;
    }
    write_json_file(path, phase_matrix_json(m));
}

void write_density_csv(std::ostream& os, const PhaseDensity& density) {
    Json header;
    header["z_re"] = density.z.real();
    header["z_im"] = density.z.imag();
    header["d"] = density.d;
    header["tail_bound"] = density.tail_bound;
    os << "# " << header.dump() << '\n';
    os << "theta,g\n";
    for (int k = 0; k < density.grid_size(); ++k)
        os << format_double(density.theta(k)) << ',' << format_double(density.values(k)) << '\n';
}

}  // namespace obslab::io
