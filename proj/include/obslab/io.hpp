#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "obslab/extremality.hpp"
#include "obslab/kolmogorov.hpp"
#include "obslab/quadrature.hpp"
#include "obslab/statistics.hpp"

namespace obslab::io {

using Json = nlohmann::ordered_json;

/// {"re": [[...]], "im": [[...]]}
Json matrix_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

/// Phase matrix file: {"d": n, "re": ..., "im": ...}
Json phase_matrix_json(const Eigen::MatrixXcd& m);

/// Kernel file: the matrix schema plus {"grid": {"p0", "h", "n"}, "theta"}.
Json kernel_json(const QuadratureKernel& k);
QuadratureKernel kernel_from_json(const Json& j);

Json family_json(const KolmogorovFamily& fam);
Json certificate_json(const ExtremalityCertificate& cert);

/// Reads a complex matrix from .json ({"re","im"} schema) or .csv
/// (interleaved re/im columns), keyed on the file extension.
Eigen::MatrixXcd read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Eigen::MatrixXcd& m);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// CSV with interleaved re/im columns (re00,im00,re01,...), one row per
/// matrix row; 17 significant digits.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXcd& m);
Eigen::MatrixXcd read_matrix_csv(std::istream& is);

/// Density sweep: a JSON header comment line with z, d and the tail
/// bound, then a theta,g table.
void write_density_csv(std::ostream& os, const PhaseDensity& density);

/// Shortest-round-trip decimal for doubles used across all CSV output.
std::string format_double(double value);

}  // namespace obslab::io
