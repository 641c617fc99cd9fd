#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>

namespace radschrod {

/// Plain-text matrix exchange format: a header line "rows cols" followed by
/// the entries in row-major order, 17 significant digits (round-trip exact).
void write_matrix(std::ostream& out, const Eigen::MatrixXd& mat);
Eigen::MatrixXd read_matrix(std::istream& in);

void write_matrix_file(const std::string& path, const Eigen::MatrixXd& mat);

}  // namespace radschrod
