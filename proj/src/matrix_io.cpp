#include "radschrod/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace radschrod {

void write_matrix(std::ostream& out, const Eigen::MatrixXd& mat) {
    out << mat.rows() << " " << mat.cols() << "\n";
    char buf[64];
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
        for (Eigen::Index j = 0; j < mat.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", mat(i, j));
            out << buf << (j + 1 < mat.cols() ? " " : "\n");
        }
    }
}

Eigen::MatrixXd read_matrix(std::istream& in) {
    Eigen::Index rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0)
        throw std::runtime_error("read_matrix: bad header, expected \"rows cols\"");
    Eigen::MatrixXd mat(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            if (!(in >> mat(i, j)))
                throw std::runtime_error("read_matrix: truncated entry list");
    return mat;
}

void write_matrix_file(const std::string& path, const Eigen::MatrixXd& mat) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_matrix(out, mat);
}

}  // namespace radschrod
