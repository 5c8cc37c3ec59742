#include "scoreh/matrix_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "scoreh/errors.hpp"

namespace scoreh {

void write_matrix_csv(const Matrix& m, std::ostream& out) {
    out << std::setprecision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << m(i, j);
        }
        out << '\n';
    }
}

void write_matrix_csv(const Matrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open for writing: " + path);
    write_matrix_csv(m, out);
}

void write_vector_csv(const Vector& v, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open for writing: " + path);
    out << std::setprecision(17);
    for (Eigen::Index i = 0; i < v.size(); ++i) out << v(i) << '\n';
}

Matrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw InputError("ragged CSV matrix");
        rows.push_back(std::move(row));
    }
    Matrix m(static_cast<Eigen::Index>(rows.size()),
             rows.empty() ? 0 : static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

}  // namespace scoreh
