#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace lapdyn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = std::size_t;
using VertexSet = std::vector<Index>;

/// Maximum absolute row sum.
double inf_norm(const Matrix& m);
double inf_norm(const Vector& v);

/// Row-major CSV, 17 significant digits, no header.
void write_csv(std::ostream& os, const Matrix& m);
std::string format_double(double x);

/// Submatrix m[rows, cols] for arbitrary index lists.
Matrix select(const Matrix& m, const VertexSet& rows, const VertexSet& cols);

/// Indicator vector 1_S of length n.
Vector indicator(Index n, const VertexSet& set);

}  // namespace lapdyn
