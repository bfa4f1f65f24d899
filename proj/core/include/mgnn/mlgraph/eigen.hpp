#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace mgnn {

/// Eigenvalues of a dense symmetric n x n matrix (row-major), ascending.
///
/// Householder reduction to tridiagonal form followed by implicit QL with
/// Wilkinson-style shifts. Only the lower triangle is read. Throws
/// std::runtime_error if QL fails to converge.
std::vector<double> symmetric_eigenvalues(std::span<const double> matrix, std::size_t n);

/// Eigenvalues of a symmetric tridiagonal matrix given its diagonal and
/// sub-diagonal (off.size() == diag.size() - 1), ascending.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off);

}  // namespace mgnn
