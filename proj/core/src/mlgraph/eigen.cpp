#include "mgnn/mlgraph/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mgnn {

namespace {

constexpr int kMaxQlIterations = 60;

// Householder tridiagonalization, eigenvalues-only variant. On return
// diag holds the diagonal and off[i] the element coupling rows i-1 and i
// (off[0] == 0).
void householder_tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& diag,
                                std::vector<double>& off) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  diag.assign(n, 0.0);
  off.assign(n, 0.0);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        off[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        off[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          off[j] = g / h;
          f += off[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = at(i, j);
          g = off[j] - hh * f;
          off[j] = g;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= (f * off[k] + g * at(i, k));
        }
      }
    } else {
      off[i] = at(i, l);
    }
    diag[i] = h;
  }
  off[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
}

// Implicit QL on a tridiagonal matrix; off[i] couples rows i and i+1.
void implicit_ql(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxQlIterations) {
          throw std::runtime_error("symmetric eigensolver: QL iteration did not converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        bool underflow = false;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag, std::vector<double> off) {
  if (diag.empty()) return {};
  if (off.size() + 1 != diag.size()) {
    throw std::invalid_argument("tridiagonal_eigenvalues: off-diagonal must have n-1 entries");
  }
  off.push_back(0.0);
  implicit_ql(diag, off);
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<double> symmetric_eigenvalues(std::span<const double> matrix, std::size_t n) {
  if (matrix.size() != n * n) throw std::invalid_argument("symmetric_eigenvalues: matrix is not n x n");
  if (n == 0) return {};
  if (n == 1) return {matrix[0]};
  std::vector<double> a(matrix.begin(), matrix.end());
  std::vector<double> diag;
  std::vector<double> off;
  householder_tridiagonalize(a, n, diag, off);
  // Shift so that off[i] couples rows i and i+1.
  std::vector<double> sub(off.begin() + 1, off.end());
  return tridiagonal_eigenvalues(std::move(diag), std::move(sub));
}

}  // namespace mgnn
