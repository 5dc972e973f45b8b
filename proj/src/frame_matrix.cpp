#include "pframe/frame_matrix.hpp"

#include <cmath>
#include <limits>

#include "pframe/errors.hpp"

namespace pframe {

FrameMatrix::FrameMatrix(int rows_, int cols_, std::vector<cplx> alpha_,
                         double tolerance_)
    : rows(rows_), cols(cols_), alpha(std::move(alpha_)), tolerance(tolerance_) {}

FrameMatrix FrameMatrix::walsh_seed() {
  return FrameMatrix(2, 2, {1.0, 1.0, 1.0, -1.0});
}

double ValidationReport::max_deviation() const {
  double dev = std::max(isometry_deviation, first_row_deviation);
  if (!dimensions_ok) dev = std::numeric_limits<double>::infinity();
  return dev;
}

ValidationReport validate(const FrameMatrix& matrix,
                          std::optional<double> tolerance) {
  ValidationReport report;
  report.tolerance = tolerance.value_or(matrix.tolerance);

  const int m = matrix.rows;
  const int n = matrix.cols;
  if (m < 2 || n < 2 ||
      matrix.alpha.size() != static_cast<std::size_t>(m) * n) {
    report.dimensions_ok = false;
    report.issues.push_back(
        {"dimensions", std::numeric_limits<double>::infinity()});
    return report;
  }

  // (1/N) alpha* alpha = I_N, i.e. T*T = I with T = alpha / sqrt(N)
  for (int j = 0; j < n; ++j) {
    for (int jp = 0; jp < n; ++jp) {
      cplx acc{0.0, 0.0};
      for (int i = 0; i < m; ++i)
        acc += std::conj(matrix.at(i, j)) * matrix.at(i, jp);
      acc /= static_cast<double>(n);
      const double target = j == jp ? 1.0 : 0.0;
      report.isometry_deviation =
          std::max(report.isometry_deviation, std::abs(acc - target));
    }
  }

  for (int j = 0; j < n; ++j) {
    report.first_row_deviation =
        std::max(report.first_row_deviation, std::abs(matrix.at(0, j) - 1.0));
  }

  if (report.isometry_deviation > report.tolerance)
    report.issues.push_back({"isometry", report.isometry_deviation});
  if (report.first_row_deviation > report.tolerance)
    report.issues.push_back({"first_row", report.first_row_deviation});
  return report;
}

namespace {

// Orthonormal basis of C^n whose first vector is the normalized all-ones
// vector; columns 1..n-1 span its orthogonal complement.
std::vector<std::vector<cplx>> ones_complement_basis(int n) {
  std::vector<cplx> ones(n, cplx{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
  std::vector<std::vector<cplx>> basis{ones};
  auto added = linalg::complete_orthonormal(basis, static_cast<std::size_t>(n));
  basis.insert(basis.end(), added.begin(), added.end());
  return basis;
}

}  // namespace

FrameMatrix build_from_complement(const std::vector<std::vector<cplx>>& psi_rows,
                                  int n, double tolerance) {
  if (n < 2) throw NotParsevalInput("build_from_complement: N must be >= 2");
  const int m = static_cast<int>(psi_rows.size()) + 1;
  const int dim = n - 1;
  for (const auto& row : psi_rows) {
    if (static_cast<int>(row.size()) != dim)
      throw NotParsevalInput("build_from_complement: row length != N-1");
  }

  // Parseval precondition: sum of rank-one row projectors equals I_{N-1}.
  double dev = 0.0;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      cplx acc{0.0, 0.0};
      for (const auto& row : psi_rows) acc += row[i] * std::conj(row[j]);
      const double target = i == j ? 1.0 : 0.0;
      dev = std::max(dev, std::abs(acc - target));
    }
  }
  if (dev > tolerance) {
    throw NotParsevalInput(
        "build_from_complement: rows are not a Parseval frame (deviation " +
        std::to_string(dev) + ")");
  }

  const auto basis = ones_complement_basis(n);
  const double scale = std::sqrt(static_cast<double>(n));

  FrameMatrix out(m, n, std::vector<cplx>(static_cast<std::size_t>(m) * n,
                                          cplx{0.0, 0.0}),
                  tolerance);
  for (int j = 0; j < n; ++j) out.at(0, j) = 1.0;
  for (int l = 1; l < m; ++l) {
    // row l = sqrt(N) * Psi(psi_rows[l-1]) with Psi mapping e_i to basis[i+1]
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < n; ++j)
        out.at(l, j) += scale * psi_rows[l - 1][i] * basis[i + 1][j];
    }
  }
  return out;
}

}  // namespace pframe
