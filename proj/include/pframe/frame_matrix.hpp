#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pframe/linalg.hpp"

namespace pframe {

/// M x N coefficient matrix alpha. The associated analysis matrix is
/// T = alpha / sqrt(N); the matrix is admissible when T* T = I_N (so the rows
/// of T form a Parseval frame for C^N) and the first row of alpha is all
/// ones (so the first operator fixes the constant function).
struct FrameMatrix {
  int rows = 0;  // M
  int cols = 0;  // N
  std::vector<cplx> alpha;  // row-major, rows * cols entries
  double tolerance = 1e-10;

  FrameMatrix() = default;
  FrameMatrix(int rows_, int cols_, std::vector<cplx> alpha_,
              double tolerance_ = 1e-10);

  cplx at(int i, int j) const {
    return alpha[static_cast<std::size_t>(i) * cols + j];
  }
  cplx& at(int i, int j) {
    return alpha[static_cast<std::size_t>(i) * cols + j];
  }

  /// Row i as a view.
  std::span<const cplx> row(int i) const {
    return {alpha.data() + static_cast<std::size_t>(i) * cols,
            static_cast<std::size_t>(cols)};
  }

  /// The 2x2 seed [[1,1],[1,-1]]; generates the classical Walsh basis.
  static FrameMatrix walsh_seed();
};

struct ValidationIssue {
  std::string condition;  // "dimensions", "isometry" or "first_row"
  double deviation = 0.0;
};

/// Outcome of validate(). Carries the measured deviation of every condition;
/// `issues` lists only the ones that exceed the tolerance.
struct ValidationReport {
  bool dimensions_ok = true;
  double isometry_deviation = 0.0;
  double first_row_deviation = 0.0;
  double tolerance = 1e-10;
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  double max_deviation() const;
};

/// Checks the two admissibility conditions entrywise. Never throws: malformed
/// dimensions are reported as a "dimensions" issue. The tolerance defaults to
/// the matrix's own.
ValidationReport validate(const FrameMatrix& matrix,
                          std::optional<double> tolerance = std::nullopt);

/// Builds an admissible M x N matrix out of an (M-1) x (N-1) array whose rows
/// form a Parseval frame for C^{N-1}: row 0 is all ones and row l is
/// sqrt(N) * Psi(psi_rows[l-1]), where Psi is the fixed isometry from C^{N-1}
/// onto the orthogonal complement of the all-ones direction obtained by
/// completing the normalized all-ones vector to an orthonormal basis
/// (deterministic Gram-Schmidt, see linalg::complete_orthonormal).
/// Throws NotParsevalInput if the row projectors do not sum to the identity
/// within the tolerance.
FrameMatrix build_from_complement(const std::vector<std::vector<cplx>>& psi_rows,
                                  int n, double tolerance = 1e-10);

}  // namespace pframe
