#pragma once

#include <complex>
#include <span>
#include <vector>

namespace pframe {

using cplx = std::complex<double>;

namespace linalg {

/// Inner product, conjugate-linear in the second argument.
cplx dot(std::span<const cplx> u, std::span<const cplx> v);

double norm(std::span<const cplx> v);

/// y += a * x
void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y);

/// Residual norm below which a candidate seed vector is considered dependent
/// and skipped during orthonormal completion.
inline constexpr double kCompletionSkip = 1e-8;

/// Extends a set of orthonormal columns of length `dim` to an orthonormal
/// basis of C^dim and returns only the added columns. Deterministic: modified
/// Gram-Schmidt over the canonical basis vectors e_0, e_1, ... in index order,
/// skipping any candidate whose residual norm falls below kCompletionSkip.
/// Throws CompletionFailure if the seeds are exhausted early.
std::vector<std::vector<cplx>> complete_orthonormal(
    const std::vector<std::vector<cplx>>& columns, std::size_t dim);

}  // namespace linalg
}  // namespace pframe
