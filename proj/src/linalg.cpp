#include "pframe/linalg.hpp"

#include <cmath>
#include <string>

#include "pframe/errors.hpp"

namespace pframe::linalg {

cplx dot(std::span<const cplx> u, std::span<const cplx> v) {
  cplx acc{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * std::conj(v[i]);
  return acc;
}

double norm(std::span<const cplx> v) {
  double acc = 0.0;
  for (const cplx& x : v) acc += std::norm(x);
  return std::sqrt(acc);
}

void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

std::vector<std::vector<cplx>> complete_orthonormal(
    const std::vector<std::vector<cplx>>& columns, std::size_t dim) {
  std::vector<std::vector<cplx>> basis = columns;
  std::vector<std::vector<cplx>> added;
  const std::size_t need = dim - columns.size();
  for (std::size_t seed = 0; seed < dim && added.size() < need; ++seed) {
    std::vector<cplx> v(dim, cplx{0.0, 0.0});
    v[seed] = 1.0;
    for (const auto& b : basis) {
      const cplx coeff = dot(v, b);
      axpy(-coeff, b, v);
    }
    const double residual = norm(v);
    if (residual < kCompletionSkip) continue;
    for (cplx& x : v) x /= residual;
    basis.push_back(v);
    added.push_back(std::move(v));
  }
  if (added.size() < need) {
    throw CompletionFailure("orthonormal completion found only " +
                            std::to_string(columns.size() + added.size()) +
                            " of " + std::to_string(dim) + " directions");
  }
  return added;
}

}  // namespace pframe::linalg
