#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pframe/exec.hpp"
#include "pframe/frame_matrix.hpp"
#include "pframe/grid.hpp"
#include "pframe/word.hpp"

namespace pframe {

/// Dilation of an admissible M x N matrix to an (NN') x (NN') matrix `a`
/// whose 1/sqrt(NN') scaling is unitary with constant first row (condition
/// (i)) and whose averages over the second column index recover the
/// zero-padded source rows (condition (ii)). Index pairs (b, b') in
/// B x B' = {0..N-1} x {0..N'-1} are flattened b-major: flat(b,b') = b*N'+b'.
struct DilationSystem {
  FrameMatrix source;
  int nprime = 1;
  std::vector<std::pair<int, int>> iota;  // l -> (b, b'), iota[0] = (0,0)
  std::vector<int> iota_inverse;          // flat index -> l, or -1
  std::vector<cplx> padded_alpha;         // (NN') x N row-major, zero rows off iota(L)
  std::vector<std::vector<cplx>> t_vectors;     // N orthonormal columns of length NN'
  std::vector<std::vector<cplx>> t_completion;  // NN'-N completion columns
  std::vector<cplx> a;                    // (NN') x (NN') row-major
  double tolerance = 1e-10;

  int big_base() const { return source.cols * nprime; }
  int flat(int b, int bp) const { return b * nprime + bp; }
  std::pair<int, int> unflat(int q) const { return {q / nprime, q % nprime}; }

  cplx a_at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * big_base() + c];
  }
  std::span<const cplx> a_row(int r) const {
    return {a.data() + static_cast<std::size_t>(r) * big_base(),
            static_cast<std::size_t>(big_base())};
  }
  std::span<const cplx> padded_row(int r) const {
    return {padded_alpha.data() + static_cast<std::size_t>(r) * source.cols,
            static_cast<std::size_t>(source.cols)};
  }
};

/// Runs the constructive dilation: picks N' = ceil(M/N) unless overridden,
/// embeds the row index set via iota(l) = (l mod N, floor(l/N)), zero-pads the
/// coefficient rows, builds the t-column isometry aligned with the
/// second-coordinate averaging subspace, completes both orthonormal systems
/// deterministically, and assembles `a`. Throws InvalidSource if the matrix
/// fails validation and InvalidNprime if N * nprime < M.
DilationSystem build_dilation(const FrameMatrix& matrix,
                              std::optional<int> nprime = std::nullopt);

/// Max row-orthonormality defect of a / sqrt(NN'): condition (i), unitary part.
double unitarity_deviation(const DilationSystem& sys);

/// Max |a(0, .) - 1|: condition (i), constant first row.
double first_row_deviation(const DilationSystem& sys);

/// Max |(1/N') sum_{c'} a((b,b'),(c,c')) - padded_alpha((b,b'), c)|:
/// condition (ii).
double averaging_deviation(const DilationSystem& sys);

/// Cuntz-type operator on the square: (S_{(b,b')} F)(x,x') =
/// m_{(b,b')}(x,x') F(Nx mod 1, N'x' mod 1). Throws IndexOutOfRange.
GridFunction2D apply_dilated_S(const DilationSystem& sys,
                               std::pair<int, int> idx,
                               const GridFunction2D& F);

GridFunction2D apply_dilated_S_adjoint(const DilationSystem& sys,
                                       std::pair<int, int> idx,
                                       const GridFunction2D& F);

/// S_{w_1} ... S_{w_n} 1 on the square via the product formula; word digits
/// are flattened (b,b') pairs.
GridFunction2D dilated_frame_element(const DilationSystem& sys,
                                     const Word& word);

/// Max defect of both Cuntz relations (S_i* S_j = delta_ij I and
/// sum_i S_i S_i* = I) over an indicator basis of the level-k space.
double cuntz_check(const DilationSystem& sys, int level,
                   Exec exec = Exec::parallel);

/// Orthogonal projection onto functions of the first coordinate: averages the
/// coefficients over the second-coordinate digits.
GridFunction1D project_V(const GridFunction2D& F);

/// Embeds a 1D grid function into the square as a function constant in the
/// second coordinate.
GridFunction2D embed_V(const GridFunction1D& f, int nprime);

/// Max defect of S*_{(b,b')} P_V = embed(S~*_{(b,b')} project_V(.)) over an
/// indicator basis of the level-k space, where S~_{(b,b')} acts through the
/// zero-padded coefficient row (the zero operator off iota(L)).
double compatibility_check(const DilationSystem& sys, int level,
                           Exec exec = Exec::parallel);

/// Gram deviation from the identity of the family {S_w 1} over all canonical
/// words of length <= k. The family has exactly (NN')^k members, the dimension
/// of the level-k space, so a small deviation certifies an orthonormal basis
/// at that resolution.
double orthonormal_basis_check(const DilationSystem& sys, int level,
                               Exec exec = Exec::parallel);

/// nu_{(b,b')}(t,t') = (1/NN') sum_{(c,c')} conj(a((b,b'),(c,c')))
///                      exp(2 pi i (t c / N + t' c' / N')).
cplx nu(const DilationSystem& sys, std::pair<int, int> idx, double t,
        double tprime);

/// Max |sum_{(b,b')} |nu(t,t')|^2 - 1| over pseudorandom sample points
/// (fixed seed, uniform over [-5,5)^2).
double nu_normalization_deviation(const DilationSystem& sys, int samples = 20,
                                  unsigned seed = 0x5eed5u);

}  // namespace pframe
