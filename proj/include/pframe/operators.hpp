#pragma once

#include <span>
#include <utility>
#include <vector>

#include "pframe/exec.hpp"
#include "pframe/frame_matrix.hpp"
#include "pframe/grid.hpp"
#include "pframe/word.hpp"

namespace pframe {

/// (S_l f)(x) = m_l(x) f(N x mod 1): the output has level(f)+1 and its
/// coefficient at digit string (d_0, d_1, ..., d_k) is
/// alpha(l, d_0) * f(d_1, ..., d_k). Throws DigitOutOfRange, BaseMismatch.
GridFunction1D apply_S(const FrameMatrix& matrix, int l,
                       const GridFunction1D& f);

/// Adjoint: (S_l* g)(x) = (1/N) sum_b conj(alpha(l, b)) g((x+b)/N). The level
/// drops by one (level-0 inputs stay at level 0).
GridFunction1D apply_S_adjoint(const FrameMatrix& matrix, int l,
                               const GridFunction1D& g);

/// Adjoint against an arbitrary coefficient row (used by the dilation's
/// compatibility check, where rows outside the embedded index set are zero).
GridFunction1D apply_S_adjoint_row(std::span<const cplx> row, int base,
                                   const GridFunction1D& g);

/// S_{w_1} ... S_{w_n} 1 computed directly by the product formula: the
/// coefficient at digit string (b_0, ..., b_{n-1}) is
/// prod_j alpha(w_{j+1}, b_j). Equals the iterated apply_S applied to the
/// constant function.
GridFunction1D frame_element(const FrameMatrix& matrix, const Word& word);

/// All frame elements for canonical words up to max_level, in
/// enumerate_words order. Holds exactly M^max_level functions; the first is
/// the constant 1.
struct FrameFamily {
  FrameMatrix matrix;
  int max_level = 0;
  std::vector<std::pair<Word, GridFunction1D>> elements;
};

FrameFamily build_family(const FrameMatrix& matrix, int max_level);

/// Frame coefficients c_w = <f, S_w 1> keyed by canonical word. For a signal
/// at level k the Parseval identity gives sum |c_w|^2 = ||f||^2 over words of
/// length <= k; longer words contribute nothing and are not stored.
struct CoefficientSet {
  int source_level = 0;
  std::vector<std::pair<Word, cplx>> coeffs;  // enumerate_words order

  double sum_sq() const;
};

CoefficientSet analyze(const FrameMatrix& matrix, const GridFunction1D& f,
                       Exec exec = Exec::parallel);

/// sum_w c_w S_w 1 at the level spanned by the coefficient set. Coefficient
/// sets produced by analyze reconstruct the analyzed signal.
GridFunction1D synthesize(const FrameMatrix& matrix, const CoefficientSet& coeffs);

/// Max over an indicator basis of the level-k space of
/// || sum_l S_l S_l* e - e ||; small iff the matrix satisfies the operator
/// resolution of identity.
double resolution_of_identity_check(const FrameMatrix& matrix, int level,
                                    Exec exec = Exec::parallel);

/// Max entry of | (1/N^k) (A^k)* (A^k) - I | where the rows of A^k are the
/// frame elements of all length-k words: the level-k Parseval property as a
/// finite matrix identity.
double level_parseval_deviation(const FrameMatrix& matrix, int level,
                                Exec exec = Exec::parallel);

}  // namespace pframe
