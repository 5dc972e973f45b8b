#pragma once

#include <cstddef>
#include <vector>

#include "pframe/linalg.hpp"

namespace pframe {

/// base^level as a vector length.
std::size_t ipow(int base, int level);

/// Piecewise constant function on [0,1) at resolution base^level. coeffs[b]
/// is the value on the half-open cell [b/base^k, (b+1)/base^k).
///
/// Digit convention: cell b has the base-N digit string (d_0,...,d_{k-1})
/// of its index with d_0 most significant, i.e. d_j is the cell of the j-th
/// iterate of x -> N x mod 1.
struct GridFunction1D {
  int base = 2;
  int level = 0;
  std::vector<cplx> coeffs;

  GridFunction1D() : coeffs{cplx{0.0, 0.0}} {}
  GridFunction1D(int base_, int level_);
  GridFunction1D(int base_, int level_, std::vector<cplx> coeffs_);

  /// The constant function 1 (level 0).
  static GridFunction1D one(int base_);
  static GridFunction1D constant(int base_, cplx value);
};

/// Piecewise constant function on [0,1)^2 over the product subdivision: a
/// level-k cell is addressed by k digit pairs (b_j, b'_j) with b_j < base and
/// b'_j < base_prime. Pairs are flattened b-major (q = b * base_prime + b'),
/// and the flattened digit string is stored exactly like GridFunction1D over
/// base * base_prime, most significant pair first.
struct GridFunction2D {
  int base = 2;        // first-coordinate subdivision N
  int base_prime = 1;  // second-coordinate subdivision N'
  int level = 0;
  std::vector<cplx> coeffs;

  GridFunction2D() : coeffs{cplx{0.0, 0.0}} {}
  GridFunction2D(int base_, int base_prime_, int level_);
  GridFunction2D(int base_, int base_prime_, int level_,
                 std::vector<cplx> coeffs_);

  static GridFunction2D one(int base_, int base_prime_);

  int pair_base() const { return base * base_prime; }
};

/// Same function represented on the finer grid: every coefficient is repeated
/// base^(new_level - level) times in digit order. Throws LevelDecrease.
GridFunction1D refine(const GridFunction1D& f, int new_level);
GridFunction2D refine(const GridFunction2D& f, int new_level);

/// L^2[0,1] inner product, conjugate-linear in the second argument. Levels
/// may differ; both functions are compared at the common refinement.
/// Throws BaseMismatch.
cplx inner_product(const GridFunction1D& f, const GridFunction1D& g);
cplx inner_product(const GridFunction2D& f, const GridFunction2D& g);

double norm(const GridFunction1D& f);
double norm(const GridFunction2D& f);

/// ||f - g|| in L^2, at the common refinement level.
double l2_distance(const GridFunction1D& f, const GridFunction1D& g);
double l2_distance(const GridFunction2D& f, const GridFunction2D& g);

/// In-place y += a * x; x and y must share base and level.
void add_scaled(GridFunction1D& y, cplx a, const GridFunction1D& x);
void add_scaled(GridFunction2D& y, cplx a, const GridFunction2D& x);

}  // namespace pframe
