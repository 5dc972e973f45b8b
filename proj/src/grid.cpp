#include "pframe/grid.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "pframe/errors.hpp"

namespace pframe {

std::size_t ipow(int base, int level) {
  std::size_t out = 1;
  for (int i = 0; i < level; ++i) {
    if (out > std::numeric_limits<std::size_t>::max() /
                  static_cast<std::size_t>(base)) {
      throw Error("ipow: " + std::to_string(base) + "^" +
                  std::to_string(level) + " overflows");
    }
    out *= static_cast<std::size_t>(base);
  }
  return out;
}

namespace {

void check_shape(int base, int level, std::size_t got, const char* what) {
  if (base < 1 || level < 0 || got != ipow(base, level)) {
    throw Error(std::string(what) + ": coefficient count " +
                std::to_string(got) + " does not match base " +
                std::to_string(base) + " level " + std::to_string(level));
  }
}

template <class Grid>
Grid refine_impl(const Grid& f, int new_level, int cell_base) {
  if (new_level < f.level) {
    throw LevelDecrease("cannot refine level " + std::to_string(f.level) +
                        " down to " + std::to_string(new_level));
  }
  if (new_level == f.level) return f;
  Grid out = f;
  out.level = new_level;
  const std::size_t rep = ipow(cell_base, new_level - f.level);
  out.coeffs.assign(f.coeffs.size() * rep, cplx{0.0, 0.0});
  for (std::size_t b = 0; b < f.coeffs.size(); ++b) {
    for (std::size_t r = 0; r < rep; ++r) out.coeffs[b * rep + r] = f.coeffs[b];
  }
  return out;
}

// <f, g> without materializing the refinement: n2 >= n1 cells, f constant on
// blocks of g's grid.
template <class Grid>
cplx inner_impl(const Grid& f, const Grid& g, int cell_base) {
  const Grid& coarse = f.level <= g.level ? f : g;
  const Grid& fine = f.level <= g.level ? g : f;
  const std::size_t rep = ipow(cell_base, fine.level - coarse.level);
  cplx acc{0.0, 0.0};
  if (&coarse == &f) {
    for (std::size_t b = 0; b < fine.coeffs.size(); ++b)
      acc += coarse.coeffs[b / rep] * std::conj(fine.coeffs[b]);
  } else {
    for (std::size_t b = 0; b < fine.coeffs.size(); ++b)
      acc += fine.coeffs[b] * std::conj(coarse.coeffs[b / rep]);
  }
  return acc / static_cast<double>(fine.coeffs.size());
}

}  // namespace

GridFunction1D::GridFunction1D(int base_, int level_)
    : base(base_), level(level_), coeffs(ipow(base_, level_), cplx{0.0, 0.0}) {
  if (base_ < 1 || level_ < 0) throw Error("GridFunction1D: bad shape");
}

GridFunction1D::GridFunction1D(int base_, int level_, std::vector<cplx> coeffs_)
    : base(base_), level(level_), coeffs(std::move(coeffs_)) {
  check_shape(base, level, coeffs.size(), "GridFunction1D");
}

GridFunction1D GridFunction1D::one(int base_) { return constant(base_, 1.0); }

GridFunction1D GridFunction1D::constant(int base_, cplx value) {
  GridFunction1D f(base_, 0);
  f.coeffs[0] = value;
  return f;
}

GridFunction2D::GridFunction2D(int base_, int base_prime_, int level_)
    : base(base_),
      base_prime(base_prime_),
      level(level_),
      coeffs(ipow(base_ * base_prime_, level_), cplx{0.0, 0.0}) {
  if (base_ < 1 || base_prime_ < 1 || level_ < 0)
    throw Error("GridFunction2D: bad shape");
}

GridFunction2D::GridFunction2D(int base_, int base_prime_, int level_,
                               std::vector<cplx> coeffs_)
    : base(base_),
      base_prime(base_prime_),
      level(level_),
      coeffs(std::move(coeffs_)) {
  check_shape(base * base_prime, level, coeffs.size(), "GridFunction2D");
}

GridFunction2D GridFunction2D::one(int base_, int base_prime_) {
  GridFunction2D f(base_, base_prime_, 0);
  f.coeffs[0] = 1.0;
  return f;
}

GridFunction1D refine(const GridFunction1D& f, int new_level) {
  return refine_impl(f, new_level, f.base);
}

GridFunction2D refine(const GridFunction2D& f, int new_level) {
  return refine_impl(f, new_level, f.pair_base());
}

cplx inner_product(const GridFunction1D& f, const GridFunction1D& g) {
  if (f.base != g.base) {
    throw BaseMismatch("inner_product: base " + std::to_string(f.base) +
                       " vs " + std::to_string(g.base));
  }
  return inner_impl(f, g, f.base);
}

cplx inner_product(const GridFunction2D& f, const GridFunction2D& g) {
  if (f.base != g.base || f.base_prime != g.base_prime) {
    throw BaseMismatch("inner_product: 2D bases differ");
  }
  return inner_impl(f, g, f.pair_base());
}

double norm(const GridFunction1D& f) {
  return std::sqrt(std::abs(inner_product(f, f).real()));
}

double norm(const GridFunction2D& f) {
  return std::sqrt(std::abs(inner_product(f, f).real()));
}

namespace {

template <class Grid>
double distance_impl(const Grid& f, const Grid& g, int cell_base) {
  const int k = std::max(f.level, g.level);
  const std::size_t repf = ipow(cell_base, k - f.level);
  const std::size_t repg = ipow(cell_base, k - g.level);
  const std::size_t n = ipow(cell_base, k);
  double acc = 0.0;
  for (std::size_t b = 0; b < n; ++b)
    acc += std::norm(f.coeffs[b / repf] - g.coeffs[b / repg]);
  return std::sqrt(acc / static_cast<double>(n));
}

}  // namespace

double l2_distance(const GridFunction1D& f, const GridFunction1D& g) {
  if (f.base != g.base) throw BaseMismatch("l2_distance: bases differ");
  return distance_impl(f, g, f.base);
}

double l2_distance(const GridFunction2D& f, const GridFunction2D& g) {
  if (f.base != g.base || f.base_prime != g.base_prime)
    throw BaseMismatch("l2_distance: 2D bases differ");
  return distance_impl(f, g, f.pair_base());
}

void add_scaled(GridFunction1D& y, cplx a, const GridFunction1D& x) {
  if (y.base != x.base || y.level != x.level)
    throw BaseMismatch("add_scaled: shapes differ");
  linalg::axpy(a, x.coeffs, y.coeffs);
}

void add_scaled(GridFunction2D& y, cplx a, const GridFunction2D& x) {
  if (y.base != x.base || y.base_prime != x.base_prime || y.level != x.level)
    throw BaseMismatch("add_scaled: shapes differ");
  linalg::axpy(a, x.coeffs, y.coeffs);
}

}  // namespace pframe
