#include "pframe/operators.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "pframe/errors.hpp"

namespace pframe {

namespace {

void check_digit(int l, int count, const char* what) {
  if (l < 0 || l >= count) {
    throw DigitOutOfRange(std::string(what) + ": digit " + std::to_string(l) +
                          " outside {0,...," + std::to_string(count - 1) + "}");
  }
}

void check_base(const FrameMatrix& matrix, const GridFunction1D& f,
                const char* what) {
  if (f.base != matrix.cols) {
    throw BaseMismatch(std::string(what) + ": grid base " +
                       std::to_string(f.base) + " != matrix N " +
                       std::to_string(matrix.cols));
  }
}

}  // namespace

GridFunction1D apply_S(const FrameMatrix& matrix, int l,
                       const GridFunction1D& f) {
  check_digit(l, matrix.rows, "apply_S");
  check_base(matrix, f, "apply_S");
  const std::size_t block = f.coeffs.size();
  GridFunction1D out(f.base, f.level + 1);
  for (int d = 0; d < matrix.cols; ++d) {
    const cplx a = matrix.at(l, d);
    for (std::size_t t = 0; t < block; ++t)
      out.coeffs[static_cast<std::size_t>(d) * block + t] = a * f.coeffs[t];
  }
  return out;
}

GridFunction1D apply_S_adjoint(const FrameMatrix& matrix, int l,
                               const GridFunction1D& g) {
  check_digit(l, matrix.rows, "apply_S_adjoint");
  check_base(matrix, g, "apply_S_adjoint");
  return apply_S_adjoint_row(matrix.row(l), matrix.cols, g);
}

GridFunction1D apply_S_adjoint_row(std::span<const cplx> row, int base,
                                   const GridFunction1D& g_in) {
  if (static_cast<int>(row.size()) != base)
    throw BaseMismatch("apply_S_adjoint_row: row length != base");
  if (g_in.base != base)
    throw BaseMismatch("apply_S_adjoint_row: grid base != base");
  const GridFunction1D g = g_in.level == 0 ? refine(g_in, 1) : g_in;
  const std::size_t block = ipow(base, g.level - 1);
  GridFunction1D out(base, g.level - 1);
  const double inv = 1.0 / static_cast<double>(base);
  for (std::size_t t = 0; t < block; ++t) {
    cplx acc{0.0, 0.0};
    for (int b = 0; b < base; ++b)
      acc += std::conj(row[b]) *
             g.coeffs[static_cast<std::size_t>(b) * block + t];
    out.coeffs[t] = acc * inv;
  }
  return out;
}

GridFunction1D frame_element(const FrameMatrix& matrix, const Word& word) {
  const int n = static_cast<int>(word.length());
  for (int d : word.digits) check_digit(d, matrix.rows, "frame_element");
  const int base = matrix.cols;
  GridFunction1D out(base, n);
  const std::size_t cells = out.coeffs.size();
  for (std::size_t cell = 0; cell < cells; ++cell) {
    cplx prod{1.0, 0.0};
    std::size_t scale = cells;
    std::size_t rest = cell;
    for (int j = 0; j < n; ++j) {
      scale /= base;
      const int digit = static_cast<int>(rest / scale);
      rest %= scale;
      prod *= matrix.at(word.digits[j], digit);
    }
    out.coeffs[cell] = prod;
  }
  return out;
}

FrameFamily build_family(const FrameMatrix& matrix, int max_level) {
  FrameFamily family;
  family.matrix = matrix;
  family.max_level = max_level;
  const auto words = enumerate_words(matrix.rows, max_level);
  family.elements.reserve(words.size());
  for (const auto& w : words)
    family.elements.emplace_back(w, frame_element(matrix, w));
  return family;
}

double CoefficientSet::sum_sq() const {
  double acc = 0.0;
  for (const auto& [w, c] : coeffs) acc += std::norm(c);
  return acc;
}

CoefficientSet analyze(const FrameMatrix& matrix, const GridFunction1D& f,
                       Exec exec) {
  check_base(matrix, f, "analyze");
  const int k = f.level;
  const auto words = enumerate_words(matrix.rows, k);
  const double weight = 1.0 / static_cast<double>(f.coeffs.size());

  std::vector<cplx> values(words.size());
  auto coefficient = [&](std::int64_t i) {
    const GridFunction1D element = frame_element(matrix, words[i]);
    const std::size_t rep = ipow(f.base, k - element.level);
    cplx acc{0.0, 0.0};
    for (std::size_t b = 0; b < f.coeffs.size(); ++b)
      acc += f.coeffs[b] * std::conj(element.coeffs[b / rep]);
    return acc * weight;
  };

  const std::int64_t count = static_cast<std::int64_t>(words.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) values[i] = coefficient(i);
  } else {
    for (std::int64_t i = 0; i < count; ++i) values[i] = coefficient(i);
  }

  CoefficientSet out;
  out.source_level = k;
  out.coeffs.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    out.coeffs.emplace_back(words[i], values[i]);
  return out;
}

GridFunction1D synthesize(const FrameMatrix& matrix,
                          const CoefficientSet& coeffs) {
  int k = coeffs.source_level;
  for (const auto& [w, c] : coeffs.coeffs) {
    if (!w.canonical())
      throw Error("synthesize: non-canonical word " + w.to_string());
    k = std::max(k, static_cast<int>(w.length()));
  }
  GridFunction1D out(matrix.cols, k);
  for (const auto& [w, c] : coeffs.coeffs) {
    const GridFunction1D element = frame_element(matrix, w);
    const std::size_t rep = ipow(matrix.cols, k - element.level);
    for (std::size_t b = 0; b < out.coeffs.size(); ++b)
      out.coeffs[b] += c * element.coeffs[b / rep];
  }
  return out;
}

double resolution_of_identity_check(const FrameMatrix& matrix, int level,
                                    Exec exec) {
  if (level < 1) throw Error("resolution_of_identity_check: level must be >= 1");
  const std::size_t cells = ipow(matrix.cols, level);
  auto defect = [&](std::int64_t b) {
    GridFunction1D e(matrix.cols, level);
    e.coeffs[static_cast<std::size_t>(b)] = 1.0;
    GridFunction1D sum(matrix.cols, level);
    for (int l = 0; l < matrix.rows; ++l)
      add_scaled(sum, 1.0, apply_S(matrix, l, apply_S_adjoint(matrix, l, e)));
    add_scaled(sum, -1.0, e);
    return norm(sum);
  };

  double dev = 0.0;
  const std::int64_t count = static_cast<std::int64_t>(cells);
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : dev) schedule(dynamic)
    for (std::int64_t b = 0; b < count; ++b) dev = std::max(dev, defect(b));
  } else {
    for (std::int64_t b = 0; b < count; ++b) dev = std::max(dev, defect(b));
  }
  return dev;
}

double level_parseval_deviation(const FrameMatrix& matrix, int level,
                                Exec exec) {
  // rows of A^k: frame elements of all M^k words of length exactly k
  const std::size_t n_rows = ipow(matrix.rows, level);
  const std::size_t n_cols = ipow(matrix.cols, level);
  std::vector<std::vector<cplx>> rows;
  rows.reserve(n_rows);
  std::vector<int> digits(level, 0);
  for (std::size_t v = 0; v < n_rows; ++v) {
    std::size_t rest = v;
    for (int j = level - 1; j >= 0; --j) {
      digits[j] = static_cast<int>(rest % matrix.rows);
      rest /= matrix.rows;
    }
    rows.push_back(frame_element(matrix, Word(digits)).coeffs);
  }

  const double weight = 1.0 / static_cast<double>(n_cols);
  auto column_defect = [&](std::int64_t b) {
    double local = 0.0;
    for (std::size_t bp = 0; bp < n_cols; ++bp) {
      cplx acc{0.0, 0.0};
      for (const auto& row : rows)
        acc += std::conj(row[static_cast<std::size_t>(b)]) * row[bp];
      acc *= weight;
      const double target = static_cast<std::size_t>(b) == bp ? 1.0 : 0.0;
      local = std::max(local, std::abs(acc - target));
    }
    return local;
  };

  double dev = 0.0;
  const std::int64_t count = static_cast<std::int64_t>(n_cols);
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : dev) schedule(static)
    for (std::int64_t b = 0; b < count; ++b)
      dev = std::max(dev, column_defect(b));
  } else {
    for (std::int64_t b = 0; b < count; ++b)
      dev = std::max(dev, column_defect(b));
  }
  return dev;
}

}  // namespace pframe
