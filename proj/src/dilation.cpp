#include "pframe/dilation.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "pframe/errors.hpp"
#include "pframe/operators.hpp"

namespace pframe {

DilationSystem build_dilation(const FrameMatrix& matrix,
                              std::optional<int> nprime) {
  const ValidationReport report = validate(matrix);
  if (!report.ok()) {
    throw InvalidSource("build_dilation: source matrix invalid (" +
                        report.issues.front().condition + ", deviation " +
                        std::to_string(report.issues.front().deviation) + ")");
  }
  const int n = matrix.cols;
  const int m = matrix.rows;
  const int np = nprime.value_or((m + n - 1) / n);
  if (np < 1 || n * np < m) {
    throw InvalidNprime("build_dilation: N*N' = " + std::to_string(n * np) +
                        " < M = " + std::to_string(m));
  }
  const int q = n * np;

  DilationSystem sys;
  sys.source = matrix;
  sys.nprime = np;
  sys.tolerance = matrix.tolerance;

  sys.iota.resize(m);
  sys.iota_inverse.assign(q, -1);
  for (int l = 0; l < m; ++l) {
    sys.iota[l] = {l % n, l / n};
    sys.iota_inverse[sys.flat(l % n, l / n)] = l;
  }

  sys.padded_alpha.assign(static_cast<std::size_t>(q) * n, cplx{0.0, 0.0});
  for (int l = 0; l < m; ++l) {
    const int r = sys.flat(sys.iota[l].first, sys.iota[l].second);
    for (int c = 0; c < n; ++c)
      sys.padded_alpha[static_cast<std::size_t>(r) * n + c] = matrix.at(l, c);
  }

  // t-columns: zero-padded alpha scaled by 1/sqrt(N); orthonormal because the
  // source satisfies (1/N) alpha* alpha = I and zero rows change nothing.
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  sys.t_vectors.assign(n, std::vector<cplx>(q, cplx{0.0, 0.0}));
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < q; ++r)
      sys.t_vectors[c][r] =
          sys.padded_alpha[static_cast<std::size_t>(r) * n + c] * inv_sqrt_n;
  }
  sys.t_completion =
      linalg::complete_orthonormal(sys.t_vectors, static_cast<std::size_t>(q));

  // e-tilde system: e_c is supported on the rows with first pair component c,
  // constant 1/sqrt(N'), spanning the subspace of vectors independent of the
  // second component.
  const double inv_sqrt_np = 1.0 / std::sqrt(static_cast<double>(np));
  std::vector<std::vector<cplx>> e_vectors(n, std::vector<cplx>(q, cplx{0.0, 0.0}));
  for (int c = 0; c < n; ++c) {
    for (int cp = 0; cp < np; ++cp)
      e_vectors[c][sys.flat(c, cp)] = inv_sqrt_np;
  }
  const auto e_completion =
      linalg::complete_orthonormal(e_vectors, static_cast<std::size_t>(q));

  // s rows combine the unitary [t | t_completion] with the e basis;
  // a = sqrt(NN') * s.
  sys.a.assign(static_cast<std::size_t>(q) * q, cplx{0.0, 0.0});
  const double scale = std::sqrt(static_cast<double>(q));
  for (int r = 0; r < q; ++r) {
    cplx* row = sys.a.data() + static_cast<std::size_t>(r) * q;
    for (int c = 0; c < n; ++c) {
      const cplx w = sys.t_vectors[c][r];
      for (int p = 0; p < q; ++p) row[p] += w * e_vectors[c][p];
    }
    for (int d = 0; d < q - n; ++d) {
      const cplx w = sys.t_completion[d][r];
      for (int p = 0; p < q; ++p) row[p] += w * e_completion[d][p];
    }
    for (int p = 0; p < q; ++p) row[p] *= scale;
  }
  return sys;
}

double unitarity_deviation(const DilationSystem& sys) {
  const int q = sys.big_base();
  const double weight = 1.0 / static_cast<double>(q);
  double dev = 0.0;
  for (int r = 0; r < q; ++r) {
    for (int rp = 0; rp < q; ++rp) {
      cplx acc{0.0, 0.0};
      for (int p = 0; p < q; ++p)
        acc += sys.a_at(r, p) * std::conj(sys.a_at(rp, p));
      acc *= weight;
      const double target = r == rp ? 1.0 : 0.0;
      dev = std::max(dev, std::abs(acc - target));
    }
  }
  return dev;
}

double first_row_deviation(const DilationSystem& sys) {
  double dev = 0.0;
  for (int p = 0; p < sys.big_base(); ++p)
    dev = std::max(dev, std::abs(sys.a_at(0, p) - 1.0));
  return dev;
}

double averaging_deviation(const DilationSystem& sys) {
  const int q = sys.big_base();
  const int n = sys.source.cols;
  const int np = sys.nprime;
  double dev = 0.0;
  for (int r = 0; r < q; ++r) {
    for (int c = 0; c < n; ++c) {
      cplx acc{0.0, 0.0};
      for (int cp = 0; cp < np; ++cp) acc += sys.a_at(r, sys.flat(c, cp));
      acc /= static_cast<double>(np);
      dev = std::max(dev,
                     std::abs(acc - sys.padded_alpha[
                                        static_cast<std::size_t>(r) * n + c]));
    }
  }
  return dev;
}

namespace {

int checked_flat(const DilationSystem& sys, std::pair<int, int> idx,
                 const char* what) {
  const auto [b, bp] = idx;
  if (b < 0 || b >= sys.source.cols || bp < 0 || bp >= sys.nprime) {
    throw IndexOutOfRange(std::string(what) + ": index (" + std::to_string(b) +
                          "," + std::to_string(bp) + ") outside B x B'");
  }
  return sys.flat(b, bp);
}

void check_2d_base(const DilationSystem& sys, const GridFunction2D& F,
                   const char* what) {
  if (F.base != sys.source.cols || F.base_prime != sys.nprime)
    throw BaseMismatch(std::string(what) + ": 2D bases do not match system");
}

}  // namespace

GridFunction2D apply_dilated_S(const DilationSystem& sys,
                               std::pair<int, int> idx,
                               const GridFunction2D& F) {
  const int r = checked_flat(sys, idx, "apply_dilated_S");
  check_2d_base(sys, F, "apply_dilated_S");
  const int q = sys.big_base();
  const std::size_t block = F.coeffs.size();
  GridFunction2D out(F.base, F.base_prime, F.level + 1);
  for (int p = 0; p < q; ++p) {
    const cplx a = sys.a_at(r, p);
    for (std::size_t t = 0; t < block; ++t)
      out.coeffs[static_cast<std::size_t>(p) * block + t] = a * F.coeffs[t];
  }
  return out;
}

GridFunction2D apply_dilated_S_adjoint(const DilationSystem& sys,
                                       std::pair<int, int> idx,
                                       const GridFunction2D& F_in) {
  const int r = checked_flat(sys, idx, "apply_dilated_S_adjoint");
  check_2d_base(sys, F_in, "apply_dilated_S_adjoint");
  const GridFunction2D F = F_in.level == 0 ? refine(F_in, 1) : F_in;
  const int q = sys.big_base();
  const std::size_t block = ipow(q, F.level - 1);
  GridFunction2D out(F.base, F.base_prime, F.level - 1);
  const double inv = 1.0 / static_cast<double>(q);
  for (std::size_t t = 0; t < block; ++t) {
    cplx acc{0.0, 0.0};
    for (int p = 0; p < q; ++p)
      acc += std::conj(sys.a_at(r, p)) *
             F.coeffs[static_cast<std::size_t>(p) * block + t];
    out.coeffs[t] = acc * inv;
  }
  return out;
}

GridFunction2D dilated_frame_element(const DilationSystem& sys,
                                     const Word& word) {
  const int q = sys.big_base();
  const int n = static_cast<int>(word.length());
  for (int d : word.digits) {
    if (d < 0 || d >= q)
      throw IndexOutOfRange("dilated_frame_element: digit out of range");
  }
  GridFunction2D out(sys.source.cols, sys.nprime, n);
  const std::size_t cells = out.coeffs.size();
  for (std::size_t cell = 0; cell < cells; ++cell) {
    cplx prod{1.0, 0.0};
    std::size_t scale = cells;
    std::size_t rest = cell;
    for (int j = 0; j < n; ++j) {
      scale /= q;
      const int digit = static_cast<int>(rest / scale);
      rest %= scale;
      prod *= sys.a_at(word.digits[j], digit);
    }
    out.coeffs[cell] = prod;
  }
  return out;
}

double cuntz_check(const DilationSystem& sys, int level, Exec exec) {
  if (level < 1) throw Error("cuntz_check: level must be >= 1");
  const int q = sys.big_base();
  const std::size_t cells = ipow(q, level);

  auto defect = [&](std::int64_t cell) {
    GridFunction2D e(sys.source.cols, sys.nprime, level);
    e.coeffs[static_cast<std::size_t>(cell)] = 1.0;
    double local = 0.0;

    std::vector<GridFunction2D> lifted;
    lifted.reserve(q);
    for (int j = 0; j < q; ++j)
      lifted.push_back(apply_dilated_S(sys, sys.unflat(j), e));

    // S_i* S_j = delta_ij I
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) {
        GridFunction2D back =
            apply_dilated_S_adjoint(sys, sys.unflat(i), lifted[j]);
        if (i == j) add_scaled(back, -1.0, e);
        local = std::max(local, norm(back));
      }
    }

    // sum_i S_i S_i* = I
    GridFunction2D sum(sys.source.cols, sys.nprime, level);
    for (int i = 0; i < q; ++i) {
      add_scaled(sum, 1.0,
                 apply_dilated_S(sys, sys.unflat(i),
                                 apply_dilated_S_adjoint(sys, sys.unflat(i), e)));
    }
    add_scaled(sum, -1.0, e);
    return std::max(local, norm(sum));
  };

  double dev = 0.0;
  const std::int64_t count = static_cast<std::int64_t>(cells);
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : dev) schedule(dynamic)
    for (std::int64_t c = 0; c < count; ++c) dev = std::max(dev, defect(c));
  } else {
    for (std::int64_t c = 0; c < count; ++c) dev = std::max(dev, defect(c));
  }
  return dev;
}

GridFunction1D project_V(const GridFunction2D& F) {
  const int n = F.base;
  const int np = F.base_prime;
  const int q = F.base * F.base_prime;
  const int k = F.level;
  GridFunction1D out(n, k);
  const std::size_t cells = F.coeffs.size();
  for (std::size_t cell = 0; cell < cells; ++cell) {
    // strip the second component from each digit pair
    std::size_t scale = cells;
    std::size_t rest = cell;
    std::size_t target = 0;
    for (int j = 0; j < k; ++j) {
      scale /= q;
      const int pair = static_cast<int>(rest / scale);
      rest %= scale;
      target = target * n + pair / np;
    }
    out.coeffs[target] += F.coeffs[cell];
  }
  const double inv = 1.0 / static_cast<double>(ipow(np, k));
  for (cplx& x : out.coeffs) x *= inv;
  return out;
}

GridFunction2D embed_V(const GridFunction1D& f, int nprime) {
  const int n = f.base;
  const int q = n * nprime;
  const int k = f.level;
  GridFunction2D out(n, nprime, k);
  const std::size_t cells = out.coeffs.size();
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::size_t scale = cells;
    std::size_t rest = cell;
    std::size_t source = 0;
    for (int j = 0; j < k; ++j) {
      scale /= q;
      const int pair = static_cast<int>(rest / scale);
      rest %= scale;
      source = source * n + pair / nprime;
    }
    out.coeffs[cell] = f.coeffs[source];
  }
  return out;
}

double compatibility_check(const DilationSystem& sys, int level, Exec exec) {
  if (level < 1) throw Error("compatibility_check: level must be >= 1");
  const int q = sys.big_base();
  const std::size_t cells = ipow(q, level);

  auto defect = [&](std::int64_t cell) {
    GridFunction2D e(sys.source.cols, sys.nprime, level);
    e.coeffs[static_cast<std::size_t>(cell)] = 1.0;
    const GridFunction1D projected = project_V(e);
    const GridFunction2D embedded = embed_V(projected, sys.nprime);
    double local = 0.0;
    for (int r = 0; r < q; ++r) {
      const GridFunction2D lhs =
          apply_dilated_S_adjoint(sys, sys.unflat(r), embedded);
      const GridFunction1D rhs1d =
          apply_S_adjoint_row(sys.padded_row(r), sys.source.cols, projected);
      const GridFunction2D rhs = embed_V(rhs1d, sys.nprime);
      local = std::max(local, l2_distance(lhs, rhs));
    }
    return local;
  };

  double dev = 0.0;
  const std::int64_t count = static_cast<std::int64_t>(cells);
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : dev) schedule(dynamic)
    for (std::int64_t c = 0; c < count; ++c) dev = std::max(dev, defect(c));
  } else {
    for (std::int64_t c = 0; c < count; ++c) dev = std::max(dev, defect(c));
  }
  return dev;
}

double orthonormal_basis_check(const DilationSystem& sys, int level, Exec exec) {
  if (level < 1) throw Error("orthonormal_basis_check: level must be >= 1");
  const int q = sys.big_base();
  const auto words = enumerate_words(q, level);
  std::vector<GridFunction2D> elements;
  elements.reserve(words.size());
  for (const auto& w : words)
    elements.push_back(dilated_frame_element(sys, w));

  const std::int64_t count = static_cast<std::int64_t>(elements.size());
  auto row_defect = [&](std::int64_t i) {
    double local = 0.0;
    for (std::int64_t j = i; j < count; ++j) {
      const cplx g = inner_product(elements[static_cast<std::size_t>(i)],
                                   elements[static_cast<std::size_t>(j)]);
      const double target = i == j ? 1.0 : 0.0;
      local = std::max(local, std::abs(g - target));
    }
    return local;
  };

  double dev = 0.0;
  if (exec == Exec::parallel) {
#pragma omp parallel for reduction(max : dev) schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i)
      dev = std::max(dev, row_defect(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i)
      dev = std::max(dev, row_defect(i));
  }
  return dev;
}

cplx nu(const DilationSystem& sys, std::pair<int, int> idx, double t,
        double tprime) {
  const int r = checked_flat(sys, idx, "nu");
  const int n = sys.source.cols;
  const int np = sys.nprime;
  cplx acc{0.0, 0.0};
  for (int c = 0; c < n; ++c) {
    for (int cp = 0; cp < np; ++cp) {
      const double phase =
          2.0 * std::numbers::pi *
          (t * c / static_cast<double>(n) + tprime * cp / static_cast<double>(np));
      acc += std::conj(sys.a_at(r, sys.flat(c, cp))) * std::polar(1.0, phase);
    }
  }
  return acc / static_cast<double>(sys.big_base());
}

double nu_normalization_deviation(const DilationSystem& sys, int samples,
                                  unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  double dev = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = dist(gen);
    const double tp = dist(gen);
    double total = 0.0;
    for (int b = 0; b < sys.source.cols; ++b) {
      for (int bp = 0; bp < sys.nprime; ++bp)
        total += std::norm(nu(sys, {b, bp}, t, tp));
    }
    dev = std::max(dev, std::abs(total - 1.0));
  }
  return dev;
}

}  // namespace pframe
