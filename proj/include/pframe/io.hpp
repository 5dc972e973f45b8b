#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pframe/dilation.hpp"
#include "pframe/frame_matrix.hpp"
#include "pframe/grid.hpp"
#include "pframe/operators.hpp"

namespace pframe::io {

/// FrameMatrix JSON: {"N": int, "M": int, "alpha": [[entry, ...], ...]} with
/// alpha row-major; an entry is [re, im] or a bare number for a real value.
/// Parse failures throw ParseError naming the offending field.
FrameMatrix read_frame_matrix(const std::filesystem::path& path);
FrameMatrix frame_matrix_from_json_text(const std::string& text,
                                        const std::string& origin = "<string>");
void write_frame_matrix(const std::filesystem::path& path,
                        const FrameMatrix& matrix);
std::string frame_matrix_to_json_text(const FrameMatrix& matrix);

/// Parseval-frame rows for build_from_complement:
/// {"psi": [[entry, ...], ...]} with the same entry convention.
std::vector<std::vector<cplx>> read_psi_rows(const std::filesystem::path& path);

/// GridFunction1D CSV: a header line "# base=N level=k" followed by one line
/// per cell, columns index,re,im.
GridFunction1D read_grid_csv(const std::filesystem::path& path);
void write_grid_csv(const std::filesystem::path& path, const GridFunction1D& f);

/// CoefficientSet JSON: {"source_level": k, "coeffs": [{"word": [d, ...],
/// "re": r, "im": i}, ...]} in enumerate_words order. Extra top-level keys
/// (analysis metadata) are preserved on write and ignored on read.
CoefficientSet read_coefficients(const std::filesystem::path& path);
void write_coefficients(const std::filesystem::path& path,
                        const CoefficientSet& coeffs,
                        std::optional<double> parseval_residual = std::nullopt);

/// DilationSystem JSON export: {"Nprime": int, "iota": [[b, b'], ...] indexed
/// by l, "a": [[[re, im], ...], ...]} with rows/columns in flattened (b, b')
/// order. Readers also accept the key "nprime".
void write_dilation(const std::filesystem::path& path,
                    const DilationSystem& sys);

/// The raw content of a dilation export, for reloading and inspection.
struct DilationExport {
  int nprime = 1;
  std::vector<std::pair<int, int>> iota;
  int dim = 0;
  std::vector<cplx> a;  // dim x dim row-major
};

DilationExport read_dilation(const std::filesystem::path& path);

}  // namespace pframe::io
