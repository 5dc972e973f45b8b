#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <doctest.h>

#include "pframe/errors.hpp"
#include "pframe/io.hpp"
#include "support/testsupport.hpp"

using namespace pframe;
namespace ts = pframe::testsupport;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("pframe-io-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("frame matrix JSON round trip is exact") {
  TempDir dir;
  std::mt19937 gen(211);
  const auto matrix = ts::random_valid_matrix(5, 3, gen);
  const auto file = dir.path / "m.json";
  io::write_frame_matrix(file, matrix);
  const auto back = io::read_frame_matrix(file);
  REQUIRE(back.rows == matrix.rows);
  REQUIRE(back.cols == matrix.cols);
  for (std::size_t i = 0; i < matrix.alpha.size(); ++i)
    CHECK(back.alpha[i] == matrix.alpha[i]);
}

TEST_CASE("bare numbers parse as real entries") {
  const auto m = io::frame_matrix_from_json_text(
      R"({"N": 2, "M": 2, "alpha": [[1, 1], [1, -1]]})");
  CHECK(m.at(1, 1) == cplx{-1.0, 0.0});
  const auto mixed = io::frame_matrix_from_json_text(
      R"({"N": 2, "M": 2, "alpha": [[1, 1], [[0, 1], [0, -1]]]})");
  CHECK(mixed.at(1, 0) == cplx{0.0, 1.0});
}

TEST_CASE("frame matrix parse errors name the offending field") {
  CHECK_THROWS_WITH_AS(
      io::frame_matrix_from_json_text(R"({"N": 2, "alpha": [[1, 1]]})"),
      doctest::Contains("M"), ParseError);
  CHECK_THROWS_WITH_AS(
      io::frame_matrix_from_json_text(
          R"({"N": 2, "M": 2, "alpha": [[1, 1], [1]]})"),
      doctest::Contains("alpha[1]"), ParseError);
  CHECK_THROWS_WITH_AS(
      io::frame_matrix_from_json_text(
          R"({"N": 2, "M": 2, "alpha": [[1, "x"], [1, 1]]})"),
      doctest::Contains("alpha[0][1]"), ParseError);
  CHECK_THROWS_AS(io::frame_matrix_from_json_text("{\"N\": 2,"), ParseError);
}

TEST_CASE("grid CSV round trip is exact") {
  TempDir dir;
  std::mt19937 gen(223);
  const auto f = ts::random_signal(3, 2, gen);
  const auto file = dir.path / "f.csv";
  io::write_grid_csv(file, f);
  const auto back = io::read_grid_csv(file);
  CHECK(back.base == 3);
  CHECK(back.level == 2);
  for (std::size_t b = 0; b < f.coeffs.size(); ++b)
    CHECK(back.coeffs[b] == f.coeffs[b]);
}

TEST_CASE("grid CSV rejects malformed files") {
  TempDir dir;
  const auto file = dir.path / "bad.csv";

  std::ofstream(file) << "base=2 level=1\n0,1,0\n1,0,0\n";
  CHECK_THROWS_AS(io::read_grid_csv(file), ParseError);

  std::ofstream(file) << "# base=2 level=1\n0,1,0\n";
  CHECK_THROWS_AS(io::read_grid_csv(file), ParseError);  // missing cell

  std::ofstream(file) << "# base=2 level=1\n0,1,0\n0,2,0\n";
  CHECK_THROWS_AS(io::read_grid_csv(file), ParseError);  // duplicate cell

  std::ofstream(file) << "# base=2 level=1\n0,1,0\n7,0,0\n";
  CHECK_THROWS_AS(io::read_grid_csv(file), ParseError);  // out of range
}

TEST_CASE("coefficient set JSON round trip preserves order and values") {
  TempDir dir;
  std::mt19937 gen(227);
  const auto matrix = ts::m3_seed();
  const auto coeffs = analyze(matrix, ts::random_signal(2, 2, gen));
  const auto file = dir.path / "c.json";
  io::write_coefficients(file, coeffs, 1.2e-13);
  const auto back = io::read_coefficients(file);
  CHECK(back.source_level == coeffs.source_level);
  REQUIRE(back.coeffs.size() == coeffs.coeffs.size());
  for (std::size_t i = 0; i < coeffs.coeffs.size(); ++i) {
    CHECK(back.coeffs[i].first == coeffs.coeffs[i].first);
    CHECK(back.coeffs[i].second == coeffs.coeffs[i].second);
  }
}

TEST_CASE("coefficient files with trailing-zero words are rejected") {
  TempDir dir;
  const auto file = dir.path / "bad.json";
  std::ofstream(file) << R"({"source_level": 1,
    "coeffs": [{"word": [1, 0], "re": 1.0, "im": 0.0}]})";
  CHECK_THROWS_WITH_AS(io::read_coefficients(file),
                       doctest::Contains("non-canonical"), ParseError);
}

TEST_CASE("dilation export carries Nprime, iota and the a-matrix") {
  TempDir dir;
  const auto sys = build_dilation(ts::m3_seed());
  const auto file = dir.path / "d.json";
  io::write_dilation(file, sys);
  const auto back = io::read_dilation(file);
  CHECK(back.nprime == 2);
  REQUIRE(back.iota.size() == 3);
  CHECK(back.iota[2] == std::pair<int, int>{0, 1});
  REQUIRE(back.dim == 4);
  for (std::size_t i = 0; i < sys.a.size(); ++i) CHECK(back.a[i] == sys.a[i]);
}

TEST_CASE("psi rows parse with the shared entry convention") {
  TempDir dir;
  const auto file = dir.path / "psi.json";
  std::ofstream(file) << R"({"psi": [[0.70710678118654746],
                                     [[0, 0.70710678118654746]]]})";
  const auto rows = io::read_psi_rows(file);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][0].imag() == 0.0);
  CHECK(rows[1][0].real() == 0.0);
}
