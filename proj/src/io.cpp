#include "pframe/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pframe/errors.hpp"

namespace pframe::io {

using nlohmann::json;

namespace {

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return j;
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
}

cplx entry_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return cplx{j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return cplx{j[0].get<double>(), j[1].get<double>()};
  throw ParseError(field + ": expected a number or [re, im] pair");
}

json entry_to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

std::vector<std::vector<cplx>> complex_rows(const json& j,
                                            const std::string& field) {
  if (!j.is_array() || j.empty())
    throw ParseError(field + ": expected a nonempty array of rows");
  std::vector<std::vector<cplx>> rows;
  rows.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& row = j[i];
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw ParseError(where + ": expected an array");
    std::vector<cplx> out;
    out.reserve(row.size());
    for (std::size_t k = 0; k < row.size(); ++k)
      out.push_back(entry_from_json(row[k], where + "[" + std::to_string(k) + "]"));
    rows.push_back(std::move(out));
  }
  return rows;
}

int int_field(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError("missing or non-integer field \"" + key + "\"");
  return j[key].get<int>();
}

}  // namespace

FrameMatrix frame_matrix_from_json_text(const std::string& text,
                                        const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  const int n = int_field(j, "N");
  const int m = int_field(j, "M");
  if (!j.contains("alpha")) throw ParseError("missing field \"alpha\"");
  const auto rows = complex_rows(j["alpha"], "alpha");
  if (static_cast<int>(rows.size()) != m)
    throw ParseError("alpha: expected M = " + std::to_string(m) + " rows, got " +
                     std::to_string(rows.size()));
  std::vector<cplx> flat;
  flat.reserve(static_cast<std::size_t>(m) * n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("alpha[" + std::to_string(i) + "]: expected N = " +
                       std::to_string(n) + " entries, got " +
                       std::to_string(rows[i].size()));
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return FrameMatrix(m, n, std::move(flat));
}

FrameMatrix read_frame_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return frame_matrix_from_json_text(buf.str(), path.string());
}

std::string frame_matrix_to_json_text(const FrameMatrix& matrix) {
  json alpha = json::array();
  for (int i = 0; i < matrix.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < matrix.cols; ++j) row.push_back(entry_to_json(matrix.at(i, j)));
    alpha.push_back(std::move(row));
  }
  json j{{"N", matrix.cols}, {"M", matrix.rows}, {"alpha", std::move(alpha)}};
  return j.dump(2) + "\n";
}

void write_frame_matrix(const std::filesystem::path& path,
                        const FrameMatrix& matrix) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path.string() + " for writing");
  out << frame_matrix_to_json_text(matrix);
}

std::vector<std::vector<cplx>> read_psi_rows(const std::filesystem::path& path) {
  const json j = load_json(path);
  if (!j.contains("psi")) throw ParseError(path.string() + ": missing field \"psi\"");
  return complex_rows(j["psi"], "psi");
}

GridFunction1D read_grid_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(path.string() + ": empty file");
  int base = 0;
  int level = -1;
  if (std::sscanf(line.c_str(), "# base=%d level=%d", &base, &level) != 2)
    throw ParseError(path.string() + ": header must be \"# base=N level=k\"");
  if (base < 1 || level < 0)
    throw ParseError(path.string() + ": bad base/level in header");
  const std::size_t cells = ipow(base, level);
  std::vector<cplx> coeffs(cells, cplx{0.0, 0.0});
  std::vector<bool> seen(cells, false);
  std::size_t filled = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("index", 0) == 0) continue;  // optional column header
    long long index = -1;
    double re = 0.0, im = 0.0;
    if (std::sscanf(line.c_str(), "%lld,%lf,%lf", &index, &re, &im) != 3)
      throw ParseError(path.string() + ": bad data line \"" + line + "\"");
    if (index < 0 || static_cast<std::size_t>(index) >= cells)
      throw ParseError(path.string() + ": cell index " + std::to_string(index) +
                       " out of range");
    if (seen[static_cast<std::size_t>(index)])
      throw ParseError(path.string() + ": duplicate cell index " +
                       std::to_string(index));
    seen[static_cast<std::size_t>(index)] = true;
    coeffs[static_cast<std::size_t>(index)] = cplx{re, im};
    ++filled;
  }
  if (filled != cells)
    throw ParseError(path.string() + ": expected " + std::to_string(cells) +
                     " cells, got " + std::to_string(filled));
  return GridFunction1D(base, level, std::move(coeffs));
}

void write_grid_csv(const std::filesystem::path& path, const GridFunction1D& f) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path.string() + " for writing");
  out << "# base=" << f.base << " level=" << f.level << '\n';
  char buf[80];
  for (std::size_t b = 0; b < f.coeffs.size(); ++b) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g", b, f.coeffs[b].real(),
                  f.coeffs[b].imag());
    out << buf << '\n';
  }
}

CoefficientSet read_coefficients(const std::filesystem::path& path) {
  const json j = load_json(path);
  CoefficientSet out;
  out.source_level = int_field(j, "source_level");
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw ParseError(path.string() + ": missing array \"coeffs\"");
  for (std::size_t i = 0; i < j["coeffs"].size(); ++i) {
    const json& item = j["coeffs"][i];
    const std::string where = "coeffs[" + std::to_string(i) + "]";
    if (!item.contains("word") || !item["word"].is_array())
      throw ParseError(where + ": missing array \"word\"");
    Word w;
    for (const json& d : item["word"]) {
      if (!d.is_number_integer())
        throw ParseError(where + ".word: digits must be integers");
      w.digits.push_back(d.get<int>());
    }
    if (!w.canonical())
      throw ParseError(where + ".word: trailing zero (non-canonical word)");
    if (!item.contains("re") || !item.contains("im"))
      throw ParseError(where + ": missing \"re\"/\"im\"");
    out.coeffs.emplace_back(
        w, cplx{item["re"].get<double>(), item["im"].get<double>()});
  }
  return out;
}

void write_coefficients(const std::filesystem::path& path,
                        const CoefficientSet& coeffs,
                        std::optional<double> parseval_residual) {
  json items = json::array();
  for (const auto& [w, c] : coeffs.coeffs) {
    items.push_back(
        {{"word", w.digits}, {"re", c.real()}, {"im", c.imag()}});
  }
  json j{{"source_level", coeffs.source_level}, {"coeffs", std::move(items)}};
  if (parseval_residual) j["parseval_residual"] = *parseval_residual;
  save_json(path, j);
}

void write_dilation(const std::filesystem::path& path,
                    const DilationSystem& sys) {
  json iota = json::array();
  for (const auto& [b, bp] : sys.iota) iota.push_back(json::array({b, bp}));
  const int q = sys.big_base();
  json a = json::array();
  for (int r = 0; r < q; ++r) {
    json row = json::array();
    for (int c = 0; c < q; ++c) row.push_back(entry_to_json(sys.a_at(r, c)));
    a.push_back(std::move(row));
  }
  save_json(path, json{{"Nprime", sys.nprime},
                       {"iota", std::move(iota)},
                       {"a", std::move(a)}});
}

DilationExport read_dilation(const std::filesystem::path& path) {
  const json j = load_json(path);
  DilationExport out;
  if (j.contains("Nprime")) {
    out.nprime = int_field(j, "Nprime");
  } else {
    out.nprime = int_field(j, "nprime");
  }
  if (!j.contains("iota") || !j["iota"].is_array())
    throw ParseError(path.string() + ": missing array \"iota\"");
  for (const json& pair : j["iota"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(path.string() + ": iota entries must be [b, b'] pairs");
    out.iota.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  if (!j.contains("a")) throw ParseError(path.string() + ": missing field \"a\"");
  const auto rows = complex_rows(j["a"], "a");
  out.dim = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != out.dim)
      throw ParseError(path.string() + ": \"a\" must be square");
    out.a.insert(out.a.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace pframe::io
