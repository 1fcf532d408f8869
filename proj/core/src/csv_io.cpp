#include "pcz/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace pcz {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ShapeError(std::string("CSV: cannot parse ") + what + " value '" + s + "'");
  }
}

struct Row {
  double t;
  std::vector<double> v;
  bool is_left_limit;
};

}  // namespace

std::string format_double(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
  return buf;
}

void write_grid_csv(const GridFunction& f, std::ostream& os, int precision) {
  os << 't';
  for (int i = 1; i <= f.dim(); ++i) os << ",v" << i;
  os << ",is_left_limit\n";
  auto put_row = [&](double t, std::span<const double> v, int flag) {
    os << format_double(t, precision);
    for (double x : v) os << ',' << format_double(x, precision);
    os << ',' << flag << '\n';
  };
  for (int n = f.window().lo; n < f.window().hi; ++n) {
    if (n > f.window().lo) put_row(static_cast<double>(n), f.left_limit(n), 1);
    for (int j = 0; j < f.samples_per_unit(); ++j) put_row(f.time_at(n, j), f.value(n, j), 0);
  }
  put_row(static_cast<double>(f.window().hi), f.left_limit(f.window().hi), 1);
}

void write_grid_csv_file(const GridFunction& f, const std::string& path, int precision) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  write_grid_csv(f, os, precision);
}

std::string grid_to_csv(const GridFunction& f, int precision) {
  std::ostringstream os;
  write_grid_csv(f, os, precision);
  return os.str();
}

GridFunction read_grid_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ShapeError("grid CSV: empty input");
  const auto header = split_csv_line(line);
  if (header.size() < 3 || header.front() != "t" || header.back() != "is_left_limit")
    throw ShapeError("grid CSV: expected header t,v1,...,vp,is_left_limit");
  const int dim = static_cast<int>(header.size()) - 2;

  std::vector<Row> interior, limits;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (static_cast<int>(cells.size()) != dim + 2)
      throw ShapeError("grid CSV: row with " + std::to_string(cells.size()) + " cells, expected " +
                       std::to_string(dim + 2));
    Row r;
    r.t = parse_double(cells[0], "t");
    r.v.resize(dim);
    for (int i = 0; i < dim; ++i) r.v[i] = parse_double(cells[1 + i], "v");
    const double flag = parse_double(cells.back(), "is_left_limit");
    r.is_left_limit = flag != 0.0;
    (r.is_left_limit ? limits : interior).push_back(std::move(r));
  }
  if (interior.empty()) throw ShapeError("grid CSV: no interior rows");

  const int lo = static_cast<int>(std::llround(interior.front().t));
  if (std::abs(interior.front().t - lo) > 1e-9)
    throw ShapeError("grid CSV: first interior t is not an integer");
  std::size_t m = 0;
  while (m < interior.size() && interior[m].t < lo + 1 - 1e-9) ++m;
  if (m == 0 || interior.size() % m != 0)
    throw ShapeError("grid CSV: cannot infer samples_per_unit from row layout");
  const int samples_per_unit = static_cast<int>(m);
  const int pieces = static_cast<int>(interior.size() / m);
  if (static_cast<int>(limits.size()) != pieces)
    throw ShapeError("grid CSV: expected " + std::to_string(pieces) + " left-limit rows, found " +
                     std::to_string(limits.size()));

  GridFunction g(Window{lo, lo + pieces}, samples_per_unit, dim);
  std::size_t k = 0;
  for (int n = lo; n < lo + pieces; ++n)
    for (int j = 0; j < samples_per_unit; ++j, ++k) {
      if (std::abs(interior[k].t - g.time_at(n, j)) > 1e-9)
        throw ShapeError("grid CSV: interior row off the sample lattice at t=" +
                         std::to_string(interior[k].t));
      auto dst = g.value(n, j);
      for (int i = 0; i < dim; ++i) dst[i] = interior[k].v[i];
    }
  for (int n = lo + 1; n <= lo + pieces; ++n) {
    const Row& r = limits[static_cast<std::size_t>(n - lo - 1)];
    if (std::abs(r.t - n) > 1e-9)
      throw ShapeError("grid CSV: left-limit row expected at t=" + std::to_string(n));
    auto dst = g.left_limit(n);
    for (int i = 0; i < dim; ++i) dst[i] = r.v[i];
  }
  g.validate();
  return g;
}

GridFunction read_grid_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open '" + path + "' for reading");
  return read_grid_csv(is);
}

GridFunction grid_from_csv(const std::string& text) {
  std::istringstream is(text);
  return read_grid_csv(is);
}

void write_sequence_csv(const AASequence& s, std::ostream& os, int precision) {
  os << 'n';
  for (int i = 1; i <= s.dim(); ++i) os << ",v" << i;
  os << '\n';
  for (int k = s.window().lo; k <= s.window().hi; ++k) {
    os << k;
    for (double x : s.value(k)) os << ',' << format_double(x, precision);
    os << '\n';
  }
}

void write_sequence_csv_file(const AASequence& s, const std::string& path, int precision) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  write_sequence_csv(s, os, precision);
}

AASequence read_sequence_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ShapeError("sequence CSV: empty input");
  const auto header = split_csv_line(line);
  if (header.size() < 2 || header.front() != "n")
    throw ShapeError("sequence CSV: expected header n,v1,...,vp");
  const int dim = static_cast<int>(header.size()) - 1;

  std::vector<std::pair<int, std::vector<double>>> rows;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (static_cast<int>(cells.size()) != dim + 1)
      throw ShapeError("sequence CSV: malformed row '" + line + "'");
    const double nd = parse_double(cells[0], "n");
    const int n = static_cast<int>(std::llround(nd));
    if (std::abs(nd - n) > 1e-9) throw ShapeError("sequence CSV: non-integer index");
    std::vector<double> v(dim);
    for (int i = 0; i < dim; ++i) v[i] = parse_double(cells[1 + i], "v");
    rows.emplace_back(n, std::move(v));
  }
  if (rows.empty()) throw ShapeError("sequence CSV: no rows");
  AASequence s(Window{rows.front().first, rows.back().first}, dim);
  int expect = rows.front().first;
  for (const auto& [n, v] : rows) {
    if (n != expect)
      throw ShapeError("sequence CSV: indices must be contiguous ascending (saw " +
                       std::to_string(n) + ", expected " + std::to_string(expect) + ")");
    auto dst = s.value(n);
    for (int i = 0; i < dim; ++i) dst[i] = v[i];
    ++expect;
  }
  s.validate();
  return s;
}

AASequence read_sequence_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open '" + path + "' for reading");
  return read_sequence_csv(is);
}

}  // namespace pcz
