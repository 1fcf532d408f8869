#ifndef PCZ_CSV_IO_HPP
#define PCZ_CSV_IO_HPP

#include <iosfwd>
#include <string>

#include "pcz/grid_function.hpp"
#include "pcz/sequence.hpp"

namespace pcz {

/// Grid CSV: header `t,v1,...,vp,is_left_limit`, rows in time order, the
/// left-limit row at integer n (is_left_limit = 1) immediately before the
/// interior row at n. Values printed with `precision` significant digits
/// (default 17, lossless for doubles).
void write_grid_csv(const GridFunction& f, std::ostream& os, int precision = 17);
void write_grid_csv_file(const GridFunction& f, const std::string& path, int precision = 17);
std::string grid_to_csv(const GridFunction& f, int precision = 17);

GridFunction read_grid_csv(std::istream& is);
GridFunction read_grid_csv_file(const std::string& path);
GridFunction grid_from_csv(const std::string& text);

/// Sequence CSV: header `n,v1,...,vp`, one row per integer, ascending and
/// contiguous.
void write_sequence_csv(const AASequence& s, std::ostream& os, int precision = 17);
void write_sequence_csv_file(const AASequence& s, const std::string& path, int precision = 17);

AASequence read_sequence_csv(std::istream& is);
AASequence read_sequence_csv_file(const std::string& path);

/// %.{precision}g rendering used by every writer.
std::string format_double(double x, int precision = 17);

}  // namespace pcz

#endif
