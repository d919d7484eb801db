#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "boxph/filtration.hpp"
#include "boxph/geometry.hpp"
#include "boxph/persistence.hpp"

namespace boxph {

/// Malformed point file or unreadable path.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One point per line, coordinates separated by whitespace and/or commas.
/// Blank lines and lines starting with '#' are skipped. The first point
/// fixes the dimension unless `dim` is non-zero.
PointCloud read_points(std::istream& in, std::size_t dim = 0);
PointCloud read_points(const std::filesystem::path& path, std::size_t dim = 0);

void write_points(std::ostream& out, const PointCloud& cloud);

/// "i j r" per edge, r with 17 significant digits, multiplied by `scale`.
void write_edges(std::ostream& out, const EdgeSet& edges, double scale = 1.0);

/// "dim v0 [v1 [v2 [v3]]] value" per simplex in filtration order.
void write_filtration(std::ostream& out, const Filtration& filtration, double scale = 1.0);

/// JSON array of {"degree": k, "pairs": [[birth, death|null], ...]} for
/// degrees 0..max_degree.
std::string diagram_json(const Diagram& dgm, double scale = 1.0);

/// Formats with 17 significant digits, enough to round-trip a double.
std::string format_double(double x);

/// Writes `contents` next to `path` and renames it into place, so a failed
/// run never leaves a partial file behind.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace boxph
