#include "boxph/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace boxph {

namespace {

std::vector<double> parse_line(const std::string& line, std::size_t line_no) {
    std::vector<double> row;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
        if (*p == ' ' || *p == '\t' || *p == ',' || *p == '\r') {
            ++p;
            continue;
        }
        double x = 0.0;
        // from_chars does not accept a leading '+'
        const char* start = (*p == '+') ? p + 1 : p;
        auto [next, ec] = std::from_chars(start, end, x);
        if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t' && *next != ',' &&
                                  *next != '\r')) {
            throw InputError("line " + std::to_string(line_no) + ": cannot parse number");
        }
        if (!std::isfinite(x)) {
            throw InputError("line " + std::to_string(line_no) + ": non-finite coordinate");
        }
        row.push_back(x);
        p = next;
    }
    return row;
}

}  // namespace

PointCloud read_points(std::istream& in, std::size_t dim) {
    std::vector<double> coords;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto row = parse_line(line, line_no);
        if (row.empty()) continue;
        if (dim == 0) dim = row.size();
        if (row.size() != dim) {
            throw InputError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(dim) + " coordinates, got " +
                             std::to_string(row.size()));
        }
        coords.insert(coords.end(), row.begin(), row.end());
    }
    if (in.bad()) throw InputError("read error");
    if (dim == 0) return {};
    return PointCloud(dim, std::move(coords));
}

PointCloud read_points(const std::filesystem::path& path, std::size_t dim) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    return read_points(in, dim);
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_points(std::ostream& out, const PointCloud& cloud) {
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud[i];
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k) out << ' ';
            out << format_double(p[k]);
        }
        out << '\n';
    }
}

void write_edges(std::ostream& out, const EdgeSet& edges, double scale) {
    for (const Edge& e : edges) {
        out << e.u << ' ' << e.v << ' ' << format_double(e.value * scale) << '\n';
    }
}

void write_filtration(std::ostream& out, const Filtration& filtration, double scale) {
    for (const Simplex& s : filtration.simplices()) {
        out << int{s.dim};
        for (std::uint32_t v : s.vertices()) out << ' ' << v;
        out << ' ' << format_double(s.value * scale) << '\n';
    }
}

std::string diagram_json(const Diagram& dgm, double scale) {
    auto out = nlohmann::json::array();
    for (int k = 0; k <= dgm.max_degree; ++k) {
        auto pairs = nlohmann::json::array();
        for (const PersistencePair& p : dgm[k]) {
            nlohmann::json death = nullptr;
            if (!p.essential()) death = p.death * scale;
            pairs.push_back({p.birth * scale, death});
        }
        out.push_back({{"degree", k}, {"pairs", std::move(pairs)}});
    }
    return out.dump(1) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp);
            throw InputError("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace boxph
