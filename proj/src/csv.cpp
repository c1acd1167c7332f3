#include "leachate/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>

#include "leachate/error.hpp"

namespace leachate {

std::size_t write_profiles_csv(const SimulationResult& result, std::ostream& sink) {
    sink << kProfileCsvHeader << '\n';
    std::size_t rows = 0;
    char buf[128];
    for (const auto& snap : result.snapshots) {
        const GridSpec& g = snap.grid;
        for (int i = 0; i < g.nx; ++i) {
            for (int j = 0; j < g.nz; ++j) {
                std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g\n", snap.t, i * g.dx, j * g.dz, snap(i, j));
                sink << buf;
                ++rows;
            }
        }
    }
    return rows;
}

std::size_t write_profiles_csv(const SimulationResult& result, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    const std::size_t rows = write_profiles_csv(result, out);
    out.flush();
    if (!out) throw IoError("write to '" + path + "' failed");
    return rows;
}

std::vector<CsvRow> read_profiles_csv(std::istream& source) {
    std::string line;
    if (!std::getline(source, line) || line != kProfileCsvHeader) throw ConfigError("profile CSV: bad header");
    std::vector<CsvRow> rows;
    while (std::getline(source, line)) {
        if (line.empty()) continue;
        double fields[4];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int f = 0; f < 4; ++f) {
            const auto [next, ec] = std::from_chars(p, end, fields[f]);
            if (ec != std::errc()) throw ConfigError("profile CSV: bad row '" + line + "'");
            p = next;
            if (f < 3) {
                if (p == end || *p != ',') throw ConfigError("profile CSV: bad row '" + line + "'");
                ++p;
            }
        }
        if (p != end) throw ConfigError("profile CSV: trailing data in '" + line + "'");
        rows.push_back({fields[0], fields[1], fields[2], fields[3]});
    }
    return rows;
}

}  // namespace leachate
