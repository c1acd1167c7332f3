#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "leachate/engine.hpp"

namespace leachate {

inline constexpr const char* kProfileCsvHeader = "t_day,x_cm,z_cm,conc_mg_per_L";

/// Header plus one row per (snapshot, node) ordered by (t, x, z), every value
/// printed with 9 significant digits. Returns the number of data rows.
std::size_t write_profiles_csv(const SimulationResult& result, std::ostream& sink);
/// Throws IoError when the file cannot be written.
std::size_t write_profiles_csv(const SimulationResult& result, const std::string& path);

struct CsvRow {
    double t_day = 0.0;
    double x_cm = 0.0;
    double z_cm = 0.0;
    double conc_mg_per_L = 0.0;
};

/// Reads back a profile CSV; throws ConfigError on a bad header or row.
std::vector<CsvRow> read_profiles_csv(std::istream& source);

}  // namespace leachate
