#pragma once

#include <iosfwd>
#include <string>

#include "purejump/path.hpp"

namespace purejump {

// Shortest representation that parses back to the identical double.
std::string format_double(double v);

// Two-column CSV with header "time,value". Times are t0 + T*(i/n), so the
// first and last rows carry t0 and t0 + T exactly and the path round-trips
// bit-for-bit.
void write_path_csv(std::ostream& out, const SamplePath& path);
void write_path_csv_file(const std::string& filename, const SamplePath& path);

SamplePath read_path_csv(std::istream& in);
SamplePath read_path_csv_file(const std::string& filename);

}  // namespace purejump
