#include "purejump/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace purejump {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_path_csv(std::ostream& out, const SamplePath& path) {
    out << "time,value\n";
    const std::size_t n = path.n();
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = path.t0 + path.T * (static_cast<double>(i) / static_cast<double>(n));
        out << format_double(t) << ',' << format_double(path.values[i]) << '\n';
    }
}

void write_path_csv_file(const std::string& filename, const SamplePath& path) {
    std::ofstream out(filename);
    if (!out) throw std::runtime_error("write_path_csv: cannot open " + filename);
    write_path_csv(out, path);
}

SamplePath read_path_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("read_path_csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "time,value")
        throw std::runtime_error("read_path_csv: expected header \"time,value\"");

    std::vector<double> times, values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("read_path_csv: bad row at line " + std::to_string(line_no));
        char* end = nullptr;
        const std::string ts = line.substr(0, comma), vs = line.substr(comma + 1);
        const double t = std::strtod(ts.c_str(), &end);
        if (end != ts.c_str() + ts.size())
            throw std::runtime_error("read_path_csv: bad time at line " + std::to_string(line_no));
        const double v = std::strtod(vs.c_str(), &end);
        if (end != vs.c_str() + vs.size())
            throw std::runtime_error("read_path_csv: bad value at line " + std::to_string(line_no));
        times.push_back(t);
        values.push_back(v);
    }
    if (times.size() < 3) throw std::runtime_error("read_path_csv: need at least 3 observations");
    return SamplePath(times.back() - times.front(), std::move(values), times.front());
}

SamplePath read_path_csv_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw std::runtime_error("read_path_csv: cannot open " + filename);
    return read_path_csv(in);
}

}  // namespace purejump
