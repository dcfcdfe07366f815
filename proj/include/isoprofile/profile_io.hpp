#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "isoprofile/errors.hpp"
#include "isoprofile/profile.hpp"

namespace isoprofile {

/// CSV/JSON parse failure; carries the 1-based line number for CSV input.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t line_number)
        : error(what + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
    std::size_t line;
};

/// Shortest representation that parses back to the same double.
inline std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace detail {

inline double parse_number(const std::string& field, std::size_t line) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    while (begin < end && (*begin == ' ' || *begin == '\t'))
        ++begin;
    while (end > begin && (end[-1] == ' ' || end[-1] == '\t' || end[-1] == '\r'))
        --end;
    double value;
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end)
        throw parse_error("not a number: '" + field + "'", line);
    return value;
}

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(field);
    return out;
}

} // namespace detail

/// Ingest a profile from CSV with header `volume,profile` (extra columns are
/// ignored). Grid metadata comes from the caller: dimension and total volume
/// are not part of the CSV schema.
inline sampled_profile read_profile_csv(std::istream& in, int dimension,
                                        double total_volume = infinity) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line))
        throw parse_error("empty input", 1);
    ++line_no;
    auto header = detail::split_csv(line);
    auto trim = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' '))
            s.pop_back();
        while (!s.empty() && s.front() == ' ')
            s.erase(s.begin());
        return s;
    };
    if (header.size() < 2 || trim(header[0]) != "volume" || trim(header[1]) != "profile")
        throw parse_error("expected header starting with 'volume,profile'", line_no);

    std::vector<double> volumes, values;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty())
            continue;
        const auto fields = detail::split_csv(line);
        if (fields.size() < 2)
            throw parse_error("expected at least two comma-separated fields", line_no);
        volumes.push_back(detail::parse_number(fields[0], line_no));
        values.push_back(detail::parse_number(fields[1], line_no));
        if (volumes.size() >= 2 && !(volumes[volumes.size() - 2] < volumes.back()))
            throw parse_error("volumes must strictly increase", line_no);
    }
    if (volumes.size() < 3)
        throw parse_error("need at least three samples", line_no);
    try {
        return sampled_profile(std::move(volumes), std::move(values), total_volume, dimension);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), line_no);
    }
}

/// Emit `volume,profile` rows; with_psi adds the psi column, the CLI output
/// schema. Values print with shortest round-trip digits.
inline void write_profile_csv(std::ostream& out, const sampled_profile& p, bool with_psi = false) {
    out << (with_psi ? "volume,profile,psi\n" : "volume,profile\n");
    const double e = static_cast<double>(p.dimension()) / (p.dimension() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out << format_double(p.volumes()[i]) << ',' << format_double(p.values()[i]);
        if (with_psi)
            out << ',' << format_double(std::pow(p.values()[i], e));
        out << '\n';
    }
}

} // namespace isoprofile
