#ifndef HANKEL_LAB_CSV_HPP
#define HANKEL_LAB_CSV_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hankel_lab {

/// Shortest-safe round-trip form: 17 significant digits.
std::string format_double(double x);

/// Numeric CSV with a mandatory header row.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    /// Column index by name; throws ConfigError when absent.
    std::size_t column(const std::string& name) const;
    std::vector<double> values(const std::string& name) const;
};

/// Throws ConfigError on ragged rows or non-numeric fields.
CsvTable read_csv(std::istream& is);
CsvTable read_csv_file(const std::string& path);

} // namespace hankel_lab

#endif
