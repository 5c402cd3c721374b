#ifndef HANKEL_CLI_SVG_HPP
#define HANKEL_CLI_SVG_HPP

#include <string>

#include "hankel_lab/csv.hpp"

namespace hankel_cli {

/// First column is x; every further column becomes one polyline. With
/// loglog, rows with a non-positive coordinate are dropped from that series.
/// Throws ConfigError when fewer than two columns or no drawable point.
std::string render_svg(const hankel_lab::CsvTable& table, bool loglog);

} // namespace hankel_cli

#endif
