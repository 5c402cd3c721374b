#include "hankel_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "hankel_lab/error.hpp"

namespace hankel_cli {

namespace {

constexpr double kWidth = 640, kHeight = 480, kMargin = 60;
const char* const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const hankel_lab::CsvTable& table, bool loglog) {
    if (table.header.size() < 2) throw hankel_lab::ConfigError("plot needs an x column and at least one series");
    const auto map = [&](double v) { return loglog ? std::log10(v) : v; };
    const auto drawable = [&](double x, double y) {
        return std::isfinite(x) && std::isfinite(y) && (!loglog || (x > 0.0 && y > 0.0));
    };

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& row : table.rows)
        for (std::size_t c = 1; c < row.size(); ++c)
            if (drawable(row[0], row[c])) {
                xmin = std::min(xmin, map(row[0]));
                xmax = std::max(xmax, map(row[0]));
                ymin = std::min(ymin, map(row[c]));
                ymax = std::max(ymax, map(row[c]));
            }
    if (!(xmin <= xmax)) throw hankel_lab::ConfigError("plot: no drawable points");
    if (xmax == xmin) xmax = xmin + 1.0;
    if (ymax == ymin) ymax = ymin + 1.0;
    const auto px = [&](double x) { return kMargin + (map(x) - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin); };
    const auto py = [&](double y) { return kHeight - kMargin - (map(y) - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin); };

    std::ostringstream os;
    os.precision(6);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
       << kHeight - kMargin << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kHeight - kMargin
       << "\" stroke=\"black\"/>\n";
    const std::string xl = loglog ? "log10 " + table.header[0] : table.header[0];
    std::string yl;
    for (std::size_t c = 1; c < table.header.size(); ++c) yl += (c > 1 ? ", " : "") + table.header[c];
    if (loglog) yl = "log10 " + yl;
    os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">" << escape(xl)
       << "</text>\n"
       << "<text x=\"18\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " << kHeight / 2
       << ")\">" << escape(yl) << "</text>\n";
    os << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 18 << "\" text-anchor=\"middle\">" << xmin
       << "</text>\n<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 18
       << "\" text-anchor=\"middle\">" << xmax << "</text>\n<text x=\"" << kMargin - 6 << "\" y=\""
       << kHeight - kMargin << "\" text-anchor=\"end\">" << ymin << "</text>\n<text x=\"" << kMargin - 6 << "\" y=\""
       << kMargin + 4 << "\" text-anchor=\"end\">" << ymax << "</text>\n";

    for (std::size_t c = 1; c < table.header.size(); ++c) {
        os << "<polyline data-series=\"" << escape(table.header[c]) << "\" fill=\"none\" stroke=\""
           << kColors[(c - 1) % std::size(kColors)] << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& row : table.rows) {
            if (!drawable(row[0], row[c])) continue;
            os << (first ? "" : " ") << px(row[0]) << ',' << py(row[c]);
            first = false;
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace hankel_cli
