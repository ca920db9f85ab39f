#include "normix/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace normix {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void CsvWriter::metadata(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) os_ << "# " << key << "=" << value << "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (size_t i = 0; i < columns.size(); ++i)
    os_ << (i ? "," : "") << columns[i];
  os_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
  os_ << "\n";
}

void CsvWriter::numeric_row(const std::vector<double>& cells) {
  for (size_t i = 0; i < cells.size(); ++i)
    os_ << (i ? "," : "") << format_real(cells[i]);
  os_ << "\n";
}

SvgPlot::SvgPlot(double width, double height) : width_(width), height_(height) {}

void SvgPlot::add_series(const std::string& label, const std::string& color,
                         const std::vector<double>& xs,
                         const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("series size mismatch");
  series_.push_back({label, color, xs, ys});
}

void SvgPlot::write(std::ostream& os, const std::string& title) const {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series_) {
    for (double x : s.xs) {
      if (x <= 0.0) throw std::invalid_argument("log-log plot needs x > 0");
      xmin = std::min(xmin, std::log10(x));
      xmax = std::max(xmax, std::log10(x));
    }
    for (double y : s.ys) {
      if (y <= 0.0) throw std::invalid_argument("log-log plot needs y > 0");
      ymin = std::min(ymin, std::log10(y));
      ymax = std::max(ymax, std::log10(y));
    }
  }
  if (series_.empty() || !(xmax > xmin)) {
    xmin = 0.0;
    xmax = 1.0;
  }
  if (!(ymax > ymin)) {
    ymin -= 0.5;
    ymax += 0.5;
  }
  const double ml = 60, mr = 20, mt = 40, mb = 40;
  auto px = [&](double lx) {
    return ml + (lx - xmin) / (xmax - xmin) * (width_ - ml - mr);
  };
  auto py = [&](double ly) {
    return height_ - mb - (ly - ymin) / (ymax - ymin) * (height_ - mt - mb);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_
     << "\" height=\"" << height_ << "\">\n";
  os << "<text x=\"" << width_ / 2 << "\" y=\"20\" text-anchor=\"middle\">"
     << title << "</text>\n";
  os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\""
     << width_ - ml - mr << "\" height=\"" << height_ - mt - mb
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  double legend_y = mt + 14;
  for (const auto& s : series_) {
    os << "<polyline fill=\"none\" stroke=\"" << s.color
       << "\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < s.xs.size(); ++i)
      os << px(std::log10(s.xs[i])) << "," << py(std::log10(s.ys[i])) << " ";
    os << "\"/>\n";
    os << "<text x=\"" << ml + 8 << "\" y=\"" << legend_y << "\" fill=\""
       << s.color << "\">" << s.label << "</text>\n";
    legend_y += 16;
  }
  os << "</svg>\n";
}

}  // namespace normix
