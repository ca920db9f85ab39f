#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace normix {

// Formats a real with 17 significant digits, '.' decimal, no locale, so
// regression fixtures compare byte-for-byte across runs and languages.
std::string format_real(double value);

// CSV emitter; run metadata is embedded as leading '# key=value' comment
// lines so any output file reconstructs its run.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  void metadata(const std::map<std::string, std::string>& kv);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  void numeric_row(const std::vector<double>& cells);

 private:
  std::ostream& os_;
};

// Minimal log-log polyline plot; one series per call, no dependencies.
class SvgPlot {
 public:
  SvgPlot(double width = 720, double height = 480);
  void add_series(const std::string& label, const std::string& color,
                  const std::vector<double>& xs,
                  const std::vector<double>& ys);
  void write(std::ostream& os, const std::string& title) const;

 private:
  struct Series {
    std::string label, color;
    std::vector<double> xs, ys;
  };
  double width_, height_;
  std::vector<Series> series_;
};

}  // namespace normix
