#include <sstream>

#include "doctest.h"
#include "normix/report.hpp"

using namespace normix;

TEST_CASE("format_real uses 17 significant digits and '.' decimal") {
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(2.0 * 3.141592653589793) == "6.2831853071795862");
  CHECK(format_real(6.25e-6) == "6.2500000000000003e-06");
}

TEST_CASE("csv writer layout") {
  std::ostringstream os;
  CsvWriter csv(os);
  csv.metadata({{"seed", "7"}, {"command", "estimate"}});
  csv.header({"n", "value"});
  csv.numeric_row({4.0, 0.5});
  csv.row({"8", "x"});
  CHECK(os.str() ==
        "# command=estimate\n"
        "# seed=7\n"
        "n,value\n"
        "4,0.5\n"
        "8,x\n");
}

TEST_CASE("csv output is byte-stable across writes") {
  auto render = [] {
    std::ostringstream os;
    CsvWriter csv(os);
    csv.metadata({{"seed", "11"}});
    csv.header({"a", "b"});
    csv.numeric_row({1.0 / 3.0, 6.25e-6});
    return os.str();
  };
  CHECK(render() == render());
}

TEST_CASE("svg plot emits a well-formed document") {
  SvgPlot plot;
  plot.add_series("bound", "blue", {1000, 10000}, {1e-3, 1e-4});
  plot.add_series("rate", "red", {1000, 10000}, {2e-3, 3e-4});
  std::ostringstream os;
  plot.write(os, "rates");
  const std::string svg = os.str();
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("bound") != std::string::npos);

  SvgPlot bad;
  bad.add_series("neg", "red", {1.0}, {-1.0});
  std::ostringstream os2;
  CHECK_THROWS_AS(bad.write(os2, "t"), std::invalid_argument);
  CHECK_THROWS_AS(plot.add_series("mismatch", "red", {1.0}, {1.0, 2.0}),
                  std::invalid_argument);
}
