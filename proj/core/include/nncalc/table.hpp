#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nncalc {

// Column-labelled numeric table, the exchange format between the library and
// the CLI/CSV layer.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// One double at 15 significant digits, '.' decimal separator, no locale
// surprises. -0 is normalized to 0 so equal values format identically.
std::string format_value(double v);

// CSV with a header row, LF line endings.
void write_csv(std::ostream& os, const Table& t);

}  // namespace nncalc
