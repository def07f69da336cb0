#include "nncalc/table.hpp"

#include <cstdio>

#include "nncalc/errors.hpp"

namespace nncalc {

std::string format_value(double v) {
    if (v == 0.0) v = 0.0;  // squash -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) os << ',';
        os << t.columns[c];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        if (row.size() != t.columns.size()) {
            throw InvalidParam("write_csv: row width does not match header");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << format_value(row[c]);
        }
        os << '\n';
    }
}

}  // namespace nncalc
