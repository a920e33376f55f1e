#include "mol/csv.hpp"

#include <cstdio>
#include <ostream>

#include "mol/errors.hpp"

namespace mol::csv {

std::string format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_row(std::ostream& os, std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << format(values[i]);
    }
    os << '\n';
}

void write_grid(std::ostream& os, std::string_view axis_label,
                std::span<const double> column_positions,
                std::span<const double> axis_values,
                const std::vector<std::vector<double>>& rows) {
    if (rows.size() != axis_values.size())
        throw input_error("write_grid: row count does not match axis length");

    os << axis_label;
    for (double p : column_positions) os << ',' << format(p);
    os << '\n';

    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != column_positions.size())
            throw input_error("write_grid: ragged row");
        os << format(axis_values[i]);
        for (double v : rows[i]) os << ',' << format(v);
        os << '\n';
    }
}

} // namespace mol::csv
