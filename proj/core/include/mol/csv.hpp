#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mol::csv {

/// 9 significant digits, '.' decimal separator, no locale surprises.
std::string format(double v);

void write_row(std::ostream& os, std::span<const double> values);

/// Grid export: header "<axis_label>,<pos_1>,...,<pos_m>", then one row per
/// axis value followed by the m values. Comma delimiter, LF line endings.
void write_grid(std::ostream& os, std::string_view axis_label,
                std::span<const double> column_positions,
                std::span<const double> axis_values,
                const std::vector<std::vector<double>>& rows);

} // namespace mol::csv
