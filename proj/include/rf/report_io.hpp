#pragma once

#include <string>
#include <string_view>

namespace rf::io {

/// printf("%.*g"): 17 digits round-trips a double.
std::string format_g(double value, int digits = 17);

/// Quotes a CSV field if it holds a comma, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace rf::io
