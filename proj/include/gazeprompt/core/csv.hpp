#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gp::core {

/// Splits one CSV line on the delimiter, trimming surrounding whitespace
/// from each field. No quoting support; gaze exports do not quote.
std::vector<std::string> split_csv_line(std::string_view line, char delimiter = ',');

/// Locale-independent double parse. Returns nullopt for empty fields,
/// non-numeric text, "nan"/"NaN" markers, and trailing garbage.
std::optional<double> parse_double(std::string_view field);

struct CsvFile {
    std::vector<std::string> header;           // empty when has_header=false
    std::vector<std::vector<std::string>> rows;
};

CsvFile read_csv(const std::string& path, char delimiter, bool has_header);

/// Case-insensitive lookup of a header column by any of the given names.
int find_column(const std::vector<std::string>& header,
                const std::vector<std::string>& names);

}  // namespace gp::core
