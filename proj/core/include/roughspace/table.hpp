#pragma once

#include <optional>
#include <string>
#include <vector>

namespace roughspace::cli {

enum class TableFormat { table, csv };

std::optional<TableFormat> table_format_from_string(const std::string& tag);

// csv: header line, comma-separated, RFC-style quoting, LF endings;
// table: width-aligned columns. Byte-stable for identical inputs.
std::string emit_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows,
                       TableFormat format);

}  // namespace roughspace::cli
