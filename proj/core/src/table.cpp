#include "roughspace/table.hpp"

#include <algorithm>

namespace roughspace::cli {

std::optional<TableFormat> table_format_from_string(const std::string& tag) {
    if (tag == "table") return TableFormat::table;
    if (tag == "csv") return TableFormat::csv;
    return std::nullopt;
}

namespace {

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string emit_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows,
                       TableFormat format) {
    std::string out;
    if (format == TableFormat::csv) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (c) out += ',';
            out += csv_field(header[c]);
        }
        out += '\n';
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out += ',';
                out += csv_field(row[c]);
            }
            out += '\n';
        }
        return out;
    }

    std::vector<std::size_t> widths(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());

    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += "  ";
            out += row[c];
            if (c + 1 < row.size())
                out.append(widths[c] > row[c].size() ? widths[c] - row[c].size() : 0, ' ');
        }
        out += '\n';
    };
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
    return out;
}

}  // namespace roughspace::cli
