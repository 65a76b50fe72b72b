#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fekete::cli {

enum class Format { Json, Csv, Table };

Format parse_format(std::string_view text);

using Cell = std::variant<double, std::complex<double>, std::string, bool, long long>;

struct Field {
  std::string key;
  Cell value;
};

using Record = std::vector<Field>;

/// A flat record. json: one object; csv: header line plus value line;
/// table: "key: value" lines.
void emit_record(std::ostream& out, Format format, const Record& record);

/// Rows under a shared header. In json the rows become an array of objects
/// stored under `rows_key`, next to the `meta` fields; csv and table print
/// only the rows.
void emit_rows(std::ostream& out, Format format, const Record& meta, std::string_view rows_key,
               const std::vector<std::string>& columns, const std::vector<std::vector<Cell>>& rows);

}  // namespace fekete::cli
