#include "output.hpp"

#include <fekete/errors.hpp>
#include <fekete/verify.hpp>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <ostream>

namespace fekete::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMachineDigits = 12;
constexpr int kTableDigits = 6;

Json to_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return round_significant(v, kMachineDigits);
        } else if constexpr (std::is_same_v<T, std::complex<double>>) {
          return Json::array({round_significant(v.real(), kMachineDigits), round_significant(v.imag(), kMachineDigits)});
        } else {
          return v;
        }
      },
      cell);
}

std::string to_text(const Cell& cell, int digits) {
  return std::visit(
      [digits](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(v, digits);
        } else if constexpr (std::is_same_v<T, std::complex<double>>) {
          if (v.imag() == 0.0) return format_number(v.real(), digits);
          const double im = round_significant(v.imag(), digits);
          return format_number(v.real(), digits) + (im < 0 ? "-" : "+") + format_number(std::abs(im), digits) + "i";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else {
          return v;
        }
      },
      cell);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_escape(cells[i]);
  out << '\n';
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "table") return Format::Table;
  throw Error(ErrorCode::BadParameter, "unknown format '" + std::string(text) + "'");
}

void emit_record(std::ostream& out, Format format, const Record& record) {
  switch (format) {
    case Format::Json: {
      Json j = Json::object();
      for (const auto& f : record) j[f.key] = to_json(f.value);
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv: {
      std::vector<std::string> keys, values;
      for (const auto& f : record) {
        keys.push_back(f.key);
        values.push_back(to_text(f.value, kMachineDigits));
      }
      csv_line(out, keys);
      csv_line(out, values);
      break;
    }
    case Format::Table: {
      std::size_t width = 0;
      for (const auto& f : record) width = std::max(width, f.key.size());
      for (const auto& f : record) {
        out << std::left << std::setw(static_cast<int>(width)) << f.key << "  " << to_text(f.value, kTableDigits)
            << '\n';
      }
      break;
    }
  }
}

void emit_rows(std::ostream& out, Format format, const Record& meta, std::string_view rows_key,
               const std::vector<std::string>& columns, const std::vector<std::vector<Cell>>& rows) {
  switch (format) {
    case Format::Json: {
      Json j = Json::object();
      for (const auto& f : meta) j[f.key] = to_json(f.value);
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json item = Json::object();
        for (std::size_t c = 0; c < columns.size(); ++c) item[columns[c]] = to_json(row[c]);
        arr.push_back(std::move(item));
      }
      j[std::string(rows_key)] = std::move(arr);
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv: {
      csv_line(out, columns);
      for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (const auto& cell : row) cells.push_back(to_text(cell, kMachineDigits));
        csv_line(out, cells);
      }
      break;
    }
    case Format::Table: {
      std::vector<std::vector<std::string>> text;
      std::vector<std::size_t> width(columns.size());
      for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
      for (const auto& row : rows) {
        auto& line = text.emplace_back();
        for (std::size_t c = 0; c < columns.size(); ++c) {
          line.push_back(to_text(row[c], kTableDigits));
          width[c] = std::max(width[c], line.back().size());
        }
      }
      auto print = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out << (c ? "  " : "") << std::right << std::setw(static_cast<int>(width[c])) << cells[c];
        }
        out << '\n';
      };
      print(columns);
      for (const auto& line : text) print(line);
      break;
    }
  }
}

}  // namespace fekete::cli
