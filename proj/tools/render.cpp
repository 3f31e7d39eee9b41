#include "render.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace pellkit::cli {

using json = nlohmann::ordered_json;

std::optional<Format> parse_format(const std::string& s) {
  if (s == "human") return Format::human;
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  if (s == "markdown") return Format::markdown;
  return std::nullopt;
}

Cell integer(const std::string& decimal) { return Integer{decimal}; }
Cell integer(long long v) { return Integer{std::to_string(v)}; }

namespace {

// Integers that fit in int64 become JSON numbers; larger ones stay decimal
// strings so no parser rounds them.
json integer_json(const Integer& i) {
  const std::string& d = i.digits;
  const bool negative = !d.empty() && d[0] == '-';
  const std::string mag = negative ? d.substr(1) : d;
  const std::string limit = negative ? "9223372036854775808" : "9223372036854775807";
  if (mag.size() < limit.size() || (mag.size() == limit.size() && mag <= limit)) return std::stoll(d);
  return d;
}

json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Integer>) {
          return integer_json(v);
        } else if constexpr (std::is_same_v<T, std::vector<Integer>>) {
          json arr = json::array();
          for (const auto& i : v) arr.push_back(integer_json(i));
          return arr;
        } else {
          return v;
        }
      },
      c);
}

json fields_json(const std::vector<std::pair<std::string, Cell>>& fields) {
  json obj = json::object();
  for (const auto& [k, v] : fields) obj[k] = cell_json(v);
  return obj;
}

void csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << '\n';
}

void md_line(std::ostream& out, const std::vector<std::string>& cells) {
  out << '|';
  for (const auto& c : cells) out << ' ' << c << " |";
  out << '\n';
}

void markdown_table(std::ostream& out, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
  md_line(out, header);
  out << '|';
  for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
  out << '\n';
  for (const auto& r : rows) md_line(out, r);
}

std::vector<std::string> texts(const std::vector<Cell>& cells) {
  std::vector<std::string> t;
  for (const auto& c : cells) t.push_back(cell_text(c));
  return t;
}

}  // namespace

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, Integer>) {
          return v.digits;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::vector<Integer>>) {
          std::string s;
          for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i].digits;
          return s;
        } else {
          return v;
        }
      },
      c);
}

void render_machine(const Document& doc, Format format, std::ostream& out, std::ostream& side) {
  if (format == Format::json) {
    json rows = json::array();
    if (doc.is_record()) {
      rows.push_back(fields_json(doc.record));
    } else {
      for (const auto& r : doc.rows) {
        json row = json::object();
        for (std::size_t i = 0; i < doc.columns.size(); ++i) row[doc.columns[i]] = cell_json(r[i]);
        rows.push_back(std::move(row));
      }
    }
    json obj = json::object();
    obj["rows"] = std::move(rows);
    if (!doc.summary.empty()) obj["summary"] = fields_json(doc.summary);
    out << obj.dump() << '\n';
    return;
  }

  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  if (doc.is_record()) {
    std::vector<Cell> values;
    for (const auto& [k, v] : doc.record) {
      header.push_back(k);
      values.push_back(v);
    }
    rows.push_back(texts(values));
  } else {
    header = doc.columns;
    for (const auto& r : doc.rows) rows.push_back(texts(r));
  }

  if (format == Format::csv) {
    csv_line(out, header);
    for (const auto& r : rows) csv_line(out, r);
    for (const auto& [k, v] : doc.summary) side << k << '=' << cell_text(v) << '\n';
  } else {
    markdown_table(out, header, rows);
    if (!doc.summary.empty()) {
      out << '\n';
      for (const auto& [k, v] : doc.summary) out << "- " << k << ": " << cell_text(v) << '\n';
    }
  }
}

void render_human_table(const Document& doc, std::ostream& out) {
  std::vector<std::vector<std::string>> lines;
  lines.push_back(doc.columns);
  for (const auto& r : doc.rows) lines.push_back(texts(r));
  std::vector<std::size_t> width(doc.columns.size(), 0);
  for (const auto& l : lines)
    for (std::size_t i = 0; i < l.size(); ++i) width[i] = std::max(width[i], l[i].size());
  for (const auto& l : lines) {
    std::string s;
    for (std::size_t i = 0; i < l.size(); ++i) {
      s += l[i];
      if (i + 1 < l.size()) s += std::string(width[i] - l[i].size() + 2, ' ');
    }
    out << s << '\n';
  }
  for (const auto& [k, v] : doc.summary) out << k << ": " << cell_text(v) << '\n';
}

}  // namespace pellkit::cli
