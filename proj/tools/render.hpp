#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pellkit::cli {

enum class Format { human, csv, json, markdown };

std::optional<Format> parse_format(const std::string& s);

/// Decimal integer of any size, a boolean, a single-token string, a list of
/// decimal integers, or nothing.
struct Integer {
  std::string digits;
};

using Cell = std::variant<std::monostate, Integer, bool, std::string, std::vector<Integer>>;

Cell integer(const std::string& decimal);
Cell integer(long long v);

/// Output of one invocation. A document is either a single record
/// (`record` set, no columns) or a table of rows plus summary fields.
struct Document {
  std::vector<std::pair<std::string, Cell>> record;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;

  bool is_record() const { return columns.empty(); }
};

/// Machine formats. Summary fields go to `side` for csv (stdout stays pure
/// csv) and inline for json/markdown.
void render_machine(const Document& doc, Format format, std::ostream& out, std::ostream& side);

/// Plain aligned text for tables; used by commands without a bespoke line.
void render_human_table(const Document& doc, std::ostream& out);

std::string cell_text(const Cell& c);

}  // namespace pellkit::cli
