#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ixpgraph::csv {

// Splits one RFC 4180 record. Quoted fields may contain commas and doubled
// quotes; records spanning several lines are not supported. Returns nullopt
// on an unterminated quote.
std::optional<std::vector<std::string>> split(std::string_view line);

// Quotes a field only when it contains a comma, quote or newline.
std::string escape(std::string_view field);

// Line reader that strips a UTF-8 BOM and trailing '\r', and skips blank lines.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  // Next non-blank physical line; nullopt at end of input.
  std::optional<std::string> next_line();
  std::size_t line_number() const { return line_number_; }

 private:
  std::istream& in_;
  std::size_t line_number_ = 0;
};

std::string_view trim(std::string_view text);

}  // namespace ixpgraph::csv
