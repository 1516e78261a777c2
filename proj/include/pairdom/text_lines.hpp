#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairdom/errors.hpp"

namespace pairdom::detail {

struct Line {
  std::size_t number;
  std::string_view text;
};

/// Yields non-empty, non-comment lines with their 1-based line numbers.
/// A trailing '\r' is stripped.
class LineReader {
public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::optional<Line> next() {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++number_;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty() || line.front() == '#') continue;
      return Line{number_, line};
    }
    return std::nullopt;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

/// Exactly `count` integers separated by single spaces.
inline std::vector<std::int64_t> parse_fields(const Line &line, std::size_t count,
                                              const char *expected) {
  std::vector<std::int64_t> out;
  std::string_view rest = line.text;
  while (true) {
    auto sp = rest.find(' ');
    std::string_view tok = rest.substr(0, sp);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(line.number, std::string("malformed line, expected ") + expected);
    out.push_back(value);
    if (sp == std::string_view::npos) break;
    rest.remove_prefix(sp + 1);
  }
  if (out.size() != count)
    throw ParseError(line.number, std::string("malformed line, expected ") + expected);
  return out;
}

} // namespace pairdom::detail
