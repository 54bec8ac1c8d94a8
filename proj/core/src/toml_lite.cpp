#include "gateway/toml_lite.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include <fmt/format.h>

namespace gateway::toml_lite {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool bare_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool valid_key(std::string_view key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), bare_key_char);
}

bool valid_table_name(std::string_view name) {
  if (name.empty() || name.front() == '.' || name.back() == '.') return false;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t dot = name.find('.', start);
    const std::string_view part =
        name.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    if (!valid_key(part)) return false;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return true;
}

// Strips a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_string && c == '\\') {
      ++i;
    } else if (c == '"') {
      in_string = !in_string;
    } else if (c == '#' && !in_string) {
      return line.substr(0, i);
    }
  }
  return line;
}

Value parse_value(std::string_view raw, std::size_t line) {
  if (raw.empty()) throw SyntaxError(line, "missing value after '='");
  if (raw.front() == '"') {
    if (raw.size() < 2 || raw.back() != '"') throw SyntaxError(line, "unterminated string");
    std::string out;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
      char c = raw[i];
      if (c == '"') throw SyntaxError(line, "unexpected '\"' inside string");
      if (c == '\\') {
        if (i + 2 >= raw.size()) throw SyntaxError(line, "dangling escape in string");
        switch (raw[++i]) {
          case '"': c = '"'; break;
          case '\\': c = '\\'; break;
          case 'n': c = '\n'; break;
          case 't': c = '\t'; break;
          default: throw SyntaxError(line, "unsupported escape sequence in string");
        }
      }
      out.push_back(c);
    }
    return {ValueKind::String, std::move(out)};
  }
  if (raw == "true" || raw == "false") return {ValueKind::Boolean, std::string(raw)};
  if (!to_double(raw)) {
    throw SyntaxError(line, fmt::format("cannot parse value '{}'", raw));
  }
  return {ValueKind::Number, std::string(raw)};
}

}  // namespace

const Entry* Table::find(std::string_view key) const {
  for (const auto& entry : entries) {
    if (entry.key == key) return &entry;
  }
  return nullptr;
}

const Table* Document::find(std::string_view name) const {
  for (const auto& table : tables) {
    if (table.name == name) return &table;
  }
  return nullptr;
}

std::optional<double> to_double(std::string_view literal) noexcept {
  if (!literal.empty() && literal.front() == '+') literal.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
  if (ec != std::errc{} || ptr != literal.data() + literal.size() || literal.empty() ||
      !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<unsigned long long> to_unsigned(std::string_view literal) noexcept {
  if (!literal.empty() && literal.front() == '+') literal.remove_prefix(1);
  unsigned long long value = 0;
  const auto [ptr, ec] = std::from_chars(literal.data(), literal.data() + literal.size(), value);
  if (ec != std::errc{} || ptr != literal.data() + literal.size() || literal.empty()) {
    return std::nullopt;
  }
  return value;
}

Document parse(std::string_view text) {
  Document doc;
  doc.tables.push_back(Table{"", 0, {}});
  Table* current = &doc.tables.front();

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);

    line = trim(strip_comment(line));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3 || line[1] == '[') {
        throw SyntaxError(line_no, fmt::format("malformed table header '{}'", line));
      }
      const std::string_view name = trim(line.substr(1, line.size() - 2));
      if (!valid_table_name(name)) {
        throw SyntaxError(line_no, fmt::format("invalid table name '{}'", name));
      }
      if (doc.find(name) != nullptr) {
        throw SyntaxError(line_no, fmt::format("table [{}] defined twice", name));
      }
      doc.tables.push_back(Table{std::string(name), line_no, {}});
      current = &doc.tables.back();
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw SyntaxError(line_no, fmt::format("expected 'key = value', got '{}'", line));
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (!valid_key(key)) throw SyntaxError(line_no, fmt::format("invalid key '{}'", key));
    if (current->find(key) != nullptr) {
      throw SyntaxError(line_no, fmt::format("key '{}' defined twice", key));
    }
    current->entries.push_back(
        Entry{std::string(key), parse_value(trim(line.substr(eq + 1)), line_no), line_no});
  }
  return doc;
}

}  // namespace gateway::toml_lite
