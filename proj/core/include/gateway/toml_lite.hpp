#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Reader for the flat TOML subset used by scenario files: `[section]` or
// `[a.b]` headers, `key = value` pairs with basic strings, booleans, integers
// and floats, and `#` comments. Arrays, inline tables and multi-line strings
// are not supported.
namespace gateway::toml_lite {

enum class ValueKind { String, Boolean, Number };

struct Value {
  ValueKind kind = ValueKind::Number;
  std::string text;  // unquoted string contents or the numeric literal
};

struct Entry {
  std::string key;
  Value value;
  std::size_t line = 0;
};

struct Table {
  std::string name;  // empty for the root table
  std::size_t line = 0;
  std::vector<Entry> entries;

  [[nodiscard]] const Entry* find(std::string_view key) const;
};

struct Document {
  std::vector<Table> tables;  // root first, then in file order

  [[nodiscard]] const Table* find(std::string_view name) const;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, const std::string& message)
      : std::runtime_error(message), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Throws SyntaxError on malformed lines, duplicate tables or duplicate keys.
Document parse(std::string_view text);

std::optional<double> to_double(std::string_view literal) noexcept;
std::optional<unsigned long long> to_unsigned(std::string_view literal) noexcept;

}  // namespace gateway::toml_lite
