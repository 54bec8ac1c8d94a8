#include <doctest.h>

#include "gateway/toml_lite.hpp"

namespace toml = gateway::toml_lite;

TEST_CASE("tables, keys and value kinds") {
  const auto doc = toml::parse(R"(# header
version = 1
name = "a # not a comment"   # trailing

[trap]
flag = true
x = -1.5e-3
[pulse.branch1]
kind = "pi"
)");
  REQUIRE(doc.tables.size() == 3);
  const toml::Table* root = doc.find("");
  REQUIRE(root != nullptr);
  CHECK(root->find("version")->value.kind == toml::ValueKind::Number);
  CHECK(root->find("name")->value.text == "a # not a comment");
  CHECK(root->find("name")->line == 3);
  const toml::Table* trap = doc.find("trap");
  REQUIRE(trap != nullptr);
  CHECK(trap->find("flag")->value.kind == toml::ValueKind::Boolean);
  CHECK(toml::to_double(trap->find("x")->value.text) == -1.5e-3);
  CHECK(doc.find("pulse.branch1")->find("kind")->value.text == "pi");
  CHECK(doc.find("missing") == nullptr);
}

TEST_CASE("syntax errors carry the line") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      toml::parse(text);
    } catch (const toml::SyntaxError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("a = 1\nb\n") == 2);
  CHECK(line_of("a = 1\na = 2\n") == 2);
  CHECK(line_of("[t]\n[t]\n") == 2);
  CHECK(line_of("[t\n") == 1);
  CHECK(line_of("s = \"open\n") == 1);
  CHECK(line_of("x = [1, 2]\n") == 1);
}

TEST_CASE("number conversion") {
  CHECK(toml::to_double("1e-9") == 1e-9);
  CHECK(toml::to_double("+3") == 3.0);
  CHECK_FALSE(toml::to_double("1e-9x").has_value());
  CHECK_FALSE(toml::to_double("").has_value());
  CHECK(toml::to_unsigned("20240601") == 20240601ULL);
  CHECK(toml::to_unsigned("18446744073709551615") == 18446744073709551615ULL);
  CHECK_FALSE(toml::to_unsigned("-1").has_value());
  CHECK_FALSE(toml::to_unsigned("1.5").has_value());
}
