#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "support.hpp"
#include "ualg/io.hpp"
#include "ualg/library.hpp"

using namespace ualg;
using Catch::Matchers::ContainsSubstring;

namespace {
  std::string message_of(std::string const& text) {
    try {
      parse_algebra_json(text, "t.json");
    } catch (Error const& e) {
      return e.what();
    }
    return "";
  }
}  // namespace

TEST_CASE("io: the two-element implication algebra from JSON", "[io]") {
  auto const a = parse_algebra_json(R"({"name": "A", "size": 2,
      "labels": ["1", "2"],
      "ops": [{"name": "mul", "arity": 2, "table": [0, 1, 0, 0]}]})");
  CHECK(a == lib::implication_a());
  CHECK(a.element("1") == Elem{0});
  CHECK(a.apply(0, {0, 1}) == 1);
}

TEST_CASE("io: errors carry locations", "[io]") {
  CHECK_THAT(message_of(R"({"name": "X", "size": 2, "ops": [
      {"name": "mul", "arity": 2, "table": [0, 1, 0]}]})"),
             ContainsSubstring("ops[0].table")
                 && ContainsSubstring("'mul'")
                 && ContainsSubstring("needs 4 entries"));
  CHECK_THAT(message_of(R"({"name": "X", "size": 2, "ops": [
      {"name": "mul", "arity": 2, "table": [0, 1, 0, 2]}]})"),
             ContainsSubstring("ops[0].table[3]"));
  CHECK_THAT(message_of("{\"name\": \"X\",\n  \"size\": 2,,}"),
             ContainsSubstring("line 2"));
  CHECK_THAT(message_of(R"({"name": "X", "ops": []})"),
             ContainsSubstring("size"));
  CHECK_THAT(message_of(R"({"name": "X", "size": 2, "labels": ["a", "a"],
      "ops": []})"),
             ContainsSubstring("labels"));
  CHECK_THAT(message_of(R"([1, 2])"), ContainsSubstring("top level"));
  CHECK_THAT(message_of(R"({"name": "X", "size": 2, "ops": [
      {"name": "mul", "arity": -1, "table": []}]})"),
             ContainsSubstring("ops[0].arity"));
}

TEST_CASE("io: built-in references and files", "[io]") {
  CHECK(load_algebra("@B") == lib::implication_b());
  CHECK_THROWS_AS(load_algebra("@nope"), Error);
  CHECK_THROWS_AS(load_algebra("/nonexistent/file.json"), Error);

  auto const dir = std::filesystem::temp_directory_path() / "ualg_io_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "a.json") << render_algebra_json(lib::implication_a());
    std::ofstream(dir / "f.json")
        << R"({"from": "@B", "to": "a.json", "map": [0, 0, 1]})";
    std::ofstream(dir / "bad.json")
        << R"({"from": "@B", "to": "a.json", "map": [1, 0, 0]})";
  }
  auto const f = load_hom((dir / "f.json").string());
  CHECK(same_map(f, lib::example_f()));
  CHECK(load_algebra((dir / "a.json").string()) == lib::implication_a());
  CHECK_THROWS_AS(load_hom((dir / "bad.json").string()), Error);
  CHECK(same_map(load_hom("@g"), lib::example_g()));
  std::filesystem::remove_all(dir);
}

TEST_CASE("property: JSON round trip", "[property]") {
  test::Rng rng(43);
  std::vector<FiniteAlgebra> algs;
  for (auto const& n : lib::builtin_names()) {
    algs.push_back(*lib::builtin(n));
  }
  Signature const sig({{"k", 0}, {"f", 2}, {"g", 1}, {"t", 3}});
  for (int i = 0; i < 50; ++i) {
    auto a = test::random_algebra(rng, sig, test::uniform(rng, 1, 4));
    if (i % 2) {
      std::vector<std::string> labels;
      for (std::size_t j = 0; j < a.size(); ++j) {
        labels.push_back("e" + std::to_string(j));
      }
      a = a.with_labels(labels);
    }
    algs.push_back(a);
  }
  for (auto const& a : algs) {
    auto const text = render_algebra_json(a);
    auto const b    = parse_algebra_json(text);
    CHECK(b == a);
    CHECK(b.name() == a.name());
    CHECK(b.labels() == a.labels());
    CHECK(render_algebra_json(b) == text);
  }
}
