#include <doctest.h>

#include "cesr/constructions.hpp"
#include "cesr/error.hpp"
#include "cesr/registry.hpp"
#include "cesr/text_format.hpp"

using namespace cesr;

TEST_CASE("semiring files round trip") {
  const auto z4 = coefficient_semiring(CoeffDomain::integers_mod(4));
  const auto doc = parse_document(write_semiring(z4));
  REQUIRE(std::holds_alternative<FiniteSemiring>(doc));
  CHECK(std::get<FiniteSemiring>(doc) == z4);
}

TEST_CASE("magma files round trip with generators") {
  const auto m = example_base_magma();
  const std::vector<Elem> gens = {1, 2};
  const auto doc = parse_document(write_magma(m, gens));
  REQUIRE(std::holds_alternative<MagmaDocument>(doc));
  const auto& md = std::get<MagmaDocument>(doc);
  CHECK(md.magma.labels == m.labels);
  CHECK(md.magma.table == m.table);
  CHECK(md.generators == gens);
}

TEST_CASE("comments and blank lines are skipped") {
  const auto doc = parse_document("# c\n\ngroup\norder 1\n  elements e\n# x\ntable\ne\n");
  REQUIRE(std::holds_alternative<GroupDocument>(doc));
  CHECK(std::get<GroupDocument>(doc).labels == std::vector<std::string>{"e"});
}

TEST_CASE("parse errors carry the offending line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_document(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("semiring\norder 2\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1\nmul\n0 0\n0 1\n") == 8);
  CHECK(line_of("ring\n") == 1);
  CHECK(line_of("magma\norder 2\nelements a b\ntable\na q\nb a\n") == 5);
  CHECK(line_of("magma\norder 2\nelements a a\n") == 3);
  CHECK(line_of("magma\nelements a b\n") == 2);
}

TEST_CASE("the misaligned data file is rejected at its short row") {
  try {
    load_document(CESR_DATA_DIR "/misaligned.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 8);
    CHECK(std::string(e.what()).find("row has 1 entries, expected 2") != std::string::npos);
  }
}

TEST_CASE("missing files raise an error") { CHECK_THROWS_AS(load_document("/nonexistent/file.txt"), Error); }
