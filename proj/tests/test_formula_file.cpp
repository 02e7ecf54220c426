#include "vlie/formula_file.hpp"
#include "vlie/presets.hpp"

#include <doctest.h>

using namespace vlie;

namespace {

int error_line(std::string_view text) {
  try {
    parse_formula(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse a hand-written formula") {
  const FormulaSpec spec = parse_formula(R"(
# a rank-one Heisenberg formula
[meta]
name = "heis"

[[basis]]
name = "x"
weight = "1"

[[basis]]
name = "k"
weight = "0"

[[constant]]
u = "x"
n = 1
v = "x"
terms = [
  [0, "k", "1"],   # central term
]
)");
  CHECK(spec.name == "heis");
  CHECK(spec.dim() == 2);
  CHECK(spec.parity(spec.lookup("x")) == Parity::even);
  CHECK(spec.product(spec.lookup("x"), 1, spec.lookup("x")) == basis_element(spec.lookup("k")));
  CHECK(!spec.central);
}

TEST_CASE("export is canonical") {
  const std::string text = export_formula(virasoro());
  CHECK(text.find("name = \"virasoro\"") != std::string::npos);
  CHECK(text.find("terms = [[0, \"c\", \"1/2\"]]") != std::string::npos);
  CHECK(text.find("[conformal]") != std::string::npos);
  CHECK(export_formula(parse_formula(text)) == text);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("[[basis]]\nname = \"a\"\nweight = 1.5\n") == 3);
  CHECK(error_line("[[basis]]\nname = \"a\"\nweight = 3/2\n") == 3);
  CHECK(error_line("[meta]\nname = \"a\"\nname = \"b\"\n") == 3);
  CHECK(error_line("[nonsense]\n") == 1);
  CHECK(error_line("[[basis]]\nname = \"a\"\ncolour = \"red\"\n") == 3);
  CHECK(error_line("[[basis]]\nname = \"a\"\n\n[[constant]]\nu = \"a\"\nn = 0\nv = \"zz\"\nterms = []\n") > 0);
  CHECK(error_line("[[basis]]\nname = \"a\"\nparity = \"weird\"\n") == 3);
  CHECK(error_line("[[basis]]\nname = \"a\"\nweight = \"1\"\n[[constant]]\nu = \"a\"\nn = 1\nv = \"a\"\n"
                   "terms = [[0, \"a\", \"1\"]]\n") == 4);
}

TEST_CASE("duplicate constants are rejected") {
  const char* text =
      "[[basis]]\nname = \"a\"\n"
      "[[constant]]\nu = \"a\"\nn = 0\nv = \"a\"\nterms = []\n"
      "[[constant]]\nu = \"a\"\nn = 0\nv = \"a\"\nterms = []\n";
  CHECK(error_line(text) == 8);
}

TEST_CASE("load_formula reports missing files") {
  CHECK_THROWS_WITH_AS(load_formula("/nonexistent/file.toml"), doctest::Contains("cannot open"), Error);
}
