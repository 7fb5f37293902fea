#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "finconv/document.hpp"

using namespace finconv;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::filesystem::path> corpus() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(FINCONV_CORPUS_DIR)) {
    if (e.path().extension() == ".fcv") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void expect_parse_error(const std::string& text, std::size_t line) {
  try {
    parse_document(text);
    FAIL("accepted: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
  }
}

}  // namespace

TEST_CASE("corpus files are canonical and round-trip") {
  const auto files = corpus();
  REQUIRE(files.size() >= 5);
  for (const auto& f : files) {
    INFO(f.filename().string());
    const std::string text = read_file(f);
    const Document doc = load_document(f.string());
    CHECK(serialize(doc) == text);
    CHECK(serialize(parse_document(serialize(doc))) == text);
  }
}

TEST_CASE("all item kinds parse") {
  const Document doc = parse_document(
      "# a header line\n"
      "# property: none\n"
      "space S { points: p q; conv: p>q; }\n"
      "map f: S -> S { p=>q; q=>p; }\n"
      "group G { space: S; unit: p; table: p.p=p p.q=q q.p=q q.q=p; }\n"
      "cover C on S { {p} {q} }\n"
      "filter F on S { p q }\n");
  CHECK(doc.header.size() == 2);
  CHECK(doc.header_value("property") == "none");
  CHECK(doc.header_value("missing").empty());
  CHECK(doc.items().size() == 5);
  CHECK_FALSE(is_continuous(doc.map("f")));
  CHECK(doc.group("G").order() == 2);
  CHECK(doc.cover("C").pieces().size() == 2);
  CHECK(doc.filter("F").core().count() == 2);
  CHECK(doc.names<SpaceItem>() == std::vector<std::string>{"S"});
  CHECK_THROWS_AS(doc.space("f"), PreconditionError);
}

TEST_CASE("free layout and duplicate edges") {
  const Document a = parse_document("space S {\n  points : p q r ;\n  conv : p>q p>q q>r ;\n}\n");
  const Document b = parse_document("space S { points: p q r; conv: p>q q>r; }\n");
  CHECK(serialize(a) == serialize(b));
  CHECK(serialize(parse_document("space E { points: ; }\n")) == "space E { points:; }\n");
}

TEST_CASE("parse errors carry positions") {
  expect_parse_error("space S { points: p q; conv: p>z; }\n", 1);
  expect_parse_error("space S { points: p p; }\n", 1);
  expect_parse_error("\nspace S { points: p q;\n", 3);  // reported at end of input
  expect_parse_error("space S { points: p; }\nspace S { points: q; }\n", 2);
  expect_parse_error("space S { points: p q; }\nmap f: S -> S { p=>q; }\n", 2);
  expect_parse_error("space S { points: p q; }\nmap f: S -> S { p=>q; q=>q; p=>p; }\n", 2);
  expect_parse_error("space S { points: p q; }\nmap f: S -> T { p=>q; q=>q; }\n", 2);
  expect_parse_error("space S { points: p q; }\ngroup G { space: S; unit: p; table: p.p=p p.q=q q.p=q; }\n", 2);
  expect_parse_error("space S { points: p q; }\ngroup G { space: S; unit: p; table: p.p=p p.q=q q.p=q q.q=q; }\n", 2);
  expect_parse_error("space S { points: p q; }\ncover C on S { {p} }\n", 2);
  expect_parse_error("space S { points: p q; }\nfilter F on S { }\n", 2);
  expect_parse_error("widget W { }\n", 1);
  expect_parse_error("space S { points: p; foo: x; }\n", 1);
  try {
    parse_document("space S { points: p q; conv: p>z; }\n");
  } catch (const ParseError& e) {
    CHECK(e.column() > 1);
  }
}

TEST_CASE("labels") {
  CHECK(is_valid_label("a"));
  CHECK(is_valid_label("(0,a)"));
  CHECK(is_valid_label("[0|1]"));
  CHECK(is_valid_label("0:a"));
  CHECK_FALSE(is_valid_label(""));
  CHECK_FALSE(is_valid_label("a b"));
  CHECK_FALSE(is_valid_label("a>b"));
  CHECK_FALSE(is_valid_label("a->b"));
  CHECK_FALSE(is_valid_label("a="));
  CHECK_FALSE(is_valid_label("a."));
  CHECK_FALSE(is_valid_label("x#"));
  CHECK_FALSE(is_valid_label("key:"));
  Document d;
  CHECK_THROWS_AS(d.add_space("bad name", PseudoSpace::discrete(Carrier({"a"}))), PreconditionError);
  CHECK_THROWS_AS(d.add_space("S", PseudoSpace::discrete(Carrier({"a;b"}))), PreconditionError);
}

TEST_CASE("dot export marks failed transitivity") {
  const PseudoSpace chain = PseudoSpace::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  const std::string dot = to_dot(chain, "C");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("color=red") != std::string::npos);
  const std::string closed = to_dot(reflect_top(chain), "C");
  CHECK(closed.find("color=red") == std::string::npos);
  CHECK(closed.find("\"a\" -> \"a\"") == std::string::npos);
}
